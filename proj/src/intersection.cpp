#include "torifan/intersection.hpp"

#include <algorithm>

namespace torifan {

std::string str(const WallCurve& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.wall_rays.size(); ++i)
    s += (i ? "," : "") + std::to_string(w.wall_rays[i]);
  return s + "}";
}

namespace {

int apex_of(const Cone& c, const std::vector<int>& wall) {
  for (int r : c.rays)
    if (!std::binary_search(wall.begin(), wall.end(), r)) return r;
  return -1;
}

void require_unimodular(const Fan& f, int cone_index) {
  if (abs(det(ray_matrix(f, f.max_cones[static_cast<std::size_t>(cone_index)]))) != 1)
    fail(errc::not_smooth,
         "cone " + str(f.max_cones[static_cast<std::size_t>(cone_index)]) + " is not unimodular");
}

Rat jump_number(const Fan& f, const CartierData& cd, const WallCurve& w) {
  const RationalCovector jump = cd.per_cone[static_cast<std::size_t>(w.left)] -
                                cd.per_cone[static_cast<std::size_t>(w.right)];
  return pair(jump, f.rays[static_cast<std::size_t>(w.extra_right)]);
}

}  // namespace

std::vector<WallCurve> wall_curves(const Fan& f) {
  std::vector<WallCurve> out;
  for (const Wall& w : walls(f)) {
    WallCurve c;
    c.wall_rays = w.rays;
    c.left = w.left;
    c.right = w.right;
    c.extra_left = apex_of(f.max_cones[static_cast<std::size_t>(w.left)], w.rays);
    c.extra_right = apex_of(f.max_cones[static_cast<std::size_t>(w.right)], w.rays);
    out.push_back(std::move(c));
  }
  return out;
}

Rat wall_number(const InvariantDivisor& d, const WallCurve& w) {
  const Fan& f = d.fan;
  const int ncones = static_cast<int>(f.max_cones.size());
  const int nrays = static_cast<int>(f.rays.size());
  if (w.left < 0 || w.left >= ncones || w.right < 0 || w.right >= ncones ||
      w.extra_left < 0 || w.extra_left >= nrays || w.extra_right < 0 ||
      w.extra_right >= nrays)
    fail(errc::invalid_argument, "wall " + str(w) + " does not belong to the fan");
  require_unimodular(f, w.left);
  require_unimodular(f, w.right);
  const CartierData cd = cartier_data(d);
  if (!cd.integral) fail(errc::not_cartier, "wall number needs Cartier data");
  return jump_number(f, cd, w);
}

namespace {

WallWitness scan_walls(const InvariantDivisor& d) {
  const Fan& f = d.fan;
  for (int ci = 0; ci < static_cast<int>(f.max_cones.size()); ++ci) require_unimodular(f, ci);
  const CartierData cd = cartier_data(d);
  if (!cd.integral) fail(errc::not_cartier, "wall numbers need Cartier data");
  const auto curves = wall_curves(f);
  WallWitness min;
  bool first = true;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Rat v = jump_number(f, cd, curves[i]);
    if (first || v < min.value) {
      min = WallWitness{curves[i], i, v};
      first = false;
    }
  }
  return min;
}

}  // namespace

NefVerdict is_nef(const InvariantDivisor& d) {
  NefVerdict out;
  out.min = scan_walls(d);
  out.value = out.min.value >= 0;
  return out;
}

AmpleVerdict is_ample(const InvariantDivisor& d) {
  AmpleVerdict out;
  out.min = scan_walls(d);
  out.value = out.min.value > 0;
  return out;
}

}  // namespace torifan
