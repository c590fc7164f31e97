#include "torifan/constructions.hpp"

#include <algorithm>

namespace torifan {

Fan projective_space_fan(int n) {
  if (n < 1) fail(errc::invalid_argument, "projective space of dimension " + std::to_string(n));
  Fan f;
  f.dim = n;
  for (int i = 0; i < n; ++i) {
    LatticeVector e;
    e.coords.assign(static_cast<std::size_t>(n), Int(0));
    e[i] = 1;
    f.rays.push_back(std::move(e));
  }
  LatticeVector neg;
  neg.coords.assign(static_cast<std::size_t>(n), Int(-1));
  f.rays.push_back(std::move(neg));
  for (int omit = 0; omit <= n; ++omit) {
    Cone c;
    for (int i = 0; i <= n; ++i)
      if (i != omit) c.rays.push_back(i);
    f.max_cones.push_back(std::move(c));
  }
  return f;
}

SplitBundleFan split_bundle_fan(const BundleSpec& spec) {
  const int s = spec.base_dim;
  const int k = static_cast<int>(spec.twists.size()) - 1;
  if (s < 1) fail(errc::invalid_argument, "bundle base dimension " + std::to_string(s));
  if (k < 1) fail(errc::invalid_argument, "bundle needs at least two twists");
  if (spec.twists[0] != 0)
    fail(errc::invalid_argument, "first twist must be normalized to zero");
  const int n = s + k;

  SplitBundleFan out;
  Fan& f = out.fan;
  f.dim = n;
  // Lifted base rays e_1..e_s, then the lift of the negative base ray whose
  // fiber part carries the twists.
  for (int i = 0; i < s; ++i) {
    LatticeVector e;
    e.coords.assign(static_cast<std::size_t>(n), Int(0));
    e[i] = 1;
    f.rays.push_back(std::move(e));
    out.base_rays.push_back(i);
  }
  {
    LatticeVector b0;
    b0.coords.assign(static_cast<std::size_t>(n), Int(0));
    for (int i = 0; i < s; ++i) b0[i] = -1;
    for (int j = 1; j <= k; ++j) b0[s + j - 1] = spec.twists[static_cast<std::size_t>(j)];
    f.rays.push_back(std::move(b0));
    out.base_rays.push_back(s);
  }
  // Fiber rays f_1..f_k, then f_0 = -(f_1 + ... + f_k).
  for (int j = 1; j <= k; ++j) {
    LatticeVector e;
    e.coords.assign(static_cast<std::size_t>(n), Int(0));
    e[s + j - 1] = 1;
    f.rays.push_back(std::move(e));
    out.fiber_rays.push_back(s + j);
    out.section_cone.rays.push_back(s + j);
  }
  {
    LatticeVector f0;
    f0.coords.assign(static_cast<std::size_t>(n), Int(0));
    for (int j = 0; j < k; ++j) f0[s + j] = -1;
    f.rays.push_back(std::move(f0));
    out.fiber_rays.push_back(s + k + 1);
  }

  // One cone per omitted (base ray, fiber ray) pair; index 0 stands for the
  // negative ray of each group.
  auto base_index = [&](int l) { return l == 0 ? s : l - 1; };
  auto fiber_index = [&](int m) { return m == 0 ? s + k + 1 : s + m; };
  for (int omit_b = 0; omit_b <= s; ++omit_b)
    for (int omit_f = 0; omit_f <= k; ++omit_f) {
      Cone c;
      for (int l = 0; l <= s; ++l)
        if (l != omit_b) c.rays.push_back(base_index(l));
      for (int m = 0; m <= k; ++m)
        if (m != omit_f) c.rays.push_back(fiber_index(m));
      std::sort(c.rays.begin(), c.rays.end());
      f.max_cones.push_back(std::move(c));
    }

  IntegerMatrix pr(s, n);
  for (int i = 0; i < s; ++i) pr.at(i, i) = 1;
  out.to_base = FanMap{pr, f, projective_space_fan(s)};
  return out;
}

Fan blow_up_invariant(const Fan& f, const std::vector<int>& cone_rays) {
  if (cone_rays.empty()) fail(errc::not_a_cone, "empty blow-up center");
  std::vector<int> center = cone_rays;
  std::sort(center.begin(), center.end());
  if (std::adjacent_find(center.begin(), center.end()) != center.end())
    fail(errc::not_a_cone, "repeated ray in blow-up center");
  for (int r : center)
    if (r < 0 || r >= static_cast<int>(f.rays.size()))
      fail(errc::not_a_cone, "center ray " + std::to_string(r) + " out of range");
  const bool is_face = std::any_of(
      f.max_cones.begin(), f.max_cones.end(), [&](const Cone& c) {
        return std::includes(c.rays.begin(), c.rays.end(), center.begin(), center.end());
      });
  if (!is_face) {
    Cone c{center};
    fail(errc::not_a_cone, str(c) + " is not a face of any maximal cone");
  }
  const auto smooth = is_smooth(f);
  if (!smooth)
    fail(errc::not_smooth,
         "cone " + str(f.max_cones[static_cast<std::size_t>(smooth.witness_cone)]) +
             " is not unimodular");
  LatticeVector v = f.rays[static_cast<std::size_t>(center[0])];
  for (std::size_t i = 1; i < center.size(); ++i)
    v = v + f.rays[static_cast<std::size_t>(center[i])];
  return star_subdivision(f, primitive(v));
}

Fan p1_bundle_fan(const Fan& base, const std::vector<Int>& heights) {
  if (heights.size() != base.rays.size())
    fail(errc::dimension_mismatch, std::to_string(heights.size()) + " heights for " +
                                       std::to_string(base.rays.size()) + " rays");
  Fan f;
  f.dim = base.dim + 1;
  for (std::size_t i = 0; i < base.rays.size(); ++i) {
    LatticeVector u = base.rays[i];
    u.coords.push_back(heights[i]);
    f.rays.push_back(std::move(u));
  }
  const int up = static_cast<int>(f.rays.size());
  {
    LatticeVector e;
    e.coords.assign(static_cast<std::size_t>(f.dim), Int(0));
    e[f.dim - 1] = 1;
    f.rays.push_back(std::move(e));
    LatticeVector down;
    down.coords.assign(static_cast<std::size_t>(f.dim), Int(0));
    down[f.dim - 1] = -1;
    f.rays.push_back(std::move(down));
  }
  for (const Cone& bc : base.max_cones)
    for (int vertical = 0; vertical < 2; ++vertical) {
      Cone c = bc;
      c.rays.push_back(up + vertical);
      f.max_cones.push_back(std::move(c));
    }
  return f;
}

Fan hirzebruch_fan(const Int& a) {
  return split_bundle_fan(BundleSpec{1, {0, a}}).fan;
}

Fan sato_fan() {
  Fan f;
  f.dim = 3;
  f.rays = {{1, 0, 1}, {0, 1, 0}, {-1, 3, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (auto rays : std::vector<std::vector<int>>{{0, 1, 4},
                                                 {0, 1, 5},
                                                 {1, 2, 4},
                                                 {1, 2, 5},
                                                 {2, 3, 4},
                                                 {2, 3, 5},
                                                 {0, 3, 4},
                                                 {0, 3, 5}})
    f.max_cones.push_back(Cone{std::move(rays)});
  return f;
}

Fan sato_blowup_fan() {
  return star_subdivision(star_subdivision(sato_fan(), LatticeVector{0, 1, 1}),
                          LatticeVector{0, 2, 1});
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({"p1", projective_space_fan(1)});
  out.push_back({"p2", projective_space_fan(2)});
  out.push_back({"p1xp1", hirzebruch_fan(0)});
  for (int a = 0; a <= 5; ++a)
    out.push_back({"f" + std::to_string(a), hirzebruch_fan(a)});
  out.push_back({"sato", sato_blowup_fan()});
  return out;
}

}  // namespace torifan
