#include "torifan/divisor.hpp"

#include <algorithm>

#include "combinatorics.hpp"
#include "fan_internal.hpp"

namespace torifan {

namespace {

void require_matching_coeffs(const InvariantDivisor& d) {
  if (d.coeffs.size() != d.fan.rays.size())
    fail(errc::dimension_mismatch,
         std::to_string(d.coeffs.size()) + " coefficients for " +
             std::to_string(d.fan.rays.size()) + " rays");
}

}  // namespace

InvariantDivisor anticanonical(const Fan& f) {
  return InvariantDivisor{f, std::vector<Rat>(f.rays.size(), Rat(1))};
}

InvariantDivisor character_divisor(const Fan& f, const RationalCovector& m) {
  InvariantDivisor d{f, {}};
  d.coeffs.reserve(f.rays.size());
  for (const LatticeVector& u : f.rays) d.coeffs.push_back(pair(m, u));
  return d;
}

InvariantDivisor scale(const Int& k, const InvariantDivisor& d) {
  InvariantDivisor r = d;
  for (Rat& a : r.coeffs) a *= Rat(k);
  return r;
}

InvariantDivisor add(const InvariantDivisor& a, const InvariantDivisor& b) {
  if (!(a.fan == b.fan)) fail(errc::incompatible_map, "divisor sum across different fans");
  require_matching_coeffs(a);
  require_matching_coeffs(b);
  InvariantDivisor r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

CartierData cartier_data(const InvariantDivisor& d) {
  require_matching_coeffs(d);
  CartierData cd;
  cd.per_cone.reserve(d.fan.max_cones.size());
  cd.integral = true;
  for (const Cone& c : d.fan.max_cones) {
    std::vector<Rat> b;
    b.reserve(c.rays.size());
    for (int r : c.rays) b.push_back(-d.coeffs[static_cast<std::size_t>(r)]);
    cd.per_cone.push_back(solve_rational(ray_matrix(d.fan, c), b));
    if (!is_integral(cd.per_cone.back())) cd.integral = false;
  }
  return cd;
}

HPolytope polytope(const InvariantDivisor& d) {
  require_matching_coeffs(d);
  HPolytope p;
  p.dim = d.fan.dim;
  p.normals = d.fan.rays;
  p.rhs.reserve(d.coeffs.size());
  for (const Rat& a : d.coeffs) p.rhs.push_back(-a);
  return p;
}

bool contains(const HPolytope& p, const RationalCovector& m) {
  if (m.dim() != p.dim)
    fail(errc::dimension_mismatch, "point has " + std::to_string(m.dim()) +
                                       " coordinates in dimension " + std::to_string(p.dim));
  for (std::size_t i = 0; i < p.normals.size(); ++i)
    if (pair(m, p.normals[i]) < p.rhs[i]) return false;
  return true;
}

std::vector<RationalCovector> vertices(const HPolytope& p) {
  const int n = p.dim;
  const int r = static_cast<int>(p.normals.size());
  std::vector<RationalCovector> out;
  detail::for_each_combination(r, n, [&](const std::vector<int>& pick) {
    IntegerMatrix a(n, n);
    std::vector<Rat> b;
    b.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const LatticeVector& u = p.normals[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      for (int j = 0; j < n; ++j) a.at(i, j) = u[j];
      b.push_back(p.rhs[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
    }
    if (det(a) == 0) return true;
    const RationalCovector m = solve_rational(a, b);
    if (contains(p, m) && std::find(out.begin(), out.end(), m) == out.end())
      out.push_back(m);
    return true;
  });
  return out;
}

namespace {

// Fourier-Motzkin feasibility for { m : <m, normal_i> >= rhs_i }.
bool feasible(const HPolytope& p) {
  // Rows (c_0..c_{n-1} | r) encode c.m >= r.
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < p.normals.size(); ++i) {
    std::vector<Rat> row;
    row.reserve(static_cast<std::size_t>(p.dim) + 1);
    for (int j = 0; j < p.dim; ++j) row.emplace_back(p.normals[i][j]);
    row.push_back(p.rhs[i]);
    rows.push_back(std::move(row));
  }
  for (int var = 0; var < p.dim; ++var) {
    std::vector<std::vector<Rat>> next;
    std::vector<const std::vector<Rat>*> pos, neg;
    for (const auto& row : rows) {
      const int s = sgn(row[static_cast<std::size_t>(var)]);
      if (s > 0)
        pos.push_back(&row);
      else if (s < 0)
        neg.push_back(&row);
      else
        next.push_back(row);
    }
    for (const auto* hi : pos)
      for (const auto* lo : neg) {
        // Positive combination cancelling the variable.
        const Rat a = (*hi)[static_cast<std::size_t>(var)];
        const Rat b = -(*lo)[static_cast<std::size_t>(var)];
        std::vector<Rat> row;
        row.reserve(static_cast<std::size_t>(p.dim) + 1);
        for (int j = 0; j <= p.dim; ++j)
          row.push_back(b * (*hi)[static_cast<std::size_t>(j)] +
                        a * (*lo)[static_cast<std::size_t>(j)]);
        next.push_back(std::move(row));
      }
    rows = std::move(next);
  }
  for (const auto& row : rows)
    if (row[static_cast<std::size_t>(p.dim)] > 0) return false;
  return true;
}

// Recession cone { x : <x, normal_i> >= 0 } trivial?
bool recession_trivial(const HPolytope& p) {
  const int n = p.dim;
  const int r = static_cast<int>(p.normals.size());
  RationalMatrix a(r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = Rat(p.normals[static_cast<std::size_t>(i)][j]);
  if (rank(a) < n) return false;  // lineality direction
  bool trivial = true;
  detail::for_each_combination(r, n - 1, [&](const std::vector<int>& pick) {
    RationalMatrix m(n - 1, n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = Rat(p.normals[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])][j]);
    const auto kernel = kernel_basis(m);
    if (kernel.size() != 1) return true;
    for (int sign = 0; sign < 2; ++sign) {
      bool inside = true;
      for (int i = 0; i < r && inside; ++i) {
        Rat acc = 0;
        for (int j = 0; j < n; ++j)
          acc += Rat(p.normals[static_cast<std::size_t>(i)][j]) * kernel[0][static_cast<std::size_t>(j)];
        if (sign) acc = -acc;
        if (acc < 0) inside = false;
      }
      if (inside) {
        trivial = false;
        return false;
      }
    }
    return true;
  });
  return trivial;
}

}  // namespace

bool is_bounded(const HPolytope& p) {
  if (recession_trivial(p)) return true;
  return !feasible(p);  // empty sets are bounded
}

std::optional<int> affine_dim(const HPolytope& p) {
  if (!is_bounded(p)) fail(errc::unbounded_polytope, "affine dimension of unbounded set");
  const auto verts = vertices(p);
  if (verts.empty()) return std::nullopt;
  RationalMatrix diffs(static_cast<int>(verts.size()) - 1, p.dim);
  for (std::size_t i = 1; i < verts.size(); ++i)
    for (int j = 0; j < p.dim; ++j) diffs.at(static_cast<int>(i) - 1, j) = verts[i][j] - verts[0][j];
  return rank(diffs);
}

Int count_lattice_points(const HPolytope& p) {
  if (!is_bounded(p))
    fail(errc::unbounded_polytope, "lattice point count of unbounded set");
  const auto verts = vertices(p);
  if (verts.empty()) return 0;
  std::vector<Int> lo(static_cast<std::size_t>(p.dim)), hi(static_cast<std::size_t>(p.dim));
  for (int j = 0; j < p.dim; ++j) {
    Rat mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v.coords[static_cast<std::size_t>(j)]);
      mx = std::max(mx, v.coords[static_cast<std::size_t>(j)]);
    }
    lo[static_cast<std::size_t>(j)] = ceil_int(mn);
    hi[static_cast<std::size_t>(j)] = floor_int(mx);
  }
  Int count = 0;
  RationalCovector m;
  m.coords.assign(static_cast<std::size_t>(p.dim), Rat(0));
  std::vector<Int> cur = lo;
  for (;;) {
    bool in_box = true;
    for (int j = 0; j < p.dim; ++j)
      if (cur[static_cast<std::size_t>(j)] > hi[static_cast<std::size_t>(j)]) in_box = false;
    if (!in_box) break;
    for (int j = 0; j < p.dim; ++j) m[j] = Rat(cur[static_cast<std::size_t>(j)]);
    if (contains(p, m)) ++count;
    // Odometer step over the box.
    int j = p.dim - 1;
    while (j >= 0) {
      ++cur[static_cast<std::size_t>(j)];
      if (cur[static_cast<std::size_t>(j)] <= hi[static_cast<std::size_t>(j)]) break;
      cur[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
  }
  return count;
}

BpfVerdict is_basepoint_free(const InvariantDivisor& d) {
  require_matching_coeffs(d);
  const CartierData cd = cartier_data(d);
  if (!cd.integral) fail(errc::not_cartier, "divisor has fractional Cartier data");
  if (!detail::complete_cheap(d.fan))
    fail(errc::non_complete_fan, "fan does not cover the space");
  const HPolytope p = polytope(d);
  for (std::size_t ci = 0; ci < cd.per_cone.size(); ++ci) {
    const RationalCovector& m = cd.per_cone[ci];
    for (std::size_t ri = 0; ri < p.normals.size(); ++ri)
      if (pair(m, p.normals[ri]) < p.rhs[ri])
        return BpfVerdict{false, static_cast<int>(ci), static_cast<int>(ri)};
  }
  return BpfVerdict{true, -1, -1};
}

int kodaira_dimension(const InvariantDivisor& d) {
  const BpfVerdict bpf = is_basepoint_free(d);
  if (!bpf)
    fail(errc::not_nef, "cone " + str(d.fan.max_cones[static_cast<std::size_t>(bpf.witness_cone)]) +
                            " violates inequality of ray " + std::to_string(bpf.witness_ray));
  // Basepoint-free data keeps every covector inside the section polytope, so
  // the polytope is nonempty and bounded (complete fans span positively).
  return affine_dim(polytope(d)).value();
}

InvariantDivisor pullback(const FanMap& m, const InvariantDivisor& d) {
  require_matching_coeffs(d);
  if (!(d.fan == m.target))
    fail(errc::incompatible_map, "divisor does not live on the map's target fan");
  const CartierData cd = cartier_data(d);
  if (!cd.integral) fail(errc::not_cartier, "pullback needs Cartier data");
  const MapVerdict ok = check_fan_map(m);
  if (!ok)
    fail(errc::incompatible_map,
         "source cone " + std::to_string(ok.witness_cone) + " maps into no target cone");

  std::vector<std::optional<Rat>> coeffs(m.source.rays.size());
  for (const Cone& sc : m.source.max_cones) {
    std::vector<LatticeVector> images;
    images.reserve(sc.rays.size());
    for (int r : sc.rays)
      images.push_back(apply(m.matrix, m.source.rays[static_cast<std::size_t>(r)]));
    int target_cone = -1;
    for (std::size_t ti = 0; ti < m.target.max_cones.size(); ++ti) {
      bool all_in = true;
      for (const LatticeVector& w : images)
        if (!cone_contains(m.target, m.target.max_cones[ti], w)) {
          all_in = false;
          break;
        }
      if (all_in) {
        target_cone = static_cast<int>(ti);
        break;
      }
    }
    const RationalCovector pulled =
        apply_transpose(m.matrix, cd.per_cone[static_cast<std::size_t>(target_cone)]);
    for (std::size_t k = 0; k < sc.rays.size(); ++k) {
      const int r = sc.rays[k];
      const Rat a = -pair(pulled, m.source.rays[static_cast<std::size_t>(r)]);
      auto& slot = coeffs[static_cast<std::size_t>(r)];
      if (!slot) {
        slot = a;
      } else if (*slot != a) {
        // Cartier support functions agree on shared faces; disagreement here
        // means the map was not a morphism after all.
        fail(errc::incompatible_map, "inconsistent coefficient on ray " + std::to_string(r));
      }
    }
  }
  InvariantDivisor out{m.source, {}};
  out.coeffs.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i]) fail(errc::incompatible_map, "ray " + std::to_string(i) + " lies in no cone");
    out.coeffs.push_back(*coeffs[i]);
  }
  return out;
}

}  // namespace torifan
