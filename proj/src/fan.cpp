#include "torifan/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "combinatorics.hpp"
#include "fan_internal.hpp"

namespace torifan {

std::string str(const Cone& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.rays[i]);
  }
  return s + "}";
}

IntegerMatrix ray_matrix(const Fan& f, const Cone& c) {
  IntegerMatrix m(static_cast<int>(c.rays.size()), f.dim);
  for (int i = 0; i < m.rows; ++i) {
    const LatticeVector& u = f.rays[static_cast<std::size_t>(c.rays[static_cast<std::size_t>(i)])];
    for (int j = 0; j < f.dim; ++j) m.at(i, j) = u[j];
  }
  return m;
}

std::vector<Rat> cone_coordinates(const Fan& f, const Cone& c, const LatticeVector& v) {
  std::vector<Rat> b;
  b.reserve(static_cast<std::size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) b.emplace_back(v[i]);
  return solve_rational(transpose(ray_matrix(f, c)), b).coords;
}

bool cone_contains(const Fan& f, const Cone& c, const LatticeVector& v) {
  for (const Rat& y : cone_coordinates(f, c, v))
    if (y < 0) return false;
  return true;
}

namespace {

using Kind = Diagnostic::Kind;

void note(std::vector<Diagnostic>& out, Kind kind, std::string message) {
  out.push_back(Diagnostic{kind, std::move(message)});
}

std::vector<int> shared_rays(const Cone& a, const Cone& b) {
  std::vector<int> s;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                        std::back_inserter(s));
  return s;
}

// Rows of inverse(transpose(ray matrix)): x lies in the cone iff rows(x) >= 0.
RationalMatrix facet_normals(const Fan& f, const Cone& c) {
  return inverse(RationalMatrix::from(transpose(ray_matrix(f, c))));
}

// True when cone(a) and cone(b) meet only along cone(shared).  Both cones are
// known nondegenerate here.
bool meets_only_in_shared_face(const Fan& f, const Cone& a, const Cone& b,
                               const std::vector<int>& shared) {
  const int n = f.dim;
  if (static_cast<int>(shared.size()) == n - 1) {
    // Ridge case: one normal w of the shared hyperplane; the two extra rays
    // must lie strictly on opposite sides.
    RationalMatrix w(n - 1, n);
    for (int i = 0; i < n - 1; ++i) {
      const LatticeVector& u = f.rays[static_cast<std::size_t>(shared[static_cast<std::size_t>(i)])];
      for (int j = 0; j < n; ++j) w.at(i, j) = Rat(u[j]);
    }
    const auto kernel = kernel_basis(w);
    if (kernel.size() != 1) return false;  // shared rays dependent
    auto side = [&](int ray) {
      const LatticeVector& u = f.rays[static_cast<std::size_t>(ray)];
      Rat acc = 0;
      for (int j = 0; j < n; ++j) acc += kernel[0][static_cast<std::size_t>(j)] * Rat(u[j]);
      return sgn(acc);
    };
    auto extra_of = [&](const Cone& c) {
      for (int r : c.rays)
        if (!std::binary_search(shared.begin(), shared.end(), r)) return r;
      return -1;
    };
    return side(extra_of(a)) * side(extra_of(b)) < 0;
  }

  // General case: enumerate the extreme rays of the intersection cone and
  // demand each lies in cone(shared).  Every extreme ray is tight on some
  // n-1 independent inequalities among the 2n facet normals.
  const RationalMatrix na = facet_normals(f, a);
  const RationalMatrix nb = facet_normals(f, b);
  auto row_of = [&](int r, int j) -> const Rat& {
    return r < n ? na.at(r, j) : nb.at(r - n, j);
  };
  auto in_shared = [&](const std::vector<Rat>& x) {
    // Coordinates along rays outside the shared set must vanish (checked in
    // both cones; either suffices, both kept for symmetry).
    for (int i = 0; i < n; ++i) {
      Rat ya = 0, yb = 0;
      for (int j = 0; j < n; ++j) {
        ya += na.at(i, j) * x[static_cast<std::size_t>(j)];
        yb += nb.at(i, j) * x[static_cast<std::size_t>(j)];
      }
      if (ya != 0 &&
          !std::binary_search(shared.begin(), shared.end(), a.rays[static_cast<std::size_t>(i)]))
        return false;
      if (yb != 0 &&
          !std::binary_search(shared.begin(), shared.end(), b.rays[static_cast<std::size_t>(i)]))
        return false;
    }
    return true;
  };
  bool ok = true;
  detail::for_each_combination(2 * n, n - 1, [&](const std::vector<int>& rows) {
    RationalMatrix m(n - 1, n);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = row_of(rows[static_cast<std::size_t>(i)], j);
    const auto kernel = kernel_basis(m);
    if (kernel.size() != 1) return true;  // not a ridge direction, keep going
    for (int sign = 0; sign < 2; ++sign) {
      std::vector<Rat> x = kernel[0];
      if (sign)
        for (Rat& q : x) q = -q;
      bool inside = true;
      for (int r = 0; r < 2 * n && inside; ++r) {
        Rat acc = 0;
        for (int j = 0; j < n; ++j) acc += row_of(r, j) * x[static_cast<std::size_t>(j)];
        if (acc < 0) inside = false;
      }
      if (inside && !in_shared(x)) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

}  // namespace

std::vector<Diagnostic> validate(const Fan& f) {
  std::vector<Diagnostic> out;
  if (f.dim < 1) {
    note(out, Kind::bad_dimension, "fan dimension " + std::to_string(f.dim));
    return out;
  }
  if (f.rays.empty() || f.max_cones.empty()) {
    note(out, Kind::empty_fan, "fan has no rays or no maximal cones");
    return out;
  }

  const int nrays = static_cast<int>(f.rays.size());
  bool shape_ok = true;
  for (int i = 0; i < nrays; ++i) {
    const LatticeVector& u = f.rays[static_cast<std::size_t>(i)];
    if (u.dim() != f.dim) {
      note(out, Kind::ray_dimension,
           "ray " + std::to_string(i) + " has " + std::to_string(u.dim()) + " coordinates");
      shape_ok = false;
      continue;
    }
    if (u.is_zero()) {
      note(out, Kind::zero_ray, "ray " + std::to_string(i) + " is zero");
      shape_ok = false;
    } else if (primitive(u) != u) {
      note(out, Kind::non_primitive_ray, "ray " + std::to_string(i) + " = " + str(u));
      shape_ok = false;
    }
    for (int j = 0; j < i; ++j)
      if (f.rays[static_cast<std::size_t>(j)] == u) {
        note(out, Kind::duplicate_ray,
             "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
        shape_ok = false;
      }
  }

  std::vector<bool> used(static_cast<std::size_t>(nrays), false);
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    const Cone& c = f.max_cones[ci];
    bool indices_ok = true;
    for (std::size_t k = 0; k < c.rays.size(); ++k) {
      const int r = c.rays[k];
      if (r < 0 || r >= nrays) {
        note(out, Kind::cone_index,
             "cone " + std::to_string(ci) + " references ray " + std::to_string(r));
        indices_ok = false;
      } else {
        used[static_cast<std::size_t>(r)] = true;
        if (k > 0 && c.rays[k - 1] >= r) {
          note(out, Kind::cone_index,
               "cone " + std::to_string(ci) + " indices not strictly increasing");
          indices_ok = false;
        }
      }
    }
    if (static_cast<int>(c.rays.size()) != f.dim) {
      note(out, Kind::cone_size,
           "cone " + std::to_string(ci) + " has " + std::to_string(c.rays.size()) +
               " rays in dimension " + std::to_string(f.dim));
      indices_ok = false;
    }
    if (!indices_ok) shape_ok = false;
  }
  for (int i = 0; i < nrays; ++i)
    if (!used[static_cast<std::size_t>(i)])
      note(out, Kind::unused_ray, "ray " + std::to_string(i) + " lies in no maximal cone");
  if (!shape_ok) return out;

  bool nondegenerate = true;
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    if (det(ray_matrix(f, f.max_cones[ci])) == 0) {
      note(out, Kind::degenerate_cone,
           "cone " + std::to_string(ci) + " has linearly dependent rays");
      nondegenerate = false;
    }
  }
  if (!nondegenerate) return out;

  for (std::size_t i = 0; i < f.max_cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.max_cones.size(); ++j) {
      const Cone& a = f.max_cones[i];
      const Cone& b = f.max_cones[j];
      const auto shared = shared_rays(a, b);
      if (static_cast<int>(shared.size()) == f.dim) {
        note(out, Kind::duplicate_cone,
             "cones " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        continue;
      }
      if (!meets_only_in_shared_face(f, a, b, shared))
        note(out, Kind::cone_overlap,
             "cones " + std::to_string(i) + " and " + std::to_string(j) +
                 " intersect outside their shared face");
    }
  return out;
}

void require_valid(const Fan& f) {
  const auto diagnostics = validate(f);
  if (diagnostics.empty()) return;
  fail(errc::invalid_fan, diagnostics.front().message + " (" +
                              std::to_string(diagnostics.size()) + " diagnostic(s))");
}

SmoothVerdict is_smooth(const Fan& f) {
  require_valid(f);
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    const auto snf = smith_normal_form(ray_matrix(f, f.max_cones[ci]));
    for (int i = 0; i < f.dim; ++i)
      if (snf.s.at(i, i) != 1) return SmoothVerdict{false, static_cast<int>(ci)};
  }
  return SmoothVerdict{true, -1};
}

namespace detail {

std::map<std::vector<int>, std::vector<int>> ridge_incidence(const Fan& f) {
  std::map<std::vector<int>, std::vector<int>> m;
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    const Cone& c = f.max_cones[ci];
    for (std::size_t k = 0; k < c.rays.size(); ++k) {
      std::vector<int> ridge = c.rays;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(k));
      m[ridge].push_back(static_cast<int>(ci));
    }
  }
  return m;
}

bool complete_cheap(const Fan& f) {
  if (f.max_cones.empty()) return false;
  std::vector<std::vector<int>> adjacency(f.max_cones.size());
  for (const auto& [ridge, cones] : ridge_incidence(f)) {
    if (cones.size() != 2) return false;
    adjacency[static_cast<std::size_t>(cones[0])].push_back(cones[1]);
    adjacency[static_cast<std::size_t>(cones[1])].push_back(cones[0]);
  }
  std::vector<bool> seen(f.max_cones.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int d : adjacency[static_cast<std::size_t>(c)])
      if (!seen[static_cast<std::size_t>(d)]) {
        seen[static_cast<std::size_t>(d)] = true;
        ++visited;
        stack.push_back(d);
      }
  }
  return visited == f.max_cones.size();
}

}  // namespace detail

bool is_complete(const Fan& f) {
  require_valid(f);
  return detail::complete_cheap(f);
}

std::vector<Wall> walls(const Fan& f) {
  std::vector<Wall> out;
  for (const auto& [ridge, cones] : detail::ridge_incidence(f)) {
    if (cones.size() != 2) {
      std::string s = "{";
      for (std::size_t i = 0; i < ridge.size(); ++i)
        s += (i ? "," : "") + std::to_string(ridge[i]);
      fail(errc::non_complete_fan, "ridge " + s + "} lies in " +
                                       std::to_string(cones.size()) + " maximal cone(s)");
    }
    out.push_back(Wall{ridge, cones[0], cones[1]});
  }
  return out;  // std::map iteration order: sorted by ray-index set
}

Fan star_subdivision(const Fan& f, const LatticeVector& v) {
  if (v.dim() != f.dim)
    fail(errc::dimension_mismatch, "subdivision point has " + std::to_string(v.dim()) +
                                       " coordinates in dimension " + std::to_string(f.dim));
  if (v.is_zero()) fail(errc::zero_vector, "subdivision point is zero");
  if (primitive(v) != v)
    fail(errc::invalid_argument, "subdivision point " + str(v) + " is not primitive");
  for (const LatticeVector& u : f.rays)
    if (u == v) fail(errc::duplicate_ray, str(v) + " is already a ray");

  std::vector<std::optional<std::vector<Rat>>> inside(f.max_cones.size());
  bool found = false;
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    auto y = cone_coordinates(f, f.max_cones[ci], v);
    if (std::all_of(y.begin(), y.end(), [](const Rat& q) { return q >= 0; })) {
      inside[ci] = std::move(y);
      found = true;
    }
  }
  if (!found) fail(errc::ray_outside_support, str(v) + " lies outside the support");

  Fan g;
  g.dim = f.dim;
  g.rays = f.rays;
  g.rays.push_back(v);
  const int vi = static_cast<int>(g.rays.size()) - 1;
  for (std::size_t ci = 0; ci < f.max_cones.size(); ++ci) {
    const Cone& c = f.max_cones[ci];
    if (!inside[ci]) {
      g.max_cones.push_back(c);
      continue;
    }
    const auto& y = *inside[ci];
    // Join v with every facet of c not containing it; coefficient zero means
    // v already lies on the facet spanned by the remaining rays.
    for (std::size_t k = 0; k < c.rays.size(); ++k) {
      if (y[k] == 0) continue;
      Cone piece;
      piece.rays.reserve(c.rays.size());
      for (std::size_t l = 0; l < c.rays.size(); ++l)
        if (l != k) piece.rays.push_back(c.rays[l]);
      piece.rays.push_back(vi);
      std::sort(piece.rays.begin(), piece.rays.end());
      g.max_cones.push_back(std::move(piece));
    }
  }
  return g;
}

MapVerdict check_fan_map(const FanMap& m) {
  if (m.matrix.rows != m.target.dim || m.matrix.cols != m.source.dim)
    fail(errc::dimension_mismatch,
         "map matrix is " + std::to_string(m.matrix.rows) + "x" +
             std::to_string(m.matrix.cols) + " for " + std::to_string(m.source.dim) +
             " -> " + std::to_string(m.target.dim));
  for (std::size_t si = 0; si < m.source.max_cones.size(); ++si) {
    const Cone& sc = m.source.max_cones[si];
    std::vector<LatticeVector> images;
    images.reserve(sc.rays.size());
    for (int r : sc.rays)
      images.push_back(apply(m.matrix, m.source.rays[static_cast<std::size_t>(r)]));
    bool covered = false;
    for (const Cone& tc : m.target.max_cones) {
      bool all_in = true;
      for (const LatticeVector& w : images)
        if (!cone_contains(m.target, tc, w)) {
          all_in = false;
          break;
        }
      if (all_in) {
        covered = true;
        break;
      }
    }
    if (!covered) return MapVerdict{false, static_cast<int>(si)};
  }
  return MapVerdict{true, -1};
}

}  // namespace torifan
