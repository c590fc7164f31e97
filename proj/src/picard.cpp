#include "torifan/picard.hpp"

#include <algorithm>

#include "torifan/error.hpp"

namespace torifan {

namespace {

void require_shape(const PicardLattice& l) {
  const int n = l.rank();
  if (l.gram.rows != n || l.gram.cols != n)
    fail(errc::invalid_argument, "gram matrix does not match the basis");
  if (static_cast<int>(l.canonical.size()) != n)
    fail(errc::invalid_argument, "canonical class does not match the basis");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (l.gram.at(i, j) != l.gram.at(j, i))
        fail(errc::invalid_argument, "intersection form is not symmetric");
}

DivClass canonical_class(const PicardLattice& l) {
  DivClass k;
  k.coords.reserve(l.canonical.size());
  for (const Int& c : l.canonical) k.coords.emplace_back(c);
  return k;
}

}  // namespace

bool is_zero(const DivClass& a) {
  return std::all_of(a.coords.begin(), a.coords.end(),
                     [](const Rat& c) { return c == 0; });
}

PicardLattice ruled_quadric() {
  PicardLattice l;
  l.labels = {"h1", "h2"};
  l.gram = IntegerMatrix(2, 2);
  l.gram.at(0, 1) = 1;
  l.gram.at(1, 0) = 1;
  l.canonical = {Int(-2), Int(-2)};
  return l;
}

PicardLattice blow_up_point(const PicardLattice& l) {
  require_shape(l);
  const int n = l.rank();
  PicardLattice out;
  out.labels = l.labels;
  out.labels.push_back("e" + std::to_string(n - 1));
  out.gram = IntegerMatrix(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.gram.at(i, j) = l.gram.at(i, j);
  out.gram.at(n, n) = -1;
  out.canonical = l.canonical;
  out.canonical.emplace_back(1);
  return out;
}

DivClass pullback_class(const PicardLattice& to, const DivClass& a) {
  if (a.coords.size() > static_cast<std::size_t>(to.rank()))
    fail(errc::dimension_mismatch, "class longer than the lattice basis");
  DivClass out = a;
  out.coords.resize(static_cast<std::size_t>(to.rank()), Rat(0));
  return out;
}

Rat pairing(const PicardLattice& l, const DivClass& a, const DivClass& b) {
  require_shape(l);
  const int n = l.rank();
  if (static_cast<int>(a.coords.size()) != n || static_cast<int>(b.coords.size()) != n)
    fail(errc::dimension_mismatch, "class length differs from the lattice rank");
  Rat acc(0);
  for (int i = 0; i < n; ++i) {
    if (a.coords[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      const Int& g = l.gram.at(i, j);
      if (g == 0) continue;
      acc += a.coords[static_cast<std::size_t>(i)] * Rat(g) *
             b.coords[static_cast<std::size_t>(j)];
    }
  }
  return acc;
}

std::pair<int, int> signature(const PicardLattice& l) {
  require_shape(l);
  RationalMatrix g = RationalMatrix::from(l.gram);
  const int n = g.rows;
  auto swap_sym = [&](int a, int b) {
    for (int j = 0; j < n; ++j) std::swap(g.at(a, j), g.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(g.at(i, a), g.at(i, b));
  };
  auto add_sym = [&](int dst, int src, const Rat& f) {
    for (int j = 0; j < n; ++j) g.at(dst, j) += f * g.at(src, j);
    for (int i = 0; i < n; ++i) g.at(i, dst) += f * g.at(i, src);
  };
  for (int k = 0; k < n; ++k) {
    if (g.at(k, k) == 0) {
      int dp = -1;
      for (int i = k + 1; i < n && dp < 0; ++i)
        if (g.at(i, i) != 0) dp = i;
      if (dp >= 0) {
        swap_sym(k, dp);
      } else {
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (g.at(i, j) != 0) {
              bi = i;
              bj = j;
              break;
            }
        if (bi < 0) break;
        add_sym(bi, bj, Rat(1));
        if (bi != k) swap_sym(k, bi);
      }
    }
    for (int i = k + 1; i < n; ++i) {
      if (g.at(i, k) == 0) continue;
      add_sym(i, k, -g.at(i, k) / g.at(k, k));
    }
  }
  std::pair<int, int> out{0, 0};
  for (int i = 0; i < n; ++i) {
    if (g.at(i, i) > 0) ++out.first;
    if (g.at(i, i) < 0) ++out.second;
  }
  return out;
}

DoubleCoverLedger double_cover_ledger() {
  DoubleCoverLedger led;
  PicardLattice base = ruled_quadric();
  DivClass k0 = canonical_class(base);
  led.k2_initial = to_integer(pairing(base, k0, k0));

  PicardLattice l = base;
  for (int i = 0; i < 16; ++i) l = blow_up_point(l);
  led.lattice = l;
  DivClass k = canonical_class(l);
  led.k2_final = to_integer(pairing(l, k, k));

  // Grid divisor of bidegree (4,4); each of its sixteen nodes is blown up
  // and the strict transform loses two copies of the exceptional class.
  led.branch_class = pullback_class(l, DivClass{4, 4});
  for (int i = 2; i < l.rank(); ++i)
    led.branch_class.coords[static_cast<std::size_t>(i)] = -2;
  led.branch_even = std::all_of(
      led.branch_class.coords.begin(), led.branch_class.coords.end(),
      [](const Rat& c) { return is_integer(c) && to_integer(c) % 2 == 0; });
  led.half_branch.coords.reserve(led.branch_class.coords.size());
  for (const Rat& c : led.branch_class.coords)
    led.half_branch.coords.push_back(c / 2);

  led.k_plus_half_branch.coords.reserve(led.half_branch.coords.size());
  for (std::size_t i = 0; i < led.half_branch.coords.size(); ++i)
    led.k_plus_half_branch.coords.push_back(k.coords[i] + led.half_branch.coords[i]);
  led.k_plus_half_branch_zero = is_zero(led.k_plus_half_branch);

  // Strict transform of a vertical line through the four grid nodes it
  // carries; the first four exceptional labels are assigned to them.
  led.witness_curve = pullback_class(l, DivClass{0, 1});
  for (int i = 2; i < 6; ++i)
    led.witness_curve.coords[static_cast<std::size_t>(i)] = -1;
  DivClass minus_k;
  minus_k.coords.reserve(k.coords.size());
  for (const Rat& c : k.coords) minus_k.coords.push_back(-c);
  led.witness_degree = pairing(l, minus_k, led.witness_curve);
  led.witness_self = pairing(l, led.witness_curve, led.witness_curve);
  led.witness_canonical = pairing(l, k, led.witness_curve);
  return led;
}

}  // namespace torifan
