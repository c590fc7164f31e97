#include <doctest.h>

#include <random>
#include <vector>

#include "torifan/picard.hpp"

using namespace torifan;

namespace {

DivClass cls(std::vector<int> v) {
  DivClass d;
  d.coords.reserve(v.size());
  for (int x : v) d.coords.emplace_back(x);
  return d;
}

DivClass canonical(const PicardLattice& l) {
  DivClass k;
  for (const Int& c : l.canonical) k.coords.emplace_back(c);
  return k;
}

}  // namespace

TEST_CASE("ruled quadric lattice") {
  PicardLattice l = ruled_quadric();
  CHECK(l.rank() == 2);
  CHECK(l.labels == std::vector<std::string>{"h1", "h2"});
  CHECK(l.gram.at(0, 0) == 0);
  CHECK(l.gram.at(0, 1) == 1);
  CHECK(l.gram.at(1, 0) == 1);
  CHECK(l.gram.at(1, 1) == 0);
  CHECK(l.canonical == std::vector<Int>{-2, -2});

  DivClass k = canonical(l);
  CHECK(pairing(l, k, k) == 8);
  DivClass fiber = cls({0, 1});
  CHECK(pairing(l, fiber, fiber) == 0);
  CHECK(pairing(l, k, fiber) == -2);
  CHECK(signature(l) == std::pair<int, int>{1, 1});
}

TEST_CASE("point blow-up bookkeeping") {
  PicardLattice l = blow_up_point(ruled_quadric());
  CHECK(l.rank() == 3);
  CHECK(l.labels.back() == "e1");
  CHECK(l.gram.at(2, 2) == -1);
  CHECK(l.gram.at(0, 2) == 0);
  CHECK(l.gram.at(2, 1) == 0);
  CHECK(l.canonical == std::vector<Int>{-2, -2, 1});
  DivClass k = canonical(l);
  CHECK(pairing(l, k, k) == 7);
}

TEST_CASE("canonical square drops by one per blow-up and signature grows") {
  PicardLattice l = ruled_quadric();
  for (int i = 0; i <= 16; ++i) {
    DivClass k = canonical(l);
    CHECK(pairing(l, k, k) == 8 - i);
    CHECK(signature(l) == std::pair<int, int>{1, 1 + i});
    l = blow_up_point(l);
  }
  CHECK(l.labels.back() == "e17");
}

TEST_CASE("pullback isometry and exceptional orthogonality") {
  PicardLattice base = ruled_quadric();
  PicardLattice l = base;
  for (int i = 0; i < 5; ++i) l = blow_up_point(l);

  std::mt19937 engine(59);
  auto coeff = [&]() { return static_cast<int>(engine() % 11) - 5; };
  for (int trial = 0; trial < 50; ++trial) {
    DivClass a = cls({coeff(), coeff()});
    DivClass b = cls({coeff(), coeff()});
    DivClass ua = pullback_class(l, a);
    DivClass ub = pullback_class(l, b);
    CHECK(pairing(l, ua, ub) == pairing(base, a, b));
    for (int e = 2; e < l.rank(); ++e) {
      DivClass exc;
      exc.coords.assign(static_cast<std::size_t>(l.rank()), Rat(0));
      exc.coords[static_cast<std::size_t>(e)] = 1;
      CHECK(pairing(l, ua, exc) == 0);
    }
  }
}

TEST_CASE("pairing rejects mismatched lengths") {
  PicardLattice l = ruled_quadric();
  CHECK_THROWS_WITH_AS(static_cast<void>(pairing(l, cls({1, 2, 3}), cls({1, 2}))),
                       doctest::Contains("rank"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(pullback_class(l, cls({1, 2, 3}))),
                       doctest::Contains("longer"), Error);
}

TEST_CASE("signature of diagonal and degenerate forms") {
  PicardLattice l;
  l.labels = {"a", "b", "c"};
  l.gram = IntegerMatrix(3, 3);
  l.gram.at(0, 0) = 2;
  l.gram.at(1, 1) = -3;
  l.canonical = {Int(0), Int(0), Int(0)};
  CHECK(signature(l) == std::pair<int, int>{1, 1});
}

TEST_CASE("double cover ledger") {
  DoubleCoverLedger led = double_cover_ledger();
  CHECK(led.lattice.rank() == 18);
  CHECK(led.k2_initial == 8);
  CHECK(led.k2_final == -8);

  CHECK(led.branch_class.coords.size() == 18);
  CHECK(led.branch_class.coords[0] == 4);
  CHECK(led.branch_class.coords[1] == 4);
  CHECK(led.branch_class.coords[17] == -2);
  CHECK(led.branch_even);
  CHECK(led.half_branch.coords[0] == 2);
  CHECK(led.half_branch.coords[5] == -1);

  CHECK(led.k_plus_half_branch_zero);
  CHECK(is_zero(led.k_plus_half_branch));

  CHECK(led.witness_curve.coords[1] == 1);
  CHECK(led.witness_curve.coords[2] == -1);
  CHECK(led.witness_curve.coords[5] == -1);
  CHECK(led.witness_curve.coords[6] == 0);
  CHECK(led.witness_degree == -2);
  CHECK(led.witness_self == -4);
  CHECK(led.witness_canonical == 2);
  // Genus-zero consistency: self-intersection plus canonical degree.
  CHECK(led.witness_self + led.witness_canonical == -2);

  CHECK(signature(led.lattice) == std::pair<int, int>{1, 17});
}
