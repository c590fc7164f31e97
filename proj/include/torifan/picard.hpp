#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torifan/lattice.hpp"

namespace torifan {

/// Divisor-class lattice of a smooth projective surface: labelled basis,
/// symmetric intersection form, canonical class in basis coordinates.
struct PicardLattice {
  std::vector<std::string> labels;
  IntegerMatrix gram;
  std::vector<Int> canonical;

  int rank() const { return static_cast<int>(labels.size()); }
};

/// Rational divisor class written in the basis of a PicardLattice.
struct DivClass {
  std::vector<Rat> coords;

  DivClass() = default;
  explicit DivClass(std::vector<Rat> c) : coords(std::move(c)) {}
  DivClass(std::initializer_list<int> c) {
    coords.reserve(c.size());
    for (int x : c) coords.emplace_back(x);
  }

  friend bool operator==(const DivClass&, const DivClass&) = default;
};

bool is_zero(const DivClass& a);

/// Product of two lines: basis h1, h2 of the rulings, gram [[0,1],[1,0]],
/// canonical class (-2,-2).
PicardLattice ruled_quadric();

/// Point blow-up: appends an exceptional basis vector e_k of square -1,
/// orthogonal to the old basis; the canonical class gains +1 there.
PicardLattice blow_up_point(const PicardLattice& l);

/// Class pulled back along the blow-down to `to`: old coordinates padded
/// with zeros on the exceptional directions.  Throws dimension_mismatch if
/// the class has more coordinates than the lattice.
DivClass pullback_class(const PicardLattice& to, const DivClass& a);

/// Intersection number a . gram . b.  Throws dimension_mismatch.
Rat pairing(const PicardLattice& l, const DivClass& a, const DivClass& b);

/// (positive, negative) inertia of the intersection form, computed by exact
/// rational congruence diagonalization.
std::pair<int, int> signature(const PicardLattice& l);

/// Numerical ledger for the branched double cover over a blown-up quadric:
/// sixteen point blow-ups of the product of two lines, the strict transform
/// of a (4,4) grid divisor, and a vertical-line witness curve.
struct DoubleCoverLedger {
  PicardLattice lattice;        // after the sixteen blow-ups
  Int k2_initial = 0;           // canonical self-intersection before
  Int k2_final = 0;             // and after
  DivClass branch_class;        // grid pullback minus twice each exceptional
  bool branch_even = false;     // every coordinate divisible by two
  DivClass half_branch;
  DivClass k_plus_half_branch;  // canonical plus half the branch class
  bool k_plus_half_branch_zero = false;
  DivClass witness_curve;       // vertical line through four blown-up points
  Rat witness_degree;           // minus-canonical . witness
  Rat witness_self;             // witness . witness
  Rat witness_canonical;        // canonical . witness
};

/// Certifies: the branch class is even, canonical plus half the branch
/// vanishes identically, the canonical square drops from 8 to -8, and the
/// witness curve has anticanonical degree -2.
DoubleCoverLedger double_cover_ledger();

}  // namespace torifan
