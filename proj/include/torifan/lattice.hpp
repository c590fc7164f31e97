#pragma once

#include <initializer_list>
#include <vector>

#include "torifan/numeric.hpp"

namespace torifan {

/// Point of the ambient lattice N (integer coordinates).
struct LatticeVector {
  std::vector<Int> coords;

  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> c) : coords(std::move(c)) {}
  LatticeVector(std::initializer_list<int> c) {
    coords.reserve(c.size());
    for (int x : c) coords.emplace_back(x);
  }

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;
  Int& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
  const Int& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Int& k, const LatticeVector& v);
std::string str(const LatticeVector& v);

/// Element of the dual M_Q = Hom(N, Z) ⊗ Q.
struct RationalCovector {
  std::vector<Rat> coords;

  RationalCovector() = default;
  explicit RationalCovector(std::vector<Rat> c) : coords(std::move(c)) {}
  RationalCovector(std::initializer_list<int> c) {
    coords.reserve(c.size());
    for (int x : c) coords.emplace_back(x);
  }

  int dim() const { return static_cast<int>(coords.size()); }
  Rat& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }
  const Rat& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  friend bool operator==(const RationalCovector&, const RationalCovector&) = default;
};

RationalCovector operator-(const RationalCovector& a, const RationalCovector& b);
std::string str(const RationalCovector& m);

/// Natural pairing <m, v>.  Dimensions must agree.
Rat pair(const RationalCovector& m, const LatticeVector& v);
bool is_integral(const RationalCovector& m);

/// Dense row-major integer matrix.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c);
  static IntegerMatrix identity(int n);

  Int& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * cols + j];
  }
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

IntegerMatrix transpose(const IntegerMatrix& a);
IntegerMatrix mul(const IntegerMatrix& a, const IntegerMatrix& b);
LatticeVector apply(const IntegerMatrix& a, const LatticeVector& v);
/// Pullback of a covector: transpose(a) · m.
RationalCovector apply_transpose(const IntegerMatrix& a, const RationalCovector& m);

/// Exact determinant (Bareiss), square input.
Int det(const IntegerMatrix& a);

/// s = u · a · v with u, v unimodular; diagonal of s nonnegative with each
/// entry dividing the next and zeros trailing.  Pivot choice: smallest
/// nonzero absolute value, lowest (row, col) index on ties.
struct SmithNormalForm {
  IntegerMatrix u, s, v;
};
SmithNormalForm smith_normal_form(const IntegerMatrix& a);

/// v / gcd(coords), orientation preserved.  Throws zero_vector.
LatticeVector primitive(const LatticeVector& v);

/// Unique solution m of a · m = b for square invertible a.
/// Throws singular_system, dimension_mismatch.
RationalCovector solve_rational(const IntegerMatrix& a, const std::vector<Rat>& b);

// Rational linear algebra used by the geometric layers.

struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> entries;

  RationalMatrix() = default;
  RationalMatrix(int r, int c);
  static RationalMatrix from(const IntegerMatrix& a);

  Rat& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * cols + j];
  }
};

int rank(const RationalMatrix& a);

/// Basis of { x : a · x = 0 }, one vector per free column, deterministic order.
std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& a);

/// Throws singular_system on non-invertible input.
RationalMatrix inverse(const RationalMatrix& a);

std::vector<Rat> apply(const RationalMatrix& a, const std::vector<Rat>& x);

}  // namespace torifan
