#include "torifan/lattice.hpp"

#include <utility>

namespace torifan {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    fail(errc::dimension_mismatch,
         std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

bool LatticeVector::is_zero() const {
  for (const Int& x : coords)
    if (x != 0) return false;
  return true;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector sum");
  LatticeVector r = a;
  for (int i = 0; i < b.dim(); ++i) r[i] += b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.dim(), b.dim(), "vector difference");
  LatticeVector r = a;
  for (int i = 0; i < b.dim(); ++i) r[i] -= b[i];
  return r;
}

LatticeVector operator*(const Int& k, const LatticeVector& v) {
  LatticeVector r = v;
  for (Int& x : r.coords) x *= k;
  return r;
}

std::string str(const LatticeVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.dim(); ++i) {
    if (i) s += ",";
    s += str(v[i]);
  }
  return s + ")";
}

RationalCovector operator-(const RationalCovector& a, const RationalCovector& b) {
  require_same_dim(a.dim(), b.dim(), "covector difference");
  RationalCovector r = a;
  for (int i = 0; i < b.dim(); ++i) r[i] -= b[i];
  return r;
}

std::string str(const RationalCovector& m) {
  std::string s = "(";
  for (int i = 0; i < m.dim(); ++i) {
    if (i) s += ",";
    s += str(m[i]);
  }
  return s + ")";
}

Rat pair(const RationalCovector& m, const LatticeVector& v) {
  require_same_dim(m.dim(), v.dim(), "pairing");
  Rat acc = 0;
  for (int i = 0; i < m.dim(); ++i) acc += m[i] * Rat(v[i]);
  return acc;
}

bool is_integral(const RationalCovector& m) {
  for (const Rat& q : m.coords)
    if (!is_integer(q)) return false;
  return true;
}

IntegerMatrix::IntegerMatrix(int r, int c) : rows(r), cols(c) {
  entries.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), Int(0));
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix transpose(const IntegerMatrix& a) {
  IntegerMatrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
  return t;
}

IntegerMatrix mul(const IntegerMatrix& a, const IntegerMatrix& b) {
  require_same_dim(a.cols, b.rows, "matrix product");
  IntegerMatrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

LatticeVector apply(const IntegerMatrix& a, const LatticeVector& v) {
  require_same_dim(a.cols, v.dim(), "matrix apply");
  LatticeVector r;
  r.coords.assign(static_cast<std::size_t>(a.rows), Int(0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * v[j];
  return r;
}

RationalCovector apply_transpose(const IntegerMatrix& a, const RationalCovector& m) {
  require_same_dim(a.rows, m.dim(), "transpose apply");
  RationalCovector r;
  r.coords.assign(static_cast<std::size_t>(a.cols), Rat(0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[j] += Rat(a.at(i, j)) * m[i];
  return r;
}

Int det(const IntegerMatrix& a) {
  require_same_dim(a.rows, a.cols, "determinant");
  const int n = a.rows;
  if (n == 0) return 1;
  // Bareiss: fraction-free elimination, divisions exact.
  IntegerMatrix w = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

// Elementary operations applied to s are mirrored into u (rows) or v (cols)
// so u · a · v = s stays invariant.
struct SnfWork {
  IntegerMatrix u, s, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < s.cols; ++j) std::swap(s.at(a, j), s.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < s.rows; ++i) std::swap(s.at(i, a), s.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  }
  void add_row(int dst, int src, const Int& k) {  // row dst += k * row src
    for (int j = 0; j < s.cols; ++j) s.at(dst, j) += k * s.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) += k * u.at(src, j);
  }
  void add_col(int dst, int src, const Int& k) {  // col dst += k * col src
    for (int i = 0; i < s.rows; ++i) s.at(i, dst) += k * s.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) += k * v.at(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < s.cols; ++j) s.at(r, j) = -s.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  }

  // Smallest nonzero |entry| in the trailing block, lowest (row, col) on ties.
  bool select_pivot(int t, int& pi, int& pj) const {
    bool found = false;
    Int best;
    for (int i = t; i < s.rows; ++i)
      for (int j = t; j < s.cols; ++j) {
        if (s.at(i, j) == 0) continue;
        Int a = abs(s.at(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  // Diagonalize the trailing block starting at t.  Returns one past the last
  // nonzero diagonal position.
  int reduce_from(int t) {
    const int bound = std::min(s.rows, s.cols);
    for (; t < bound; ++t) {
      int pi = 0, pj = 0;
      if (!select_pivot(t, pi, pj)) return t;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (int i = t + 1; i < s.rows; ++i) {
          if (s.at(i, t) == 0) continue;
          Int q = s.at(i, t) / s.at(t, t);  // truncated, |remainder| < |pivot|
          add_row(i, t, -q);
          if (s.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < s.cols; ++j) {
          if (s.at(t, j) == 0) continue;
          Int q = s.at(t, j) / s.at(t, t);
          add_col(j, t, -q);
          if (s.at(t, j) != 0) clean = false;
        }
        if (clean) break;
        // A nonzero remainder is strictly smaller than the pivot; reselect.
        if (!select_pivot(t, pi, pj)) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
      }
    }
    return t;
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntegerMatrix& a) {
  SnfWork w{IntegerMatrix::identity(a.rows), a, IntegerMatrix::identity(a.cols)};
  int nz = w.reduce_from(0);
  // Enforce the divisibility chain d_i | d_{i+1}.
  for (int i = 0; i + 1 < nz;) {
    bool fixed = false;
    for (int j = i + 1; j < nz; ++j) {
      if (w.s.at(j, j) % w.s.at(i, i) != 0) {
        // Folding column j into column i puts d_j below the diagonal; the
        // re-reduction replaces d_i by gcd(d_i, d_j).
        w.add_col(i, j, 1);
        nz = w.reduce_from(i);
        fixed = true;
        break;
      }
    }
    if (!fixed) ++i;
  }
  for (int i = 0; i < nz; ++i)
    if (w.s.at(i, i) < 0) w.negate_row(i);
  return SmithNormalForm{std::move(w.u), std::move(w.s), std::move(w.v)};
}

LatticeVector primitive(const LatticeVector& v) {
  if (v.is_zero()) fail(errc::zero_vector, "primitive of zero vector");
  Int g = 0;
  for (const Int& x : v.coords) g = gcd(g, x);
  LatticeVector r = v;
  for (Int& x : r.coords) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

namespace {

// Gauss-Jordan on [a | rhs...], first nonzero pivot in column order.
// Returns pivot column per row (-1 past rank).
std::vector<int> rref(RationalMatrix& m) {
  std::vector<int> pivot_col(static_cast<std::size_t>(m.rows), -1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rat inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_col[static_cast<std::size_t>(r)] = c;
    ++r;
  }
  return pivot_col;
}

}  // namespace

RationalCovector solve_rational(const IntegerMatrix& a, const std::vector<Rat>& b) {
  require_same_dim(a.rows, a.cols, "solve_rational");
  require_same_dim(a.rows, static_cast<int>(b.size()), "solve_rational rhs");
  const int n = a.rows;
  RationalMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = Rat(a.at(i, j));
    aug.at(i, n) = b[static_cast<std::size_t>(i)];
  }
  const auto pivots = rref(aug);
  for (int i = 0; i < n; ++i)
    if (pivots[static_cast<std::size_t>(i)] != i)
      fail(errc::singular_system, "matrix not invertible");
  RationalCovector m;
  m.coords.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.coords.push_back(aug.at(i, n));
  return m;
}

RationalMatrix::RationalMatrix(int r, int c) : rows(r), cols(c) {
  entries.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), Rat(0));
}

RationalMatrix RationalMatrix::from(const IntegerMatrix& a) {
  RationalMatrix m(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = Rat(a.at(i, j));
  return m;
}

int rank(const RationalMatrix& a) {
  RationalMatrix w = a;
  const auto pivots = rref(w);
  int r = 0;
  for (int p : pivots)
    if (p >= 0) ++r;
  return r;
}

std::vector<std::vector<Rat>> kernel_basis(const RationalMatrix& a) {
  RationalMatrix w = a;
  const auto pivots = rref(w);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols), false);
  for (int p : pivots)
    if (p >= 0) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < a.cols; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    std::vector<Rat> k(static_cast<std::size_t>(a.cols), Rat(0));
    k[static_cast<std::size_t>(c)] = 1;
    for (int i = 0; i < a.rows; ++i) {
      const int p = pivots[static_cast<std::size_t>(i)];
      if (p >= 0) k[static_cast<std::size_t>(p)] = -w.at(i, c);
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& a) {
  require_same_dim(a.rows, a.cols, "inverse");
  const int n = a.rows;
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  for (int i = 0; i < n; ++i)
    if (pivots[static_cast<std::size_t>(i)] != i)
      fail(errc::singular_system, "matrix not invertible");
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<Rat> apply(const RationalMatrix& a, const std::vector<Rat>& x) {
  require_same_dim(a.cols, static_cast<int>(x.size()), "rational apply");
  std::vector<Rat> r(static_cast<std::size_t>(a.rows), Rat(0));
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      r[static_cast<std::size_t>(i)] += a.at(i, j) * x[static_cast<std::size_t>(j)];
  return r;
}

}  // namespace torifan
