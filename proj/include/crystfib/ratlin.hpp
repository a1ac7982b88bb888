#pragma once

#include "crystfib/matrix.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace crystfib {

// ---------------------------------------------------------------------------
// Rational Gaussian elimination
// ---------------------------------------------------------------------------

// Reduced column echelon form: columns are the generators.  Returns the
// canonical basis (pivot entries 1, pivot rows cleared elsewhere, zero
// columns dropped, columns ordered by pivot row).
inline RatMat column_echelon(const RatMat& m) {
  RatMat a = m;
  size_t rows = a.rows(), cols = a.cols();
  size_t lead = 0;
  std::vector<size_t> pivot_cols;
  for (size_t r = 0; r < rows && lead < cols; ++r) {
    size_t j = lead;
    while (j < cols && a(r, j) == 0) ++j;
    if (j == cols) continue;
    a.swap_cols(lead, j);
    Rat inv = Rat(1) / a(r, lead);
    for (size_t i = r; i < rows; ++i) a(i, lead) *= inv;
    for (size_t k = 0; k < cols; ++k) {
      if (k == lead || a(r, k) == 0) continue;
      Rat f = a(r, k);
      for (size_t i = r; i < rows; ++i) a(i, k) -= f * a(i, lead);
    }
    pivot_cols.push_back(lead);
    ++lead;
  }
  RatMat out(rows, pivot_cols.size());
  for (size_t k = 0; k < pivot_cols.size(); ++k)
    for (size_t i = 0; i < rows; ++i) out(i, k) = a(i, pivot_cols[k]);
  return out;
}

inline size_t rat_rank(const RatMat& m) { return column_echelon(m).cols(); }

// Solves a*x = b over the rationals; nullopt if inconsistent.
inline std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
  size_t rows = a.rows(), cols = a.cols();
  RatMat w(rows, cols + 1);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) w(i, j) = a(i, j);
    w(i, cols) = b[i];
  }
  std::vector<size_t> pivot_col(rows, SIZE_MAX);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && w(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    w.swap_rows(r, pr);
    Rat inv = Rat(1) / w(r, c);
    for (size_t j = c; j <= cols; ++j) w(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (size_t j = c; j <= cols; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_col[r] = c;
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (w(i, cols) != 0) return std::nullopt;
  RatVec x(cols);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = w(i, cols);
  return x;
}

// Basis of {x : a*x = 0} as matrix columns (canonical echelon form).
inline RatMat rational_kernel(const RatMat& a) {
  size_t rows = a.rows(), cols = a.cols();
  RatMat w = a;
  std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && w(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    w.swap_rows(r, pr);
    Rat inv = Rat(1) / w(r, c);
    for (size_t j = c; j < cols; ++j) w(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (size_t j = c; j < cols; ++j) w(i, j) -= f * w(r, j);
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] == SIZE_MAX) free_cols.push_back(c);
  RatMat k(cols, free_cols.size());
  for (size_t fj = 0; fj < free_cols.size(); ++fj) {
    size_t fc = free_cols[fj];
    k(fc, fj) = 1;
    for (size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] != SIZE_MAX) k(c, fj) = -w(pivot_of_col[c], fc);
  }
  return column_echelon(k);
}

inline Rat rat_det(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  RatMat w = m;
  size_t n = w.rows();
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t pr = c;
    while (pr < n && w(pr, c) == 0) ++pr;
    if (pr == n) return Rat(0);
    if (pr != c) { w.swap_rows(c, pr); det = -det; }
    det *= w(c, c);
    Rat inv = Rat(1) / w(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      if (w(i, c) == 0) continue;
      Rat f = w(i, c) * inv;
      for (size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

inline RatMat rat_inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = m.rows();
  RatMat w(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w(i, j) = m(i, j);
    w(i, n + i) = 1;
  }
  for (size_t c = 0; c < n; ++c) {
    size_t pr = c;
    while (pr < n && w(pr, c) == 0) ++pr;
    if (pr == n) throw std::invalid_argument("matrix is singular");
    w.swap_rows(c, pr);
    Rat inv = Rat(1) / w(c, c);
    for (size_t j = 0; j < 2 * n; ++j) w(c, j) *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == c || w(i, c) == 0) continue;
      Rat f = w(i, c);
      for (size_t j = 0; j < 2 * n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  RatMat r(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r(i, j) = w(i, n + j);
  return r;
}

inline IntMat int_mat_inverse_unimodular(const IntMat& m) {
  RatMat inv = rat_inverse(to_rat_mat(m));
  IntMat r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = to_int(inv(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Hermite and Smith normal forms
// ---------------------------------------------------------------------------

struct HnfResult {
  IntMat h;  // column Hermite normal form, h = m * u
  IntMat u;  // unimodular
};

// Column-style HNF: pivot rows strictly increase over the leading columns,
// pivots are positive, entries left of a pivot in its row lie in [0, pivot),
// zero columns trail.  Unique, so lattice equality is matrix equality.
inline HnfResult hnf(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.cols());
  size_t rows = h.rows(), cols = h.cols();
  size_t lead = 0;
  for (size_t r = 0; r < rows && lead < cols; ++r) {
    // gcd-eliminate row r across columns lead..cols-1 into column lead
    size_t j = lead;
    while (j < cols && h(r, j) == 0) ++j;
    if (j == cols) continue;
    if (j != lead) { h.swap_cols(lead, j); u.swap_cols(lead, j); }
    for (size_t k = lead + 1; k < cols; ++k) {
      while (h(r, k) != 0) {
        Int q = int_floor_div(h(r, k), h(r, lead));
        for (size_t i = 0; i < rows; ++i) h(i, k) -= q * h(i, lead);
        for (size_t i = 0; i < cols; ++i) u(i, k) -= q * u(i, lead);
        if (h(r, k) != 0) { h.swap_cols(lead, k); u.swap_cols(lead, k); }
      }
    }
    if (h(r, lead) < 0) {
      for (size_t i = 0; i < rows; ++i) h(i, lead) = -h(i, lead);
      for (size_t i = 0; i < cols; ++i) u(i, lead) = -u(i, lead);
    }
    // reduce earlier columns against this pivot
    for (size_t k = 0; k < lead; ++k) {
      Int q = int_floor_div(h(r, k), h(r, lead));
      if (q == 0) continue;
      for (size_t i = 0; i < rows; ++i) h(i, k) -= q * h(i, lead);
      for (size_t i = 0; i < cols; ++i) u(i, k) -= q * u(i, lead);
    }
    ++lead;
  }
  return {h, u};
}

struct SnfResult {
  IntMat d;  // d = l * m * r, diagonal, d1 | d2 | ..., nonnegative
  IntMat l;
  IntMat r;
};

inline SnfResult snf(const IntMat& m) {
  IntMat d = m;
  IntMat l = IntMat::identity(m.rows());
  IntMat r = IntMat::identity(m.cols());
  size_t rows = d.rows(), cols = d.cols();
  size_t n = std::min(rows, cols);

  auto row_op = [&](size_t a, size_t b, const Int& q) {
    // row b -= q * row a
    for (size_t j = 0; j < cols; ++j) d(b, j) -= q * d(a, j);
    for (size_t j = 0; j < rows; ++j) l(b, j) -= q * l(a, j);
  };
  auto col_op = [&](size_t a, size_t b, const Int& q) {
    // col b -= q * col a
    for (size_t i = 0; i < rows; ++i) d(i, b) -= q * d(i, a);
    for (size_t i = 0; i < cols; ++i) r(i, b) -= q * r(i, a);
  };

  for (size_t t = 0; t < n; ++t) {
    // find a nonzero pivot in the trailing block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (d(i, j) != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    if (pi != t) { d.swap_rows(t, pi); l.swap_rows(t, pi); }
    if (pj != t) { d.swap_cols(t, pj); r.swap_cols(t, pj); }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = int_floor_div(d(i, t), d(t, t));
        row_op(t, i, q);
        if (d(i, t) != 0) {
          d.swap_rows(t, i); l.swap_rows(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = int_floor_div(d(t, j), d(t, t));
        col_op(t, j, q);
        if (d(t, j) != 0) {
          d.swap_cols(t, j); r.swap_cols(t, j);
          clean = false;
        }
      }
    }
    if (d(t, t) < 0) {
      for (size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (size_t j = 0; j < rows; ++j) l(t, j) = -l(t, j);
    }
  }
  // enforce the divisibility chain
  for (size_t t = 0; t + 1 < n; ++t) {
    for (size_t s = t + 1; s < n; ++s) {
      if (d(t, t) == 0 && d(s, s) == 0) continue;
      if (d(t, t) != 0 && d(s, s) % d(t, t) == 0) continue;
      // fold d(s,s) into position (t,t): add col s to col t, re-eliminate
      col_op(s, t, Int(-1));
      bool clean = false;
      while (!clean) {
        clean = true;
        if (d(s, t) != 0) {
          Int q = int_floor_div(d(s, t), d(t, t));
          row_op(t, s, q);
          if (d(s, t) != 0) {
            d.swap_rows(t, s); l.swap_rows(t, s);
            clean = false;
          }
        }
        if (d(t, s) != 0) {
          Int q = int_floor_div(d(t, s), d(t, t));
          col_op(t, s, q);
          if (d(t, s) != 0) {
            d.swap_cols(t, s); r.swap_cols(t, s);
            clean = false;
          }
        }
      }
      if (d(t, t) < 0) {
        for (size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
        for (size_t j = 0; j < rows; ++j) l(t, j) = -l(t, j);
      }
      if (d(s, s) < 0) {
        for (size_t j = 0; j < cols; ++j) d(s, j) = -d(s, j);
        for (size_t j = 0; j < rows; ++j) l(s, j) = -l(s, j);
      }
      s = t;  // restart the inner scan after a fold
    }
  }
  return {d, l, r};
}

// ---------------------------------------------------------------------------
// Subspaces, lattices, Gram forms
// ---------------------------------------------------------------------------

// Rational subspace of Q^n with a canonical (reduced column echelon) basis,
// so equality of subspaces is equality of basis matrices.
class RatSpace {
 public:
  RatSpace() : ambient_(0), basis_(0, 0) {}
  explicit RatSpace(size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
  RatSpace(size_t ambient, const RatMat& generators)
      : ambient_(ambient), basis_(column_echelon(generators)) {
    if (generators.rows() != ambient) throw std::invalid_argument("subspace generator shape");
  }

  static RatSpace full(size_t ambient) {
    return RatSpace(ambient, to_rat_mat(IntMat::identity(ambient)));
  }
  static RatSpace span_of(const RatVec& v) {
    RatMat m(v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return RatSpace(v.size(), m);
  }

  size_t ambient() const { return ambient_; }
  size_t dim() const { return basis_.cols(); }
  const RatMat& basis() const { return basis_; }

  bool contains(const RatVec& v) const {
    return solve_rational(basis_, v).has_value();
  }
  bool contains(const RatSpace& other) const {
    for (size_t j = 0; j < other.basis_.cols(); ++j)
      if (!contains(other.basis_.col(j))) return false;
    return true;
  }
  bool operator==(const RatSpace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const RatSpace& o) const { return !(*this == o); }

  RatSpace sum(const RatSpace& o) const {
    RatMat m(ambient_, dim() + o.dim());
    for (size_t j = 0; j < dim(); ++j) m.set_col(j, basis_.col(j));
    for (size_t j = 0; j < o.dim(); ++j) m.set_col(dim() + j, o.basis_.col(j));
    return RatSpace(ambient_, m);
  }

  RatSpace intersect(const RatSpace& o) const {
    // x in both spans: x = A s = B t; kernel of [A | -B] gives coefficients.
    size_t ka = dim(), kb = o.dim();
    if (ka == 0 || kb == 0) return RatSpace(ambient_);
    RatMat m(ambient_, ka + kb);
    for (size_t j = 0; j < ka; ++j) m.set_col(j, basis_.col(j));
    for (size_t j = 0; j < kb; ++j) m.set_col(ka + j, -Rat(1) * o.basis_.col(j));
    RatMat ker = rational_kernel(m);
    RatMat gens(ambient_, ker.cols());
    for (size_t j = 0; j < ker.cols(); ++j) {
      RatVec s(ka);
      for (size_t i = 0; i < ka; ++i) s[i] = ker(i, j);
      gens.set_col(j, basis_ * s);
    }
    return RatSpace(ambient_, gens);
  }

  // Image under a linear map (matrix applied to each basis vector).
  RatSpace apply(const RatMat& m) const {
    RatMat gens(m.rows(), dim());
    for (size_t j = 0; j < dim(); ++j) gens.set_col(j, m * basis_.col(j));
    return RatSpace(m.rows(), gens);
  }

 private:
  size_t ambient_;
  RatMat basis_;
};

class GramForm {
 public:
  GramForm() : g_(0, 0) {}
  explicit GramForm(const RatMat& g) : g_(g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("Gram form must be square");
    for (size_t i = 0; i < g.rows(); ++i)
      for (size_t j = 0; j < g.cols(); ++j)
        if (g(i, j) != g(j, i)) throw std::invalid_argument("Gram form must be symmetric");
    // positive definiteness: all leading principal minors > 0
    for (size_t k = 1; k <= g.rows(); ++k) {
      RatMat sub(k, k);
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) sub(i, j) = g(i, j);
      if (rat_det(sub) <= 0) throw std::invalid_argument("Gram form is not positive definite");
    }
  }

  static GramForm standard(size_t n) { return GramForm(to_rat_mat(IntMat::identity(n))); }

  size_t dim() const { return g_.rows(); }
  const RatMat& matrix() const { return g_; }
  Rat inner(const RatVec& a, const RatVec& b) const {
    RatVec gb = g_ * b;
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * gb[i];
    return s;
  }
  bool preserved_by(const IntMat& p) const {
    RatMat rp = to_rat_mat(p);
    return rp.transposed() * g_ * rp == g_;
  }

 private:
  RatMat g_;
};

// {x : <v, x>_g = 0 for all v in the subspace}.
inline RatSpace orth_complement(const RatSpace& v, const GramForm& g) {
  if (v.dim() == 0) return RatSpace::full(v.ambient());
  RatMat a = v.basis().transposed() * g.matrix();
  return RatSpace(v.ambient(), rational_kernel(a));
}

// Full-rank-or-less integer lattice in Z^n, canonicalized by column HNF with
// zero columns dropped.  Equality of lattices is equality of basis matrices.
class IntLattice {
 public:
  IntLattice() : ambient_(0), basis_(0, 0) {}
  explicit IntLattice(size_t ambient) : ambient_(ambient), basis_(ambient, 0) {}
  IntLattice(size_t ambient, const IntMat& generators) : ambient_(ambient) {
    if (generators.rows() != ambient) throw std::invalid_argument("lattice generator shape");
    IntMat h = hnf(generators).h;
    size_t k = 0;
    for (size_t j = 0; j < h.cols(); ++j) {
      bool zero = true;
      for (size_t i = 0; i < ambient; ++i)
        if (h(i, j) != 0) { zero = false; break; }
      if (!zero) ++k; else break;
    }
    basis_ = IntMat(ambient, k);
    for (size_t j = 0; j < k; ++j) basis_.set_col(j, h.col(j));
  }

  static IntLattice standard(size_t n) { return IntLattice(n, IntMat::identity(n)); }

  size_t ambient() const { return ambient_; }
  size_t rank() const { return basis_.cols(); }
  const IntMat& basis() const { return basis_; }

  bool operator==(const IntLattice& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const IntLattice& o) const { return !(*this == o); }

  // Membership of a rational vector (true iff it is an integer combination).
  bool contains(const RatVec& v) const {
    auto x = solve_rational(to_rat_mat(basis_), v);
    if (!x) return false;
    return is_integer_vec(*x);
  }
  bool contains(const IntLattice& o) const {
    for (size_t j = 0; j < o.rank(); ++j)
      if (!contains(to_rat_vec(o.basis_.col(j)))) return false;
    return true;
  }

  IntLattice sum(const IntLattice& o) const {
    IntMat m(ambient_, rank() + o.rank());
    for (size_t j = 0; j < rank(); ++j) m.set_col(j, basis_.col(j));
    for (size_t j = 0; j < o.rank(); ++j) m.set_col(rank() + j, o.basis_.col(j));
    return IntLattice(ambient_, m);
  }

  RatSpace span() const { return RatSpace(ambient_, to_rat_mat(basis_)); }

  // Index of a finite-index sublattice; throws if sub is not contained or
  // the ranks differ.
  Int index_of(const IntLattice& sub) const {
    if (sub.rank() != rank()) throw std::invalid_argument("index of different-rank lattice");
    RatMat c(rank(), rank());
    for (size_t j = 0; j < sub.rank(); ++j) {
      auto x = solve_rational(to_rat_mat(basis_), to_rat_vec(sub.basis_.col(j)));
      if (!x || !is_integer_vec(*x)) throw std::invalid_argument("not a sublattice");
      for (size_t i = 0; i < rank(); ++i) c(i, j) = (*x)[i];
    }
    Rat d = rat_det(c);
    return d < 0 ? to_int(-d) : to_int(d);
  }

 private:
  size_t ambient_;
  IntMat basis_;
};

// {x in Z^n : x in V}, a saturated sublattice of rank <= dim V.
inline IntLattice lattice_intersect_subspace(const IntLattice& l, const RatSpace& v) {
  if (l.rank() == 0 || v.dim() == 0) return IntLattice(l.ambient());
  // x = B a with a integer, and C x = 0 where ker C = V (plain orthogonality
  // is enough here since V is rational).
  RatMat c = rational_kernel(v.basis().transposed());  // columns span {y : y^T v = 0}
  RatMat cb = c.transposed() * to_rat_mat(l.basis());
  IntMat m = scale_to_int(cb);
  SnfResult s = snf(m);
  size_t n = l.rank();
  std::vector<size_t> free_idx;
  size_t mn = std::min(s.d.rows(), s.d.cols());
  for (size_t i = 0; i < mn; ++i)
    if (s.d(i, i) == 0) free_idx.push_back(i);
  for (size_t i = mn; i < n; ++i) free_idx.push_back(i);
  IntMat gens(l.ambient(), free_idx.size());
  for (size_t k = 0; k < free_idx.size(); ++k) {
    IntVec a = s.r.col(free_idx[k]);
    RatVec x(l.ambient());
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < l.ambient(); ++i) x[i] += Rat(l.basis()(i, j)) * Rat(a[j]);
    for (size_t i = 0; i < l.ambient(); ++i) gens(i, k) = to_int(x[i]);
  }
  return IntLattice(l.ambient(), gens);
}

// {x in Z^n : m x = 0} for a rational matrix m (saturated).
inline IntLattice integer_kernel(const RatMat& m) {
  return lattice_intersect_subspace(IntLattice::standard(m.cols()),
                                    RatSpace(m.cols(), rational_kernel(m)));
}

// ---------------------------------------------------------------------------
// Integer affine systems
// ---------------------------------------------------------------------------

// Decides existence of x in the given lattice with a*x = b, exactly, via SNF.
// Returns a witness when solvable.  The lattice defaults to Z^cols.
inline std::optional<RatVec> solve_integer_affine(const RatMat& a, const RatVec& b,
                                                  const IntLattice* moduli = nullptr) {
  if (a.rows() != b.size()) throw std::invalid_argument("inconsistent dimensions");
  IntLattice zn = IntLattice::standard(a.cols());
  const IntLattice& lat = moduli ? *moduli : zn;
  if (lat.ambient() != a.cols()) throw std::invalid_argument("inconsistent dimensions");
  size_t k = lat.rank();
  RatMat ab = a * to_rat_mat(lat.basis());
  // scale the whole system to integers
  Int scale = 1;
  for (size_t i = 0; i < ab.rows(); ++i) {
    for (size_t j = 0; j < k; ++j) scale = int_lcm(scale, rat_den(ab(i, j)));
    scale = int_lcm(scale, rat_den(b[i]));
  }
  IntMat m(ab.rows(), k);
  IntVec v(ab.rows());
  for (size_t i = 0; i < ab.rows(); ++i) {
    for (size_t j = 0; j < k; ++j) m(i, j) = to_int(ab(i, j) * Rat(scale));
    v[i] = to_int(b[i] * Rat(scale));
  }
  SnfResult s = snf(m);
  IntVec lv(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.rows(); ++j) lv[i] += s.l(i, j) * v[j];
  IntVec y(k);
  size_t mn = std::min(m.rows(), k);
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i < mn && s.d(i, i) != 0) {
      if (lv[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = lv[i] / s.d(i, i);
    } else if (lv[i] != 0) {
      return std::nullopt;
    }
  }
  IntVec mu(k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) mu[i] += s.r(i, j) * y[j];
  RatVec x(a.cols());
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < a.cols(); ++i) x[i] += Rat(lat.basis()(i, j)) * Rat(mu[j]);
  return x;
}

struct MixedSolution {
  RatVec rational_part;
  RatVec integer_part;
};

// Decides existence of (v, m) with aq*v + az*m = b, v rational, m integer.
// The rational unknowns are eliminated over Q first; the residual conditions
// on m are decided exactly by SNF.
inline std::optional<MixedSolution> solve_mixed_affine(const RatMat& aq, const RatMat& az,
                                                       const RatVec& b) {
  size_t rows = b.size();
  // rows y with y^T aq = 0 span the conditions that survive elimination
  RatMat ynull = rational_kernel(aq.transposed());  // columns y
  size_t nc = ynull.cols();
  RatMat proj_az(nc, az.cols());
  RatVec proj_b(nc);
  for (size_t c = 0; c < nc; ++c) {
    RatVec y = ynull.col(c);
    for (size_t j = 0; j < az.cols(); ++j) {
      Rat s = 0;
      for (size_t i = 0; i < rows; ++i) s += y[i] * az(i, j);
      proj_az(c, j) = s;
    }
    Rat s = 0;
    for (size_t i = 0; i < rows; ++i) s += y[i] * b[i];
    proj_b[c] = s;
  }
  auto m = solve_integer_affine(proj_az, proj_b);
  if (!m) return std::nullopt;
  RatVec rhs(rows);
  for (size_t i = 0; i < rows; ++i) {
    Rat s = b[i];
    for (size_t j = 0; j < az.cols(); ++j) s -= az(i, j) * (*m)[j];
    rhs[i] = s;
  }
  auto v = solve_rational(aq, rhs);
  if (!v) return std::nullopt;  // cannot happen: the projected system was consistent
  return MixedSolution{*v, *m};
}

}  // namespace crystfib
