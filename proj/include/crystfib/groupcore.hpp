#pragma once

#include "crystfib/symparse.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crystfib {

struct GroupError : std::runtime_error {
  explicit GroupError(const std::string& what) : std::runtime_error(what) {}
};

// One coset of the translation lattice: point matrix plus the canonical
// offset reduced to [0,1)^n.
struct Coset {
  IntMat point;
  RatVec offset;
};

// Reference to a group element: coset index plus integer lattice shift.
// The element is (offset + shift) + P.
struct GroupElementRef {
  int coset = 0;
  IntVec shift;
};

// A crystallographic group in lattice coordinates.  The translation lattice
// is Z^n; the Gram form carries the metric.  Immutable after construction.
class SpaceGroup {
 public:
  SpaceGroup() = default;

  // Validates all invariants: identity coset present, distinct unimodular
  // Gram-preserving point parts, multiplicative closure of the coset list.
  SpaceGroup(size_t dim, GramForm gram, std::vector<Coset> cosets, std::string provenance)
      : dim_(dim), gram_(std::move(gram)), cosets_(std::move(cosets)),
        provenance_(std::move(provenance)) {
    validate();
    build_tables();
  }

  size_t dim() const { return dim_; }
  const GramForm& gram() const { return gram_; }
  const std::vector<Coset>& cosets() const { return cosets_; }
  size_t point_order() const { return cosets_.size(); }
  const std::string& provenance() const { return provenance_; }

  int find_coset(const IntMat& p) const {
    for (size_t i = 0; i < cosets_.size(); ++i)
      if (cosets_[i].point == p) return (int)i;
    return -1;
  }

  // product coset index and the lattice shift: c_i * c_j = shift + c_k
  std::pair<int, IntVec> coset_product(int i, int j) const { return mul_[i][j]; }
  int coset_inverse(int i) const { return inv_[i]; }

  AffineElement element(const GroupElementRef& r) const {
    RatVec t = cosets_[r.coset].offset;
    for (size_t i = 0; i < dim_; ++i) t[i] += Rat(r.shift[i]);
    return AffineElement(cosets_[r.coset].point, t);
  }

  bool contains(const AffineElement& e) const {
    int c = find_coset(e.point);
    if (c < 0) return false;
    return is_integer_vec(e.trans - cosets_[c].offset);
  }

  std::optional<GroupElementRef> ref_of(const AffineElement& e) const {
    int c = find_coset(e.point);
    if (c < 0) return std::nullopt;
    RatVec d = e.trans - cosets_[c].offset;
    if (!is_integer_vec(d)) return std::nullopt;
    GroupElementRef r;
    r.coset = c;
    r.shift.resize(dim_);
    for (size_t i = 0; i < dim_; ++i) r.shift[i] = to_int(d[i]);
    return r;
  }

  GroupElementRef mul(const GroupElementRef& a, const GroupElementRef& b) const {
    auto e = multiply(element(a), element(b));
    auto r = ref_of(e);
    return *r;
  }
  GroupElementRef inv(const GroupElementRef& a) const {
    auto r = ref_of(invert(element(a)));
    return *r;
  }

  // Sum of all point matrices (the transfer matrix of Lemma 3).
  IntMat point_sum() const {
    IntMat s(dim_, dim_);
    for (const Coset& c : cosets_) s = s + c.point;
    return s;
  }

  // Fix(Pi) as a rational subspace.
  RatSpace fixed_space() const {
    RatMat stack(dim_ * cosets_.size(), dim_);
    for (size_t k = 0; k < cosets_.size(); ++k) {
      IntMat d = cosets_[k].point - IntMat::identity(dim_);
      for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) stack(k * dim_ + i, j) = Rat(d(i, j));
    }
    return RatSpace(dim_, rational_kernel(stack));
  }

  // {a in Z^n : P a = a for all P}; by Theorem 6 this is the center lattice.
  IntLattice fixed_lattice() const {
    return lattice_intersect_subspace(IntLattice::standard(dim_), fixed_space());
  }

 private:
  void validate() {
    if (cosets_.empty()) throw GroupError("not a group: empty coset list");
    if (!(cosets_[0].point == IntMat::identity(dim_)) || !is_zero_vec(cosets_[0].offset))
      throw GroupError("not a group: identity coset missing or not first");
    for (const Coset& c : cosets_) {
      Rat d = rat_det(to_rat_mat(c.point));
      if (d != 1 && d != -1) throw GroupError("point part is not unimodular");
      if (!gram_.preserved_by(c.point)) throw GroupError("Gram not preserved");
      for (const Rat& x : c.offset)
        if (x < 0 || x >= 1) throw GroupError("coset offset not reduced to [0,1)");
    }
    for (size_t i = 0; i < cosets_.size(); ++i)
      for (size_t j = i + 1; j < cosets_.size(); ++j)
        if (cosets_[i].point == cosets_[j].point)
          throw GroupError("not a group: duplicate point parts");
  }

  void build_tables() {
    size_t m = cosets_.size();
    mul_.assign(m, std::vector<std::pair<int, IntVec>>(m));
    inv_.assign(m, 0);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        IntMat p = cosets_[i].point * cosets_[j].point;
        int k = find_coset(p);
        if (k < 0) throw GroupError("not a group: point parts not closed");
        RatVec t = cosets_[i].offset + to_rat_mat(cosets_[i].point) * cosets_[j].offset;
        RatVec d = t - cosets_[k].offset;
        if (!is_integer_vec(d)) throw GroupError("not a group: coset offsets not closed");
        IntVec shift(dim_);
        for (size_t a = 0; a < dim_; ++a) shift[a] = to_int(d[a]);
        mul_[i][j] = {k, shift};
        if ((size_t)k == 0 || cosets_[k].point == IntMat::identity(dim_)) {
          if (is_zero_vec(mod1_vec(t))) inv_[i] = (int)j;
        }
      }
    }
  }

  size_t dim_ = 0;
  GramForm gram_;
  std::vector<Coset> cosets_;
  std::string provenance_;
  std::vector<std::vector<std::pair<int, IntVec>>> mul_;
  std::vector<int> inv_;
};

namespace detail {

// Lattice refinement state used while closing a generated group whose ops
// may carry fractional pure translations (centerings).
struct ClosureResult {
  std::vector<Coset> cosets;
  RatMat lattice_basis;  // columns: final lattice basis in original coords
};

inline ClosureResult close_generators(size_t dim, const std::vector<AffineElement>& gens,
                                      size_t max_order) {
  RatMat basis = to_rat_mat(IntMat::identity(dim));
  for (int round = 0; round < 16; ++round) {
    RatMat binv = rat_inverse(basis);
    std::vector<AffineElement> tgens;
    bool basis_ok = true;
    for (const AffineElement& g : gens) {
      RatMat p = binv * to_rat_mat(g.point) * basis;
      IntMat pi(dim, dim);
      for (size_t i = 0; i < dim && basis_ok; ++i)
        for (size_t j = 0; j < dim; ++j) {
          if (!is_integer(p(i, j))) { basis_ok = false; break; }
          pi(i, j) = rat_num(p(i, j));
        }
      if (!basis_ok) break;
      tgens.push_back(AffineElement(pi, binv * g.trans));
    }
    if (!basis_ok) throw GroupError("not a group: lattice not invariant");

    std::vector<Coset> cosets;
    cosets.push_back({IntMat::identity(dim), RatVec(dim)});
    std::vector<RatVec> extra_translations;
    size_t head = 0;
    bool grew = true;
    while (grew && extra_translations.empty()) {
      grew = false;
      for (head = 0; head < cosets.size() && extra_translations.empty(); ++head) {
        for (const AffineElement& g : tgens) {
          AffineElement e = multiply(AffineElement(cosets[head].point, cosets[head].offset), g);
          RatVec off = mod1_vec(e.trans);
          int idx = -1;
          for (size_t k = 0; k < cosets.size(); ++k)
            if (cosets[k].point == e.point) { idx = (int)k; break; }
          if (idx < 0) {
            if (cosets.size() >= max_order)
              throw GroupError("point group not finite (closure exceeded bound)");
            cosets.push_back({e.point, off});
            grew = true;
          } else if (!(cosets[idx].offset == off)) {
            extra_translations.push_back(off - cosets[idx].offset);
          }
        }
      }
    }
    if (extra_translations.empty()) {
      // transform the final coset list is already in the current basis
      ClosureResult r;
      r.cosets = std::move(cosets);
      r.lattice_basis = basis;
      return r;
    }
    // enlarge the lattice by the discovered pure translations and their
    // orbit under the point parts, then redo the closure
    size_t k = extra_translations.size();
    RatMat gen_mat(dim, dim + k * (1 + tgens.size()));
    for (size_t j = 0; j < dim; ++j) gen_mat(j, j) = 1;
    size_t col = dim;
    for (const RatVec& d : extra_translations) {
      gen_mat.set_col(col++, d);
      for (const AffineElement& g : tgens) gen_mat.set_col(col++, to_rat_mat(g.point) * d);
    }
    // HNF of the scaled generators gives a basis of the refined lattice
    Int scale = 1;
    IntMat im = scale_to_int(gen_mat, &scale);
    IntMat h = hnf(im).h;
    RatMat newb(dim, dim);
    for (size_t j = 0; j < dim; ++j)
      for (size_t i = 0; i < dim; ++i) newb(i, j) = Rat(h(i, j), scale);
    basis = basis * newb;
  }
  throw GroupError("not a group: lattice refinement did not stabilize");
}

}  // namespace detail

// Closes the generated set of a catalog entry into a SpaceGroup.  The
// translations e_i+I are implicit; fractional pure translations among the
// ops refine the lattice and the group is rebased so the lattice is Z^n.
inline SpaceGroup build_group(const CatalogEntry& entry) {
  size_t n = entry.dim;
  detail::ClosureResult cr = detail::close_generators(n, entry.ops, 48 * n + 1);
  GramForm g = [&] {
    try {
      return GramForm(cr.lattice_basis.transposed() * entry.gram * cr.lattice_basis);
    } catch (const std::exception& e) {
      throw GroupError(std::string("bad Gram form: ") + e.what());
    }
  }();
  return SpaceGroup(n, g, cr.cosets, entry.id);
}

// ---------------------------------------------------------------------------
// Intrinsic invariants
// ---------------------------------------------------------------------------

// Center of the group as a lattice: {a : a+I in Z(Gamma)} (Theorem 6: every
// central element is a translation fixed by the whole point group).
inline IntLattice center(const SpaceGroup& g) { return g.fixed_lattice(); }

// Transfer homomorphism tr(b+B) = (sum_A A) b + I.
inline AffineElement transfer(const SpaceGroup& g, const AffineElement& x) {
  RatVec t = to_rat_mat(g.point_sum()) * x.trans;
  return AffineElement(IntMat::identity(g.dim()), t);
}

// Invariant factors of the abelianization, computed from the finite
// presentation with generators = lattice basis + nontrivial coset reps.
// Returns (free rank, torsion invariant factors > 1).
inline std::pair<size_t, std::vector<Int>> abelianization(const SpaceGroup& g) {
  size_t n = g.dim();
  size_t m = g.point_order();
  size_t ngen = n + (m - 1);
  std::vector<IntVec> rel;

  auto add_rel = [&](const IntVec& v) { rel.push_back(v); };

  // conjugation: x_P t_j x_P^{-1} t_j^{-1}  -> (P - I) e_j on the t-part
  for (size_t c = 1; c < m; ++c) {
    IntMat d = g.cosets()[c].point - IntMat::identity(n);
    for (size_t j = 0; j < n; ++j) {
      IntVec v(ngen);
      bool nonzero = false;
      for (size_t i = 0; i < n; ++i) {
        v[i] = d(i, j);
        if (v[i] != 0) nonzero = true;
      }
      if (nonzero) add_rel(v);
    }
  }
  // multiplication table: x_P x_Q = t^lambda x_{PQ}
  for (size_t a = 1; a < m; ++a) {
    for (size_t b = 1; b < m; ++b) {
      auto [k, shift] = g.coset_product((int)a, (int)b);
      IntVec v(ngen);
      for (size_t i = 0; i < n; ++i) v[i] = -shift[i];
      v[n + (a - 1)] += 1;
      v[n + (b - 1)] += 1;
      if (k != 0) v[n + (k - 1)] -= 1;
      add_rel(v);
    }
  }
  if (rel.empty()) rel.push_back(IntVec(ngen));
  IntMat relmat(rel.size(), ngen);
  for (size_t i = 0; i < rel.size(); ++i)
    for (size_t j = 0; j < ngen; ++j) relmat(i, j) = rel[i][j];
  SnfResult s = snf(relmat);
  size_t mn = std::min(relmat.rows(), relmat.cols());
  size_t rank = 0;
  std::vector<Int> torsion;
  for (size_t i = 0; i < mn; ++i) {
    if (s.d(i, i) != 0) {
      ++rank;
      if (s.d(i, i) > 1) torsion.push_back(s.d(i, i));
    }
  }
  return {ngen - rank, torsion};
}

// First Betti number: rank of the center lattice.  Theorem 6 makes this
// equal to the free rank of the abelianization; betti1_consistent checks
// all three routes.
inline size_t betti1(const SpaceGroup& g) { return center(g).rank(); }

inline bool betti1_consistent(const SpaceGroup& g) {
  size_t by_center = center(g).rank();
  size_t by_fix = g.fixed_space().dim();
  size_t by_ab = abelianization(g).first;
  return by_center == by_fix && by_fix == by_ab;
}

}  // namespace crystfib
