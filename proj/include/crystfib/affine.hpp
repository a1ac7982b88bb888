#pragma once

#include "crystfib/ratlin.hpp"

namespace crystfib {

// A group element b+B in lattice coordinates: integer point part, exact
// rational translation.  Composition: (b+B)(a+A) = (b + B a) + B A.
struct AffineElement {
  IntMat point;
  RatVec trans;

  AffineElement() = default;
  AffineElement(IntMat p, RatVec t) : point(std::move(p)), trans(std::move(t)) {}

  static AffineElement identity(size_t n) {
    return AffineElement(IntMat::identity(n), RatVec(n));
  }

  size_t dim() const { return trans.size(); }

  bool is_identity() const {
    return point == IntMat::identity(dim()) && is_zero_vec(trans);
  }
  bool is_translation() const { return point == IntMat::identity(dim()); }

  bool operator==(const AffineElement& o) const {
    return point == o.point && trans == o.trans;
  }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
};

inline AffineElement multiply(const AffineElement& g, const AffineElement& h) {
  return AffineElement(g.point * h.point, g.trans + to_rat_mat(g.point) * h.trans);
}

inline AffineElement invert(const AffineElement& g) {
  IntMat pinv = int_mat_inverse_unimodular(g.point);
  return AffineElement(pinv, -(to_rat_mat(pinv) * g.trans));
}

// h g h^{-1}
inline AffineElement conjugate(const AffineElement& g, const AffineElement& h) {
  return multiply(multiply(h, g), invert(h));
}

inline AffineElement power(const AffineElement& g, long e) {
  AffineElement r = AffineElement::identity(g.dim());
  AffineElement base = e < 0 ? invert(g) : g;
  long n = e < 0 ? -e : e;
  for (long i = 0; i < n; ++i) r = multiply(r, base);
  return r;
}

}  // namespace crystfib
