#pragma once

#include <map>

#include "skein/curve_word.hpp"
#include "skein/laurent.hpp"

namespace skein {

// Finite R-linear combination of multicurves. The empty multicurve is the
// unit of the stacking product.
class SkeinElement {
 public:
  SkeinElement() = default;
  static SkeinElement unit() { return from_term(Multicurve{}, Laurent::one()); }
  static SkeinElement from_term(Multicurve mc, Laurent c);

  bool is_zero() const { return t_.empty(); }

  SkeinElement operator+(const SkeinElement& o) const;
  SkeinElement operator-(const SkeinElement& o) const;
  SkeinElement operator-() const;
  SkeinElement scaled(const Laurent& c) const;
  // Disjoint-union product: multiset union of components, coefficients
  // multiplied. Only valid when the factors live over disjoint sets of
  // crossing clusters, which is how it is used.
  SkeinElement disjoint_product(const SkeinElement& o) const;

  bool operator==(const SkeinElement& o) const { return t_ == o.t_; }
  bool operator!=(const SkeinElement& o) const { return t_ != o.t_; }

  void add_term(const Multicurve& mc, const Laurent& c);
  const std::map<Multicurve, Laurent>& terms() const { return t_; }
  Laurent coeff(const Multicurve& mc) const;

 private:
  std::map<Multicurve, Laurent> t_;
};

}  // namespace skein
