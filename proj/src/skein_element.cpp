#include "skein/skein_element.hpp"

#include <algorithm>

namespace skein {

SkeinElement SkeinElement::from_term(Multicurve mc, Laurent c) {
  SkeinElement e;
  e.add_term(mc, c);
  return e;
}

void SkeinElement::add_term(const Multicurve& mc, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t_.find(mc);
  if (it == t_.end()) {
    t_.emplace(mc, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SkeinElement SkeinElement::operator+(const SkeinElement& o) const {
  SkeinElement r = *this;
  for (const auto& [mc, c] : o.t_) r.add_term(mc, c);
  return r;
}

SkeinElement SkeinElement::operator-(const SkeinElement& o) const {
  SkeinElement r = *this;
  for (const auto& [mc, c] : o.t_) r.add_term(mc, -c);
  return r;
}

SkeinElement SkeinElement::operator-() const {
  SkeinElement r;
  for (const auto& [mc, c] : t_) r.t_.emplace(mc, -c);
  return r;
}

SkeinElement SkeinElement::scaled(const Laurent& c) const {
  SkeinElement r;
  if (c.is_zero()) return r;
  for (const auto& [mc, k] : t_) {
    Laurent p = k * c;
    if (!p.is_zero()) r.t_.emplace(mc, std::move(p));
  }
  return r;
}

SkeinElement SkeinElement::disjoint_product(const SkeinElement& o) const {
  SkeinElement r;
  for (const auto& [mc1, c1] : t_)
    for (const auto& [mc2, c2] : o.t_) {
      Multicurve u;
      u.comps.reserve(mc1.comps.size() + mc2.comps.size());
      u.comps = mc1.comps;
      u.comps.insert(u.comps.end(), mc2.comps.begin(), mc2.comps.end());
      std::sort(u.comps.begin(), u.comps.end(), word_less);
      r.add_term(u, c1 * c2);
    }
  return r;
}

Laurent SkeinElement::coeff(const Multicurve& mc) const {
  auto it = t_.find(mc);
  return it == t_.end() ? Laurent() : it->second;
}

}  // namespace skein
