#include "skein/laurent.hpp"

#include <sstream>

namespace skein {

void Laurent::add_term(int half_exp, Int c) {
  if (c == 0) return;
  auto it = t_.find(half_exp);
  if (it == t_.end()) {
    t_.emplace(half_exp, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Laurent Laurent::term(Int coeff, int half_exp) {
  Laurent r;
  r.add_term(half_exp, std::move(coeff));
  return r;
}

Laurent Laurent::alpha() {
  Laurent r;
  r.add_term(2, 1);
  r.add_term(-2, 1);
  return r;
}

Laurent Laurent::delta() {
  Laurent r;
  r.add_term(2, -1);
  r.add_term(-2, -1);
  return r;
}

bool Laurent::is_one() const {
  return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
}

bool Laurent::is_unit() const {
  if (t_.size() != 1) return false;
  const Int& c = t_.begin()->second;
  return c == 1 || c == -1;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(-e, c);
  return r;
}

Laurent Laurent::pow(int e) const {
  if (e == 0) return one();
  if (e < 0) {
    if (!is_unit()) throw InternalError("pow: negative exponent of a non-unit scalar");
    return term(t_.begin()->second, -t_.begin()->first).pow(-e);
  }
  Laurent r = one();
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

Rat Laurent::specialize(long long s_value) const {
  if (s_value == 0) throw InternalError("specialize: q^{1/2} must be nonzero");
  Rat base(s_value);
  Rat acc(0);
  for (const auto& [e, c] : t_) {
    Rat p(1);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
    if (e < 0) p = Rat(1) / p;
    acc += Rat(c) * p;
  }
  return acc;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest powers first reads naturally.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const int e = it->first;
    Int c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit_coeff = (c == 1) && e != 0;
    if (!unit_coeff) os << c.str();
    if (e != 0) {
      if (!unit_coeff) os << "*";
      if (e % 2 == 0) {
        const int k = e / 2;
        os << "q";
        if (k != 1) os << "^" << k;
      } else {
        os << "s";
        if (e != 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

}  // namespace skein
