#pragma once

#include <map>
#include <vector>

#include "skein/common.hpp"

namespace skein {

// Element of Z[q^{1/2}, q^{-1/2}], stored as halfExp -> coefficient.
// halfExp counts powers of q^{1/2}, so q == term with halfExp 2.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(long long c) { add_term(2 * 0, Int(c)); }

  static Laurent term(Int coeff, int half_exp);
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return term(1, 0); }
  static Laurent q() { return term(1, 2); }
  static Laurent qbar() { return term(1, -2); }
  static Laurent s() { return term(1, 1); }
  static Laurent sbar() { return term(1, -1); }
  static Laurent alpha();  // q + q^{-1}
  static Laurent delta();  // -q - q^{-1}

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  // True when the element is +-q^{k/2} for some k.
  bool is_unit() const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return t_ != o.t_; }
  bool operator<(const Laurent& o) const { return t_ < o.t_; }

  // Mirror of scalars: q^{1/2} -> q^{-1/2}.
  Laurent bar() const;
  // e < 0 only valid for units.
  Laurent pow(int e) const;
  // Substitute an integer value for q^{1/2}.
  Rat specialize(long long s_value) const;

  const std::map<int, Int>& terms() const { return t_; }
  std::string str() const;

 private:
  void add_term(int half_exp, Int c);
  std::map<int, Int> t_;
};

}  // namespace skein
