#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/resolve.hpp"
#include "skein/skein_element.hpp"

namespace skein {

// A generator is a nonempty subset of the punctures {1..n}, stored as a
// bitmask with bit v-1 for puncture v.
using Gen = std::uint16_t;

// Product of generators, leftmost factor drawn on top.
using Monomial = std::vector<Gen>;

Gen full_gen(int n);
bool gen_valid(Gen g, int n);
bool gen_central(Gen g, int n);
std::vector<int> gen_punctures(Gen g);
std::string gen_name(Gen g, int n);

// Total order used for sorting monomials: singletons by puncture, then the
// full set, then the rest by (size, lexicographic on the puncture list).
int gen_rank(Gen g, int n);
bool gen_rank_less(Gen a, Gen b, int n);

std::vector<int> monomial_multidegree(const Monomial& m, int n);

class GenPolynomial {
 public:
  static GenPolynomial zero();
  static GenPolynomial one();
  static GenPolynomial gen(Gen g);
  static GenPolynomial scalar(const Laurent& c);

  bool is_zero() const { return t_.empty(); }
  const std::map<Monomial, Laurent>& terms() const { return t_; }

  GenPolynomial operator+(const GenPolynomial& o) const;
  GenPolynomial operator-(const GenPolynomial& o) const;
  GenPolynomial operator-() const;
  GenPolynomial operator*(const GenPolynomial& o) const;
  GenPolynomial& operator+=(const GenPolynomial& o);
  GenPolynomial scaled(const Laurent& c) const;
  bool operator==(const GenPolynomial& o) const { return t_ == o.t_; }
  bool operator!=(const GenPolynomial& o) const { return t_ != o.t_; }

  void add_term(const Monomial& m, const Laurent& c);

 private:
  std::map<Monomial, Laurent> t_;
};

// Reverses every monomial and conjugates every coefficient.
GenPolynomial mirror(const GenPolynomial& p);
Monomial mirror(const Monomial& m);

// Rotates puncture labels by k steps: 1 -> 1+k, ..., cyclically mod n.
GenPolynomial permute(const GenPolynomial& p, int k, int n);
Gen permute(Gen g, int k, int n);

class Evaluator {
 public:
  explicit Evaluator(int n = 4, int variant = 0, ResolveOptions opt = {});

  int n() const { return n_; }
  const SkeinElement& evaluate(const Monomial& m);
  SkeinElement evaluate(const GenPolynomial& p);
  bool is_zero(const GenPolynomial& p);

 private:
  int n_;
  int variant_;
  ResolveOptions opt_;
  std::mutex mu_;
  std::map<Monomial, SkeinElement> cache_;
};

}  // namespace skein
