#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "skein/catalog.hpp"

namespace skein {

struct Rule {
  std::string name;
  Monomial key;        // contiguous pattern, noncentral generators only
  GenPolynomial rhs;   // replacement, equal to key in the algebra
  bool reduction;      // false for an adjacent-swap rule
  bool derived;
  bool verified = false;
};

struct NfResult {
  GenPolynomial normal;
  std::vector<Monomial> findings;  // terminal, full multidegree, undistinguished
  long long steps = 0;
};

class Rewriter {
 public:
  // The evaluator backs derived-rule construction and checked mode.
  Rewriter(Evaluator& ev, bool checked = false,
           long long max_steps = 1 << 20);

  NfResult nf(const GenPolynomial& p);
  NfResult nf(const Monomial& m);

  const std::vector<Rule>& rules() const { return rules_; }
  bool distinguished(const Monomial& sorted_noncentral) const;

 private:
  struct Step;

  GenPolynomial nf_mono(const Monomial& m);
  GenPolynomial nf_nc(const Monomial& w);
  GenPolynomial apply(const Monomial& prefix, const GenPolynomial& body,
                      const Monomial& suffix);
  GenPolynomial apply_macro(const Monomial& w, const Step& st);
  bool find_step(const Monomial& w, Step& out) const;
  void check_rule(Rule& r);
  void bump_steps();

  Evaluator& ev_;
  bool checked_;
  long long max_steps_;
  long long steps_ = 0;
  std::vector<Rule> rules_;
  std::vector<int> reduction_order_;       // indexes into rules_
  std::map<Monomial, int> swap_by_key_;    // descending pair -> rule index
  std::map<Monomial, GenPolynomial> cache_;
  std::set<Monomial> in_progress_;
  std::set<Monomial> distinguished_;
  std::set<std::array<int, 4>> finding_mds_;
};

}  // namespace skein
