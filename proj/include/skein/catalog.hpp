#pragma once

#include <string>
#include <vector>

#include "skein/algebra.hpp"

namespace skein {

struct Provenance {
  std::string family;  // base relation this one is an image of
  int sigma = 0;       // power of the index rotation applied
  bool mirrored = false;
  bool derived = false;  // produced by the oracle rather than transcribed
};

struct Relation {
  std::string name;
  GenPolynomial lhs, rhs;
  // evaluate(lhs - rhs) must equal this; empty for ordinary relations.
  SkeinElement expected;
  Provenance prov;
};

struct Catalog {
  // Commuting + reduction + centrality relations; all expected zero.
  std::vector<Relation> relations;
  // Identities whose expansions contain non-generator curves, checked
  // against explicit expected elements, plus cleared byproducts.
  std::vector<Relation> identities;

  const Relation* find(const std::string& name) const;
  std::vector<const Relation*> all() const;
};

Catalog build_catalog();

struct VerifyReport {
  std::string name;
  bool zero;
  SkeinElement residual;  // evaluate(lhs - rhs) minus expected
  long long ms = 0;
};

VerifyReport verify_relation(const Relation& r, Evaluator& ev);

}  // namespace skein
