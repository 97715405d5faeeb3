#pragma once

#include <vector>

#include "skein/catalog.hpp"

namespace skein {

// One derived relation: either a commutation for a pair of 2-element
// subsets inside a common triple, or the cubic satisfied by the
// triple's 3-element generator.
struct TripleResult {
  std::string name;
  bool ok = false;
  Relation relation;
  SkeinElement residual;  // leftover when the solve failed
  bool widened = false;   // extra candidate terms were needed
};

std::vector<TripleResult> derive_triple_relations(Evaluator& ev);

}  // namespace skein
