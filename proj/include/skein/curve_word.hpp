#pragma once

#include <vector>

#include "skein/common.hpp"

namespace skein {

// A letter is +-v for a puncture index v >= 1: +v for a left-to-right crossing
// of the downward ray at puncture v, -v for right-to-left.
using Word = std::vector<int>;

// Sort key for letters: v ascending, positive before negative at equal v.
inline int letter_key(int a) { return 2 * (a < 0 ? -a : a) + (a < 0 ? 1 : 0); }

// Free cyclic reduction: cancel adjacent inverse letters, including around the
// wrap. Valid as an isotopy move for embedded loops.
Word reduce_cyclic(Word w);

// Minimum over all rotations of w and of its reversal with flipped signs,
// compared letterwise by letter_key. Input is reduced first.
Word canonical_word(Word w);

// Reversal with flipped signs (the same loop traversed backwards).
Word reverse_flip(const Word& w);

// Per-puncture letter counts (ignoring sign), indices 1..n.
std::vector<int> word_multidegree(const Word& w, int n);

struct Multicurve {
  // Each component canonical and nonempty; sorted.
  std::vector<Word> comps;

  bool operator==(const Multicurve& o) const { return comps == o.comps; }
  bool operator<(const Multicurve& o) const;
};

// Word ordering used for multicurve components and term ordering: shorter
// first, then letterwise by letter_key.
bool word_less(const Word& a, const Word& b);

// Canonicalizes every component and sorts the multiset. Throws InternalError
// if a component reduces to the empty word (trivial loops carry a delta factor
// and are never components of a multicurve).
Multicurve mc_canonicalize(std::vector<Word> comps);

std::vector<int> mc_multidegree(const Multicurve& mc, int n);

}  // namespace skein
