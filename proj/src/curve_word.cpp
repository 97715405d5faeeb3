#include "skein/curve_word.hpp"

#include <algorithm>

namespace skein {

Word reduce_cyclic(Word w) {
  // Linear pass with a stack for interior cancellations.
  Word st;
  for (int a : w) {
    if (!st.empty() && st.back() == -a) {
      st.pop_back();
    } else {
      st.push_back(a);
    }
  }
  // Wrap-around: trim matching ends.
  size_t lo = 0, hi = st.size();
  while (hi - lo >= 2 && st[lo] == -st[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(st.begin() + lo, st.begin() + hi);
}

Word reverse_flip(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

static bool rotation_less(const Word& w, size_t i, const Word& best_src, size_t j) {
  const size_t n = w.size();
  for (size_t k = 0; k < n; ++k) {
    const int a = letter_key(w[(i + k) % n]);
    const int b = letter_key(best_src[(j + k) % n]);
    if (a != b) return a < b;
  }
  return false;
}

Word canonical_word(Word w) {
  w = reduce_cyclic(std::move(w));
  const size_t n = w.size();
  if (n == 0) return w;
  const Word rf = reverse_flip(w);
  const Word* best_src = &w;
  size_t best_i = 0;
  for (size_t i = 1; i < n; ++i)
    if (rotation_less(w, i, *best_src, best_i)) {
      best_src = &w;
      best_i = i;
    }
  for (size_t i = 0; i < n; ++i)
    if (rotation_less(rf, i, *best_src, best_i)) {
      best_src = &rf;
      best_i = i;
    }
  Word out;
  out.reserve(n);
  for (size_t k = 0; k < n; ++k) out.push_back((*best_src)[(best_i + k) % n]);
  return out;
}

std::vector<int> word_multidegree(const Word& w, int n) {
  std::vector<int> d(n, 0);
  for (int a : w) {
    const int v = a < 0 ? -a : a;
    if (v >= 1 && v <= n) d[v - 1]++;
  }
  return d;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    const int x = letter_key(a[i]), y = letter_key(b[i]);
    if (x != y) return x < y;
  }
  return false;
}

bool Multicurve::operator<(const Multicurve& o) const {
  const size_t n = std::min(comps.size(), o.comps.size());
  for (size_t i = 0; i < n; ++i) {
    if (word_less(comps[i], o.comps[i])) return true;
    if (word_less(o.comps[i], comps[i])) return false;
  }
  return comps.size() < o.comps.size();
}

Multicurve mc_canonicalize(std::vector<Word> comps) {
  Multicurve mc;
  mc.comps.reserve(comps.size());
  for (auto& w : comps) {
    Word c = canonical_word(std::move(w));
    if (c.empty()) throw InternalError("mc_canonicalize: empty component");
    mc.comps.push_back(std::move(c));
  }
  std::sort(mc.comps.begin(), mc.comps.end(), word_less);
  return mc;
}

std::vector<int> mc_multidegree(const Multicurve& mc, int n) {
  std::vector<int> d(n, 0);
  for (const auto& w : mc.comps) {
    const auto wd = word_multidegree(w, n);
    for (int i = 0; i < n; ++i) d[i] += wd[i];
  }
  return d;
}

}  // namespace skein
