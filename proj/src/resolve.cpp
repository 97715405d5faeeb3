#include "skein/resolve.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "skein/curve_word.hpp"

namespace skein {

namespace {

using Comp = std::vector<int>;
using State = std::vector<Comp>;

constexpr int kStubBase = 16;

bool is_stub(int e) { return e >= kStubBase; }
int stub_id(int e) { return (e - kStubBase) >> 2; }
int make_stub(int id, int role, int rev) {
  return kStubBase + 4 * id + 2 * role + rev;
}

int flip_event(int e) { return is_stub(e) ? (e ^ 1) : -e; }

Comp reverse_flip_comp(const Comp& c) {
  Comp r;
  r.reserve(c.size());
  for (auto it = c.rbegin(); it != c.rend(); ++it) r.push_back(flip_event(*it));
  return r;
}

Comp least_rotation(const Comp& c) {
  const size_t n = c.size();
  if (n <= 1) return c;
  size_t best = 0;
  for (size_t i = 1; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const int a = c[(best + k) % n];
      const int b = c[(i + k) % n];
      if (a != b) {
        if (b < a) best = i;
        break;
      }
    }
  }
  Comp out(n);
  for (size_t k = 0; k < n; ++k) out[k] = c[(best + k) % n];
  return out;
}

Comp canonical_comp(const Comp& c) {
  Comp a = least_rotation(c);
  Comp b = least_rotation(reverse_flip_comp(c));
  return a <= b ? a : b;
}

void cancel_letters(Comp& c) {
  bool changed = true;
  while (changed && c.size() >= 2) {
    changed = false;
    const size_t n = c.size();
    for (size_t i = 0; i < n; ++i) {
      const size_t j = (i + 1) % n;
      if (i == j) break;
      const int a = c[i], b = c[j];
      if (!is_stub(a) && !is_stub(b) && a == -b) {
        if (i < j) {
          c.erase(c.begin() + j);
          c.erase(c.begin() + i);
        } else {
          c.erase(c.begin() + i);
          c.erase(c.begin() + j);
        }
        changed = true;
        break;
      }
    }
  }
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

class Engine {
 public:
  Engine(const std::vector<char>& aligned, const ResolveOptions& opt)
      : aligned_(aligned), opt_(opt) {}

  SkeinElement eval_state(State st) {
    if (++states_ > opt_.max_states)
      throw InternalError("resolve: state budget exceeded");

    Multicurve done;
    int deltas = 0;
    State live;
    for (auto& c : st) {
      cancel_letters(c);
      const bool has_stub =
          std::any_of(c.begin(), c.end(), [](int e) { return is_stub(e); });
      if (has_stub) {
        live.push_back(std::move(c));
        continue;
      }
      Word w = canonical_word(Word(c.begin(), c.end()));
      if (w.empty())
        ++deltas;
      else
        done.comps.push_back(std::move(w));
    }
    Laurent coeff = Laurent::one();
    for (int k = 0; k < deltas; ++k) coeff = coeff * Laurent::delta();
    std::sort(done.comps.begin(), done.comps.end(), word_less);
    SkeinElement result = SkeinElement::from_term(done, coeff);
    if (live.empty()) return result;

    DSU dsu(int(live.size()));
    std::map<int, int> owner;
    for (size_t i = 0; i < live.size(); ++i)
      for (int e : live[i])
        if (is_stub(e)) {
          auto [it, fresh] = owner.emplace(stub_id(e), int(i));
          if (!fresh) dsu.unite(it->second, int(i));
        }
    std::map<int, State> clusters;
    for (size_t i = 0; i < live.size(); ++i)
      clusters[dsu.find(int(i))].push_back(std::move(live[i]));
    for (auto& [root, cl] : clusters)
      result = result.disjoint_product(eval_cluster(std::move(cl)));
    return result;
  }

 private:
  SkeinElement eval_cluster(State cl) {
    State key;
    key.reserve(cl.size());
    for (const auto& c : cl) key.push_back(canonical_comp(c));
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int target = INT_MAX;
    for (const auto& c : cl)
      for (int e : c)
        if (is_stub(e)) target = std::min(target, stub_id(e));

    int ci[2] = {-1, -1};
    size_t pi[2] = {0, 0};
    int rev[2] = {0, 0};
    for (size_t i = 0; i < cl.size(); ++i)
      for (size_t p = 0; p < cl[i].size(); ++p) {
        const int e = cl[i][p];
        if (is_stub(e) && stub_id(e) == target) {
          const int role = ((e - kStubBase) >> 1) & 1;
          ci[role] = int(i);
          pi[role] = p;
          rev[role] = (e - kStubBase) & 1;
        }
      }
    if (ci[0] < 0 || ci[1] < 0)
      throw InternalError("resolve: crossing with a missing stub");

    auto arc = [](const Comp& c, size_t from, size_t to) {
      Comp out;
      const size_t n = c.size();
      for (size_t k = (from + 1) % n; k != to; k = (k + 1) % n)
        out.push_back(c[k]);
      return out;
    };

    State rest;
    for (size_t i = 0; i < cl.size(); ++i)
      if (int(i) != ci[0] && int(i) != ci[1]) rest.push_back(cl[i]);

    State s_same = rest, s_rev = rest;
    if (ci[0] == ci[1]) {
      const Comp& c = cl[ci[0]];
      Comp a1 = arc(c, pi[0], pi[1]);
      Comp a2 = arc(c, pi[1], pi[0]);
      Comp joined = a1;
      const Comp rf = reverse_flip_comp(a2);
      joined.insert(joined.end(), rf.begin(), rf.end());
      s_same.push_back(std::move(a1));
      s_same.push_back(std::move(a2));
      s_rev.push_back(std::move(joined));
    } else {
      const Comp ap = arc(cl[ci[0]], pi[0], pi[0]);
      const Comp aq = arc(cl[ci[1]], pi[1], pi[1]);
      Comp j1 = ap;
      j1.insert(j1.end(), aq.begin(), aq.end());
      const Comp rf = reverse_flip_comp(aq);
      Comp j2 = ap;
      j2.insert(j2.end(), rf.begin(), rf.end());
      s_same.push_back(std::move(j1));
      s_rev.push_back(std::move(j2));
    }

    bool b = aligned_[target] != 0;
    if (rev[0]) b = !b;
    if (rev[1]) b = !b;
    const Laurent wa = opt_.flip_smoothing_convention ? Laurent::s() : Laurent::sbar();
    const Laurent wb = opt_.flip_smoothing_convention ? Laurent::sbar() : Laurent::s();
    SkeinElement v = eval_state(std::move(s_same)).scaled(b ? wa : wb);
    v = v + eval_state(std::move(s_rev)).scaled(b ? wb : wa);
    memo_.emplace(std::move(key), v);
    return v;
  }

  const std::vector<char>& aligned_;
  const ResolveOptions& opt_;
  long long states_ = 0;
  std::map<State, SkeinElement> memo_;
};

}  // namespace

SkeinElement resolve_diagram(const Diagram& d, const ResolveOptions& opt) {
  std::vector<char> aligned;
  aligned.reserve(d.crossings.size());
  for (const auto& cr : d.crossings) aligned.push_back(cr.aligned ? 1 : 0);

  State init;
  init.reserve(d.events.size());
  for (size_t c = 0; c < d.events.size(); ++c) {
    Comp comp;
    for (const auto& ev : d.events[c]) {
      if (ev.letter != 0) {
        comp.push_back(ev.letter);
      } else {
        const auto& cr = d.crossings[ev.crossing];
        const int role = (cr.over_curve == int(c)) ? 0 : 1;
        comp.push_back(make_stub(ev.crossing, role, 0));
      }
    }
    init.push_back(std::move(comp));
  }

  Engine eng(aligned, opt);
  return eng.eval_state(std::move(init));
}

}  // namespace skein
