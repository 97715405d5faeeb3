#include "skein/rewrite.hpp"

#include <algorithm>

#include "skein/parser.hpp"
#include "skein/table.hpp"
#include "skein/triples.hpp"

namespace skein {

namespace {

constexpr int kN = 4;

Monomial sorted_by_rank(Monomial m) {
  std::sort(m.begin(), m.end(),
            [](Gen a, Gen b) { return gen_rank_less(a, b, kN); });
  return m;
}

Monomial noncentral_part(const Monomial& m) {
  Monomial nc;
  for (Gen g : m)
    if (!gen_central(g, kN)) nc.push_back(g);
  return nc;
}

std::array<int, 4> md_of(const Monomial& m) {
  auto v = monomial_multidegree(m, kN);
  return {v[0], v[1], v[2], v[3]};
}

std::array<int, 4> sorted_desc(std::array<int, 4> md) {
  std::sort(md.begin(), md.end(), std::greater<int>());
  return md;
}

Laurent coeff_of(const GenPolynomial& p, const Monomial& m) {
  auto it = p.terms().find(m);
  return it == p.terms().end() ? Laurent::zero() : it->second;
}

}  // namespace

struct Rewriter::Step {
  bool macro = false;
  int rule = -1;
  std::size_t pos = 0;
  std::vector<std::size_t> match;  // subsequence positions for a macro
};

Rewriter::Rewriter(Evaluator& ev, bool checked, long long max_steps)
    : ev_(ev), checked_(checked), max_steps_(max_steps) {
  if (ev.n() != kN)
    throw InternalError("rewriting is only defined for 4 punctures");

  Catalog cat = build_catalog();

  auto reduction_from = [this](const Relation& r, bool derived) {
    const auto& terms = r.lhs.terms();
    if (terms.size() != 1)
      throw InternalError("reduction head is not a monomial: " + r.name);
    const auto& [key, a] = *terms.begin();
    Rule rule;
    rule.name = r.name;
    rule.key = key;
    rule.rhs = r.rhs.scaled(a.pow(-1));
    rule.reduction = true;
    rule.derived = derived;
    reduction_order_.push_back(int(rules_.size()));
    rules_.push_back(std::move(rule));
  };

  // lhs has the shape a*(X*Y) + b*(Y*X) with X*Y rank-descending and a, b
  // units; the rule sends the descending product to (1/a)*rhs - (b/a)*(Y*X).
  auto swap_from = [this](const Relation& r, bool derived, bool skip_dup) {
    const Monomial* key = nullptr;
    const Monomial* other = nullptr;
    Laurent a, b;
    for (const auto& [m, c] : r.lhs.terms()) {
      if (m.size() != 2) throw InternalError("swap head shape: " + r.name);
      if (gen_rank_less(m[1], m[0], kN)) {
        key = &m;
        a = c;
      } else {
        other = &m;
        b = c;
      }
    }
    if (!key || !other) throw InternalError("swap head shape: " + r.name);
    if (swap_by_key_.count(*key)) {
      if (skip_dup) return;
      throw InternalError("duplicate swap key: " + r.name);
    }
    Laurent ainv = a.pow(-1);
    Rule rule;
    rule.name = r.name;
    rule.key = *key;
    rule.rhs = r.rhs.scaled(ainv);
    rule.rhs.add_term(*other, -(b * ainv));
    rule.reduction = false;
    rule.derived = derived;
    swap_by_key_[*key] = int(rules_.size());
    rules_.push_back(std::move(rule));
  };

  auto exact_swap = [this](Gen hi, Gen lo) {
    Rule rule;
    rule.name =
        "swap-" + gen_name(hi, kN) + "." + gen_name(lo, kN) + "-exact";
    rule.key = Monomial{hi, lo};
    rule.rhs = GenPolynomial::zero();
    rule.rhs.add_term(Monomial{lo, hi}, Laurent::one());
    rule.reduction = false;
    rule.derived = true;
    swap_by_key_[rule.key] = int(rules_.size());
    rules_.push_back(std::move(rule));
  };

  for (const char* nm :
       {"red-1", "red-2", "red-2.s1", "red-2.s2", "red-2.s3", "red-3",
        "red-3.s1", "red-3.s2", "red-3.s3", "red-4", "red-4.s1", "red-4.s2",
        "red-4.s3", "red-4.m", "red-5", "red-5.s1", "red-5.s2", "red-5.s3",
        "red-6", "red-6.s1", "red-6.s2", "red-6.s3", "red-7"})
    reduction_from(*cat.find(nm), false);

  const Relation* red4m = cat.find("red-4.m");
  for (int k = 1; k <= 3; ++k) {
    Relation r;
    r.name = "red-4.m.s" + std::to_string(k);
    r.lhs = permute(red4m->lhs, k, kN);
    r.rhs = permute(red4m->rhs, k, kN);
    reduction_from(r, true);
  }

  // Rank-sorted presentations of the reduction heads that are written in
  // unsorted order, obtained by one q-commutation of the first two factors.
  {
    const GenPolynomial kPrime = parse_expression(
        "(q^2-q^-2)*t24 + (q-q^-1)*(t2*t4+t1*t124)", kN);
    const GenPolynomial kPlain = parse_expression(
        "(q^2-q^-2)*t13 + (q-q^-1)*(t1*t3+t4*t134)", kN);
    const Laurent q2bar = Laurent::qbar() * Laurent::qbar();

    Relation r;
    r.name = "red-7.sorted";
    r.lhs = parse_expression("t12*t14*t23*t34", kN);
    r.rhs = cat.find("red-7")->rhs.scaled(q2bar) +
            (kPrime * parse_expression("t23*t34", kN)).scaled(Laurent::qbar());
    reduction_from(r, true);

    r.name = "red-6.s1.sorted";
    r.lhs = parse_expression("t14*t34*t123", kN);
    r.rhs = cat.find("red-6.s1")->rhs.scaled(q2bar) +
            (kPlain * GenPolynomial::gen(0b0111)).scaled(Laurent::qbar());
    reduction_from(r, true);

    r.name = "red-6.s2.sorted";
    r.lhs = parse_expression("t12*t14*t234", kN);
    r.rhs = cat.find("red-6.s2")->rhs.scaled(q2bar) +
            (kPrime * GenPolynomial::gen(0b1110)).scaled(Laurent::qbar());
    reduction_from(r, true);
  }

  for (const char* nm :
       {"[2,2]-1", "[2,2]-1.s1", "[2,2]-1.s2", "[2,2]-1.s3", "[2,2]-2",
        "[2,3]-1", "[2,3]-1.s1", "[2,3]-1.s2", "[2,3]-1.s3", "[2,3]-2",
        "[2,3]-2.s1", "[2,3]-2.s2", "[2,3]-2.s3", "[2,3]-3", "[2,3]-3.s1",
        "[2,3]-3.s2", "[2,3]-3.s3"})
    swap_from(*cat.find(nm), false, false);

  // A 2-set generator nested inside a 3-set one commutes with it exactly,
  // as do the two disjointly embedded 2-set pairs.
  for (Gen t : {Gen(0b0111), Gen(0b1011), Gen(0b1101), Gen(0b1110)}) {
    auto ps = gen_punctures(t);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j)
        exact_swap(t, Gen((Gen(1) << (ps[i] - 1)) | (Gen(1) << (ps[j] - 1))));
  }
  exact_swap(0b1100, 0b0011);
  exact_swap(0b0110, 0b1001);

  for (const auto& tr : derive_triple_relations(ev_)) {
    if (!tr.ok)
      throw InternalError("triple relation derivation failed: " + tr.name);
    bool pair = true;
    for (const auto& [m, c] : tr.relation.lhs.terms()) pair = pair && m.size() == 2;
    if (pair && tr.relation.lhs.terms().size() == 2)
      swap_from(tr.relation, true, true);
  }

  for (const TableRow& row : table_rows())
    for (int k = 0; k < kN; ++k) {
      std::array<int, 4> md{};
      for (int i = 0; i < kN; ++i) md[(i + k) % kN] = row.md[i];
      finding_mds_.insert(md);
      for (const TableMonomial& tm : row.monos) {
        Monomial img;
        img.reserve(tm.mono.size());
        for (Gen g : tm.mono) img.push_back(permute(g, k, kN));
        distinguished_.insert(sorted_by_rank(std::move(img)));
      }
    }
}

bool Rewriter::distinguished(const Monomial& sorted_noncentral) const {
  return distinguished_.count(sorted_noncentral) > 0;
}

void Rewriter::check_rule(Rule& r) {
  if (r.verified) return;
  r.verified = true;  // set first so the evaluator is consulted once
  GenPolynomial key_poly;
  key_poly.add_term(r.key, Laurent::one());
  if (!ev_.is_zero(key_poly - r.rhs))
    throw InternalError("rewrite rule disagrees with the oracle: " + r.name);
}

void Rewriter::bump_steps() {
  if (++steps_ > max_steps_)
    throw InternalError("nf: step budget exhausted");
}

NfResult Rewriter::nf(const Monomial& m) {
  GenPolynomial p;
  p.add_term(m, Laurent::one());
  return nf(p);
}

NfResult Rewriter::nf(const GenPolynomial& p) {
  steps_ = 0;
  NfResult res;
  std::set<Monomial> reported;
  for (const auto& [m, c] : p.terms()) {
    GenPolynomial part = nf_mono(m);
    // Descent audit against this input monomial: every non-central,
    // non-distinguished word in the output must have strictly smaller
    // multidegree (compared after sorting the degree vectors).
    const auto base = sorted_desc(md_of(noncentral_part(m)));
    const bool audited = finding_mds_.count(md_of(noncentral_part(m))) > 0;
    if (audited)
      for (const auto& [om, oc] : part.terms()) {
        Monomial nc = noncentral_part(om);
        if (nc.empty() || distinguished_.count(nc)) continue;
        if (sorted_desc(md_of(nc)) < base) continue;
        if (reported.insert(nc).second) res.findings.push_back(nc);
      }
    res.normal += part.scaled(c);
  }
  res.steps = steps_;
  return res;
}

GenPolynomial Rewriter::nf_mono(const Monomial& m) {
  Monomial centrals, nc;
  for (Gen g : m) (gen_central(g, kN) ? centrals : nc).push_back(g);
  GenPolynomial body = nf_nc(nc);
  if (centrals.empty()) return body;
  GenPolynomial out;
  for (const auto& [bm, c] : body.terms()) {
    Monomial cen = centrals, tail;
    for (Gen g : bm) (gen_central(g, kN) ? cen : tail).push_back(g);
    Monomial full = sorted_by_rank(std::move(cen));
    full.insert(full.end(), tail.begin(), tail.end());
    out.add_term(full, c);
  }
  return out;
}

GenPolynomial Rewriter::nf_nc(const Monomial& w) {
  if (w.empty()) return GenPolynomial::one();
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  if (in_progress_.count(w)) throw InternalError("nf: rewriting cycle");
  in_progress_.insert(w);
  GenPolynomial out;
  try {
    Step st;
    if (!find_step(w, st)) {
      // Terminal: canonical layout is the sorted central prefix (none here)
      // followed by the word itself.
      out.add_term(w, Laurent::one());
    } else if (st.macro) {
      bump_steps();
      out = apply_macro(w, st);
    } else {
      bump_steps();
      Rule& r = rules_[st.rule];
      if (checked_ || r.derived) check_rule(r);
      Monomial prefix(w.begin(), w.begin() + st.pos);
      Monomial suffix(w.begin() + st.pos + r.key.size(), w.end());
      out = apply(prefix, r.rhs, suffix);
    }
  } catch (...) {
    in_progress_.erase(w);
    throw;
  }
  in_progress_.erase(w);
  cache_.emplace(w, out);
  return out;
}

GenPolynomial Rewriter::apply(const Monomial& prefix, const GenPolynomial& body,
                              const Monomial& suffix) {
  GenPolynomial out;
  for (const auto& [m, c] : body.terms()) {
    Monomial full = prefix;
    full.insert(full.end(), m.begin(), m.end());
    full.insert(full.end(), suffix.begin(), suffix.end());
    out += nf_mono(full).scaled(c);
  }
  return out;
}

bool Rewriter::find_step(const Monomial& w, Step& out) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (int ri : reduction_order_) {
      const Monomial& key = rules_[ri].key;
      if (pos + key.size() > w.size()) continue;
      if (std::equal(key.begin(), key.end(), w.begin() + pos)) {
        out = Step{false, ri, pos, {}};
        return true;
      }
    }

  for (std::size_t pos = 0; pos + 1 < w.size(); ++pos) {
    if (!gen_rank_less(w[pos + 1], w[pos], kN)) continue;
    auto it = swap_by_key_.find(Monomial{w[pos], w[pos + 1]});
    if (it == swap_by_key_.end())
      throw InternalError("no swap rule for a descending pair");
    out = Step{false, it->second, pos, {}};
    return true;
  }

  // Separated occurrence of a reduction head in an otherwise sorted word:
  // tightest match (greedy earliest completion per start), leftmost on ties.
  for (int ri : reduction_order_) {
    const Monomial& key = rules_[ri].key;
    if (key.size() < 2 || key.size() > w.size()) continue;
    std::vector<std::size_t> best;
    for (std::size_t s = 0; s + key.size() <= w.size(); ++s) {
      if (w[s] != key[0]) continue;
      std::vector<std::size_t> m{s};
      std::size_t at = s + 1;
      for (std::size_t t = 1; t < key.size(); ++t) {
        while (at < w.size() && w[at] != key[t]) ++at;
        if (at == w.size()) {
          m.clear();
          break;
        }
        m.push_back(at++);
      }
      if (m.empty()) continue;
      if (best.empty() || m.back() - m.front() < best.back() - best.front())
        best = m;
    }
    if (best.empty() || best.back() - best.front() + 1 == key.size()) continue;
    out = Step{true, ri, best.front(), best};
    return true;
  }
  return false;
}

// Compacts a separated reduction head by bubbling every interleaved letter
// out to the left of the match. Each bubble move rewrites an ascending
// adjacent pair through the inverse of its swap rule, so the whole compound
// is exact; afterwards the head is contiguous and the reduction fires before
// any swap can undo the moves.
GenPolynomial Rewriter::apply_macro(const Monomial& w, const Step& st) {
  Monomial cur = w;
  Laurent coeff = Laurent::one();
  std::vector<std::pair<Laurent, Monomial>> corrections;

  std::vector<std::size_t> match = st.match;
  while (true) {
    std::size_t t = 0;
    while (t + 1 < match.size() && match[t + 1] == match[t] + 1) ++t;
    if (t + 1 == match.size()) break;
    const std::size_t j = match[t] + 1;  // leftmost interleaved letter
    for (std::size_t b = 0; b <= t; ++b) {
      const std::size_t pos = j - 1 - b;
      const Gen y = cur[pos], x = cur[pos + 1];
      if (x == y) continue;  // passing a letter over its twin relabels only
      auto it = swap_by_key_.find(Monomial{x, y});
      if (it == swap_by_key_.end()) {
        std::string msg = "nf: no swap rule while compacting";
        for (Gen g : cur) msg += " " + gen_name(g, kN);
        msg += " at " + std::to_string(pos);
        throw InternalError(msg);
      }
      Rule& sr = rules_[it->second];
      if (checked_ || sr.derived) check_rule(sr);
      // sr: x*y = c*(y*x) + R. Invert: y*x = (1/c)*x*y - (1/c)*R.
      const Laurent c = coeff_of(sr.rhs, Monomial{y, x});
      if (c.is_zero() || !c.is_unit())
        throw InternalError("nf: swap rule is not invertible");
      const Laurent cinv = c.pow(-1);
      for (const auto& [rm, rc] : sr.rhs.terms()) {
        if (rm == Monomial{y, x}) continue;
        Monomial word(cur.begin(), cur.begin() + pos);
        word.insert(word.end(), rm.begin(), rm.end());
        word.insert(word.end(), cur.begin() + pos + 2, cur.end());
        corrections.emplace_back(-(coeff * cinv * rc), std::move(word));
      }
      std::swap(cur[pos], cur[pos + 1]);
      coeff *= cinv;
    }
    for (std::size_t i = 0; i <= t; ++i) ++match[i];
    std::sort(match.begin(), match.end());
  }

  GenPolynomial out = nf_mono(cur).scaled(coeff);
  for (const auto& [c, word] : corrections) out += nf_mono(word).scaled(c);
  return out;
}

}  // namespace skein
