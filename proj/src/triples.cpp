#include "skein/triples.hpp"

#include <array>
#include <string>

namespace skein {

namespace {

Gen bit(int v) { return Gen(1) << (v - 1); }

std::string digits(Gen g) {
  std::string s;
  for (int v = 1; v <= 4; ++v)
    if (g & bit(v)) s += char('0' + v);
  return s;
}

Multicurve curve_of(Gen g) {
  Word w;
  for (int v = 1; v <= 4; ++v)
    if (g & bit(v)) w.push_back(v);
  return mc_canonicalize({w});
}

Multicurve loops_of(std::vector<Gen> gs) {
  std::vector<Word> comps;
  for (Gen g : gs) {
    Word w;
    for (int v = 1; v <= 4; ++v)
      if (g & bit(v)) w.push_back(v);
    comps.push_back(std::move(w));
  }
  return mc_canonicalize(std::move(comps));
}

struct Candidate {
  Multicurve mc;       // where the coefficient is read off
  GenPolynomial mono;  // the crossingless product it certifies
};

// The candidate products are pairwise disjoint curves, so each evaluates
// to exactly its own multicurve and coefficients can be read directly.
std::vector<Candidate> candidates(Gen a, Gen b, Gen t, bool widen) {
  const Gen c = a ^ b;
  const Gen m = a & b;
  std::vector<int> cv;
  for (int v = 1; v <= 4; ++v)
    if (c & bit(v)) cv.push_back(v);
  std::vector<Candidate> out;
  out.push_back({curve_of(c), GenPolynomial::gen(c)});
  out.push_back({loops_of({bit(cv[0]), bit(cv[1])}),
                 GenPolynomial::gen(bit(cv[0])) * GenPolynomial::gen(bit(cv[1]))});
  out.push_back({loops_of({m, t}), GenPolynomial::gen(m) * GenPolynomial::gen(t)});
  if (widen) {
    out.push_back({curve_of(t), GenPolynomial::gen(t)});
    std::vector<Gen> singles;
    GenPolynomial prod = GenPolynomial::one();
    for (int v = 1; v <= 4; ++v)
      if (t & bit(v)) {
        singles.push_back(bit(v));
        prod = prod * GenPolynomial::gen(bit(v));
      }
    out.push_back({loops_of(singles), prod});
    for (int v = 1; v <= 4; ++v)
      if (t & bit(v))
        out.push_back({loops_of({bit(v), bit(v)}),
                       GenPolynomial::gen(bit(v)) * GenPolynomial::gen(bit(v))});
  }
  return out;
}

// Solves q*X*Y - qbar*Y*X = sum(c_i * candidate_i) by reading each c_i at
// its candidate's multicurve, then checking the whole element.
bool solve_pair(Evaluator& ev, Gen first, Gen second, Gen t, bool widen,
                Relation& rel, SkeinElement& residual) {
  const SkeinElement& e_fs = ev.evaluate(Monomial{first, second});
  const SkeinElement& e_sf = ev.evaluate(Monomial{second, first});
  SkeinElement lhs =
      e_fs.scaled(Laurent::q()) - e_sf.scaled(Laurent::qbar());
  SkeinElement fit;
  GenPolynomial rhs = GenPolynomial::zero();
  for (const auto& cand : candidates(first, second, t, widen)) {
    Laurent c = lhs.coeff(cand.mc);
    if (c.is_zero()) continue;
    fit.add_term(cand.mc, c);
    rhs += cand.mono.scaled(c);
  }
  residual = lhs - fit;
  if (!residual.is_zero()) return false;
  GenPolynomial l;
  l.add_term(Monomial{first, second}, Laurent::q());
  l.add_term(Monomial{second, first}, -Laurent::qbar());
  rel.lhs = l;
  rel.rhs = rhs;
  return true;
}

Gen subst_gen(Gen g, const std::array<int, 3>& to) {
  Gen out = 0;
  for (int p = 1; p <= 3; ++p)
    if (g & bit(p)) out |= bit(to[p - 1]);
  return out;
}

GenPolynomial subst_poly(const GenPolynomial& p, const std::array<int, 3>& to) {
  GenPolynomial out = GenPolynomial::zero();
  for (const auto& [mono, c] : p.terms()) {
    Monomial m2;
    m2.reserve(mono.size());
    for (Gen g : mono) m2.push_back(subst_gen(g, to));
    out.add_term(m2, c);
  }
  return out;
}

}  // namespace

std::vector<TripleResult> derive_triple_relations(Evaluator& ev) {
  std::vector<TripleResult> out;
  const std::array<std::array<int, 3>, 4> triples = {
      {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};

  for (const auto& tr : triples) {
    const Gen t = bit(tr[0]) | bit(tr[1]) | bit(tr[2]);
    // The three 2-subsets in index order; each unordered pair once.
    const std::array<Gen, 3> subs = {Gen(bit(tr[0]) | bit(tr[1])),
                                     Gen(bit(tr[0]) | bit(tr[2])),
                                     Gen(bit(tr[1]) | bit(tr[2]))};
    const std::array<std::array<int, 2>, 3> pairing = {
        {{0, 2}, {0, 1}, {1, 2}}};
    for (const auto& pr : pairing) {
      const Gen a = subs[pr[0]], b = subs[pr[1]];
      TripleResult res;
      res.name = "triple-" + digits(t) + "-" + digits(a) + "." + digits(b);
      res.relation.name = res.name;
      res.relation.prov.family = "triple";
      res.relation.prov.derived = true;
      bool ok = false;
      for (bool widen : {false, true}) {
        // Orientation: which factor sits on top with the q weight.
        for (Gen first : {b, a}) {
          const Gen second = first == a ? b : a;
          if (solve_pair(ev, first, second, t, widen, res.relation,
                         res.residual)) {
            ok = true;
            res.widened = widen;
            break;
          }
        }
        if (ok) break;
      }
      res.ok = ok;
      out.push_back(std::move(res));
    }
  }

  // Cubic satisfied by each 3-subset generator: the {1,2,3} relation
  // transported along the order-preserving index substitution.
  Catalog cat = build_catalog();
  const Relation* cube = cat.find("red-3");
  for (const auto& tr : triples) {
    const Gen t = bit(tr[0]) | bit(tr[1]) | bit(tr[2]);
    TripleResult res;
    res.name = "triple-" + digits(t) + "-cube";
    res.relation.name = res.name;
    res.relation.prov.family = "red-3";
    res.relation.prov.derived = true;
    res.relation.lhs = subst_poly(cube->lhs, tr);
    res.relation.rhs = subst_poly(cube->rhs, tr);
    res.residual = ev.evaluate(res.relation.lhs - res.relation.rhs);
    res.ok = res.residual.is_zero();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace skein
