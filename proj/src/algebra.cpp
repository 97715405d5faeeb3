#include "skein/algebra.hpp"

#include <algorithm>
#include <bit>

namespace skein {

Gen full_gen(int n) { return Gen((1u << n) - 1); }

bool gen_valid(Gen g, int n) { return g != 0 && (g & ~full_gen(n)) == 0; }

bool gen_central(Gen g, int n) {
  return std::popcount(unsigned(g)) == 1 || g == full_gen(n);
}

std::vector<int> gen_punctures(Gen g) {
  std::vector<int> out;
  for (int v = 1; v <= 16; ++v)
    if (g & (1u << (v - 1))) out.push_back(v);
  return out;
}

std::string gen_name(Gen g, int n) {
  if (g == full_gen(n) && n > 1) return "t0";
  std::string s = "t";
  for (int v : gen_punctures(g)) s += char('0' + v);
  return s;
}

int gen_rank(Gen g, int n) {
  if (std::popcount(unsigned(g)) == 1)
    return std::countr_zero(unsigned(g));
  if (g == full_gen(n)) return n;
  const auto ps = gen_punctures(g);
  int rank = n + 1;
  // Count proper non-singleton subsets preceding g in (size, lex) order.
  // Small n keeps brute force cheap.
  for (Gen h = 1; h < full_gen(n); ++h) {
    if (std::popcount(unsigned(h)) <= 1) continue;
    const auto qs = gen_punctures(h);
    if (qs.size() < ps.size() || (qs.size() == ps.size() && qs < ps)) ++rank;
  }
  return rank;
}

bool gen_rank_less(Gen a, Gen b, int n) {
  return gen_rank(a, n) < gen_rank(b, n);
}

std::vector<int> monomial_multidegree(const Monomial& m, int n) {
  std::vector<int> d(n, 0);
  for (Gen g : m)
    for (int v : gen_punctures(g)) d[v - 1] += 1;
  return d;
}

GenPolynomial GenPolynomial::zero() { return GenPolynomial{}; }

GenPolynomial GenPolynomial::one() { return scalar(Laurent::one()); }

GenPolynomial GenPolynomial::gen(Gen g) {
  GenPolynomial p;
  p.add_term(Monomial{g}, Laurent::one());
  return p;
}

GenPolynomial GenPolynomial::scalar(const Laurent& c) {
  GenPolynomial p;
  p.add_term(Monomial{}, c);
  return p;
}

void GenPolynomial::add_term(const Monomial& m, const Laurent& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

GenPolynomial GenPolynomial::operator+(const GenPolynomial& o) const {
  GenPolynomial r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

GenPolynomial& GenPolynomial::operator+=(const GenPolynomial& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

GenPolynomial GenPolynomial::operator-(const GenPolynomial& o) const {
  GenPolynomial r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

GenPolynomial GenPolynomial::operator-() const {
  GenPolynomial r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

GenPolynomial GenPolynomial::operator*(const GenPolynomial& o) const {
  GenPolynomial r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(m, c1 * c2);
    }
  return r;
}

GenPolynomial GenPolynomial::scaled(const Laurent& c) const {
  GenPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
  return r;
}

Monomial mirror(const Monomial& m) {
  Monomial r(m.rbegin(), m.rend());
  return r;
}

GenPolynomial mirror(const GenPolynomial& p) {
  GenPolynomial r;
  for (const auto& [m, c] : p.terms()) r.add_term(mirror(m), c.bar());
  return r;
}

Gen permute(Gen g, int k, int n) {
  k = ((k % n) + n) % n;
  const Gen full = full_gen(n);
  return Gen(((g << k) | (g >> (n - k))) & full);
}

GenPolynomial permute(const GenPolynomial& p, int k, int n) {
  GenPolynomial r;
  for (const auto& [m, c] : p.terms()) {
    Monomial pm;
    pm.reserve(m.size());
    for (Gen g : m) pm.push_back(permute(g, k, n));
    r.add_term(pm, c);
  }
  return r;
}

Evaluator::Evaluator(int n, int variant, ResolveOptions opt)
    : n_(n), variant_(variant), opt_(opt) {}

const SkeinElement& Evaluator::evaluate(const Monomial& m) {
  {
    std::lock_guard<std::mutex> lk(mu_);
    if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  }
  // Peripheral factors bound once-punctured disks, so they embed disjointly
  // from everything else; peel them off instead of stacking them.
  Monomial core;
  Multicurve periph;
  for (Gen g : m) {
    if (!gen_central(g, n_)) {
      core.push_back(g);
    } else if (g == full_gen(n_)) {
      Word w(n_);
      for (int v = 1; v <= n_; ++v) w[v - 1] = v;
      periph.comps.push_back(std::move(w));
    } else {
      periph.comps.push_back(Word{gen_punctures(g).front()});
    }
  }
  if (!periph.comps.empty()) {
    std::sort(periph.comps.begin(), periph.comps.end(), word_less);
    SkeinElement v = evaluate(core).disjoint_product(
        SkeinElement::from_term(periph, Laurent::one()));
    std::lock_guard<std::mutex> lk(mu_);
    return cache_.emplace(m, std::move(v)).first->second;
  }
  SkeinElement v;
  if (m.empty()) {
    v = SkeinElement::unit();
  } else {
    std::vector<std::vector<int>> factors;
    factors.reserve(m.size());
    for (Gen g : m) {
      if (!gen_valid(g, n_)) throw InternalError("evaluate: bad generator");
      factors.push_back(gen_punctures(g));
    }
    v = resolve_diagram(stack(factors, n_, variant_), opt_);
  }
  std::lock_guard<std::mutex> lk(mu_);
  return cache_.emplace(m, std::move(v)).first->second;
}

SkeinElement Evaluator::evaluate(const GenPolynomial& p) {
  SkeinElement r;
  for (const auto& [m, c] : p.terms()) r = r + evaluate(m).scaled(c);
  return r;
}

bool Evaluator::is_zero(const GenPolynomial& p) {
  return evaluate(p).is_zero();
}

}  // namespace skein
