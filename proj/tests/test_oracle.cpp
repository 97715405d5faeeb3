#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>

#include "skein/algebra.hpp"
#include "skein/geometry.hpp"
#include "skein/parser.hpp"
#include "skein/printer.hpp"
#include "skein/resolve.hpp"

using namespace skein;

namespace {

Gen G(std::initializer_list<int> vs) {
  Gen g = 0;
  for (int v : vs) g |= Gen(1) << (v - 1);
  return g;
}

SkeinElement one_mc(std::vector<Word> comps) {
  return SkeinElement::from_term(mc_canonicalize(std::move(comps)),
                                 Laurent::one());
}

}  // namespace

TEST_CASE("crossingless monomials evaluate to their own multicurve") {
  Evaluator ev(4);
  CHECK(ev.evaluate(Monomial{}) == SkeinElement::unit());
  CHECK(ev.evaluate({G({1})}) == one_mc({{1}}));
  CHECK(ev.evaluate({G({1, 2})}) == one_mc({{1, 2}}));
  CHECK(ev.evaluate({G({1, 3})}) == one_mc({{1, 3}}));
  CHECK(ev.evaluate({G({1, 2, 3, 4})}) == one_mc({{1, 2, 3, 4}}));
  CHECK(ev.evaluate({G({1}), G({1})}) == one_mc({{1}, {1}}));
  CHECK(ev.evaluate({G({1, 2}), G({3, 4})}) == one_mc({{1, 2}, {3, 4}}));
  CHECK(ev.evaluate({G({1, 2, 3}), G({1, 2}), G({3})}) ==
        one_mc({{1, 2, 3}, {1, 2}, {3}}));
}

TEST_CASE("two-crossing resolution calibration") {
  Evaluator ev(4);
  SkeinElement expected;
  expected.add_term(mc_canonicalize({{1, 2, 3, -2}}), Laurent::q());
  expected.add_term(mc_canonicalize({{1, 3}}), Laurent::qbar());
  expected.add_term(mc_canonicalize({{1}, {3}}), Laurent::one());
  expected.add_term(mc_canonicalize({{2}, {1, 2, 3}}), Laurent::one());
  CHECK(ev.evaluate({G({1, 2}), G({2, 3})}) == expected);
}

TEST_CASE("swapped smoothing convention is detectably wrong") {
  ResolveOptions opt;
  opt.flip_smoothing_convention = true;
  Evaluator flipped(4, 0, opt);
  SkeinElement expected;
  expected.add_term(mc_canonicalize({{1, 2, 3, -2}}), Laurent::q());
  expected.add_term(mc_canonicalize({{1, 3}}), Laurent::qbar());
  expected.add_term(mc_canonicalize({{1}, {3}}), Laurent::one());
  expected.add_term(mc_canonicalize({{2}, {1, 2, 3}}), Laurent::one());
  CHECK(flipped.evaluate({G({1, 2}), G({2, 3})}) != expected);
}

TEST_CASE("second two-crossing product") {
  Evaluator ev(4);
  SkeinElement expected;
  expected.add_term(mc_canonicalize({{2, 3, 4, -3}}), Laurent::q());
  expected.add_term(mc_canonicalize({{2, 4}}), Laurent::qbar());
  expected.add_term(mc_canonicalize({{2}, {4}}), Laurent::one());
  expected.add_term(mc_canonicalize({{3}, {2, 3, 4}}), Laurent::one());
  CHECK(ev.evaluate({G({2, 3}), G({3, 4})}) == expected);
}

TEST_CASE("stacking order conjugates the coefficients") {
  Evaluator ev(4);
  const SkeinElement& ab = ev.evaluate({G({1, 2}), G({2, 3})});
  const SkeinElement& ba = ev.evaluate({G({2, 3}), G({1, 2})});
  REQUIRE(ab.terms().size() == ba.terms().size());
  for (const auto& [mc, c] : ab.terms()) CHECK(ba.coeff(mc) == c.bar());
}

TEST_CASE("first commutation relation closes") {
  Evaluator ev(4);
  GenPolynomial p = parse_expression(
      "q*t23*t12 - q^-1*t12*t23 - "
      "((q^2-q^-2)*t13 + (q-q^-1)*(t1*t3+t2*t123))",
      4);
  CHECK(ev.is_zero(p));
}

TEST_CASE("six-crossing reduction closes") {
  Evaluator ev(4);
  GenPolynomial p = parse_expression(
      "t13*t24 - (A*t0 + t1*t234 + t2*t134 + t3*t124 + t4*t123 + "
      "q^2*t12*t34 + q^-2*t14*t23 + q*t3*t4*t12 + q^-1*t1*t4*t23 + "
      "q*t1*t2*t34 + q^-1*t2*t3*t14 + t1*t2*t3*t4)",
      4);
  CHECK(ev.is_zero(p));
}

TEST_CASE("schedule invariance") {
  SkeinElement base = Evaluator(4, 0).evaluate({G({1, 2}), G({2, 3})});
  for (int variant = 1; variant < kScheduleCount; ++variant) {
    CAPTURE(variant);
    Evaluator ev(4, variant);
    CHECK(ev.evaluate({G({1, 2}), G({2, 3})}) == base);
    CHECK(ev.evaluate({G({1, 4}), G({2, 3})}) ==
          Evaluator(4, 0).evaluate({G({1, 4}), G({2, 3})}));
  }
}

TEST_CASE("state budget is enforced") {
  ResolveOptions opt;
  opt.max_states = 1;
  Evaluator ev(4, 0, opt);
  CHECK_THROWS_AS((void)ev.evaluate({G({1, 3}), G({2, 4})}), InternalError);
}

TEST_CASE("peeling peripheral factors matches full stacking") {
  // Central generators bound once-punctured disks, so evaluate() splits them
  // off; the geometric stack of the whole word must agree.
  Evaluator ev(4);
  auto brute = [](const Monomial& m) {
    std::vector<std::vector<int>> factors;
    for (Gen g : m) factors.push_back(gen_punctures(g));
    return resolve_diagram(stack(factors, 4, 0), ResolveOptions{});
  };
  const Monomial cases[] = {
      {G({1})},
      {G({1, 2, 3, 4})},
      {G({1}), G({1})},
      {G({1}), G({1, 3})},
      {G({1, 3}), G({1})},
      {G({1, 2, 3, 4}), G({1, 2}), G({3, 4})},
      {G({2}), G({1, 3}), G({2, 4})},
      {G({4}), G({2, 3, 4}), G({1, 2, 3, 4})},
      {G({1}), G({1}), G({2}), G({1, 2}), G({1, 3})},
      {G({2}), G({2}), G({2}), G({4}), G({4}), G({1}), G({1, 2}), G({1, 3}),
       G({3, 4})},
  };
  for (const Monomial& m : cases) {
    CAPTURE(monomial_str(m, 4));
    CHECK(ev.evaluate(m) == brute(m));
  }
}
