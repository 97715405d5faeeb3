#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "skein/algebra.hpp"
#include "skein/parser.hpp"

using namespace skein;

namespace {
GenPolynomial P(const std::string& s) { return parse_expression(s, 4); }
}

TEST_CASE("generator masks and names") {
  CHECK(full_gen(4) == 15);
  CHECK(gen_valid(3, 4));
  CHECK_FALSE(gen_valid(0, 4));
  CHECK_FALSE(gen_valid(16, 4));
  CHECK(gen_name(3, 4) == "t12");
  CHECK(gen_name(15, 4) == "t0");
  CHECK(gen_name(1, 4) == "t1");
  CHECK(gen_punctures(Gen(0b1010)) == std::vector<int>{2, 4});
}

TEST_CASE("centrality is exactly singles plus the full subset") {
  int central = 0;
  for (Gen g = 1; g <= 15; ++g)
    if (gen_central(g, 4)) ++central;
  CHECK(central == 5);
  CHECK(gen_central(1, 4));
  CHECK(gen_central(8, 4));
  CHECK(gen_central(15, 4));
  CHECK_FALSE(gen_central(3, 4));
  CHECK_FALSE(gen_central(7, 4));
}

TEST_CASE("rank order lists 2-subsets before 3-subsets") {
  // t1..t4, t0, then t12 t13 t14 t23 t24 t34, then t123 t124 t134 t234.
  std::vector<std::string> order;
  std::vector<Gen> gens;
  for (Gen g = 1; g <= 15; ++g) gens.push_back(g);
  std::sort(gens.begin(), gens.end(),
            [](Gen a, Gen b) { return gen_rank_less(a, b, 4); });
  for (Gen g : gens) order.push_back(gen_name(g, 4));
  CHECK(order == std::vector<std::string>{"t1", "t2", "t3", "t4", "t0", "t12",
                                          "t13", "t14", "t23", "t24", "t34",
                                          "t123", "t124", "t134", "t234"});
}

TEST_CASE("index rotation") {
  CHECK(permute(Gen(0b0101), 1, 4) == Gen(0b1010));
  CHECK(permute(Gen(0b1000), 1, 4) == Gen(0b0001));
  CHECK(permute(Gen(0b1111), 3, 4) == Gen(0b1111));
  CHECK(permute(P("t14*t234"), 1, 4) == P("t12*t134"));
  CHECK(permute(permute(P("q*t12 - t134"), 3, 4), 1, 4) == P("q*t12 - t134"));
}

TEST_CASE("mirror reverses factors and bars coefficients") {
  CHECK(mirror(P("q*t12*t23")) == P("q^-1*t23*t12"));
  CHECK(mirror(mirror(P("s*t13*t24 + 3*t1"))) == P("s*t13*t24 + 3*t1"));
  CHECK(mirror(P("t12*t23*t34")) == P("t34*t23*t12"));
}

TEST_CASE("polynomial arithmetic preserves factor order") {
  CHECK(P("t12*t23") != P("t23*t12"));
  CHECK(P("(t1+t2)*t3") == P("t1*t3 + t2*t3"));
  CHECK(P("t12*t23 - t12*t23").is_zero());
  CHECK(P("2*t1").scaled(Laurent::q()) == P("2*q*t1"));
  GenPolynomial a = P("t12");
  a += P("q*t13");
  CHECK(a == P("t12 + q*t13"));
}

TEST_CASE("multidegree counts puncture incidences") {
  Monomial m{Gen(0b0011), Gen(0b0110), Gen(0b1110)};  // t12 t23 t234
  CHECK(monomial_multidegree(m, 4) == std::vector<int>{1, 3, 2, 1});
  CHECK(monomial_multidegree(Monomial{}, 4) == std::vector<int>{0, 0, 0, 0});
  CHECK(monomial_multidegree(Monomial{Gen(15)}, 4) ==
        std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("evaluator maps generators to their standard curves") {
  Evaluator ev(4);
  const SkeinElement& e = ev.evaluate(Monomial{Gen(0b0011)});
  REQUIRE(e.terms().size() == 1);
  const auto& [mc, c] = *e.terms().begin();
  CHECK(c.is_one());
  REQUIRE(mc.comps.size() == 1);
  CHECK(mc.comps[0] == Word{1, 2});
  CHECK(ev.n() == 4);
}

TEST_CASE("central factors commute through evaluation") {
  Evaluator ev(4);
  CHECK(ev.is_zero(P("t1*t13 - t13*t1")));
  CHECK(ev.is_zero(P("t0*t123*t24 - t123*t24*t0")));
  CHECK(ev.is_zero(P("t2*t0*t14 - t0*t14*t2")));
}
