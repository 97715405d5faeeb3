#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/laurent.hpp"

using skein::Int;
using skein::InternalError;
using skein::Laurent;
using skein::Rat;

TEST_CASE("ring basics") {
  CHECK(Laurent::q() * Laurent::qbar() == Laurent::one());
  CHECK(Laurent::s() * Laurent::s() == Laurent::q());
  CHECK(Laurent::sbar() * Laurent::s() == Laurent::one());
  CHECK(Laurent::alpha() == Laurent::q() + Laurent::qbar());
  CHECK(Laurent::delta() == -Laurent::alpha());
  CHECK((Laurent::q() - Laurent::q()).is_zero());
  CHECK(Laurent::one().is_one());
  CHECK(Laurent::zero().is_zero());
}

TEST_CASE("units") {
  CHECK(Laurent::q().is_unit());
  CHECK((-Laurent::sbar()).is_unit());
  CHECK(!Laurent::alpha().is_unit());
  CHECK(!(Laurent::one() + Laurent::one()).is_unit());
  CHECK(!Laurent::zero().is_unit());
}

TEST_CASE("pow") {
  CHECK(Laurent::q().pow(3) == Laurent::q() * Laurent::q() * Laurent::q());
  CHECK(Laurent::q().pow(-2) == Laurent::qbar() * Laurent::qbar());
  CHECK(Laurent::s().pow(2) == Laurent::q());
  CHECK(Laurent::alpha().pow(0) == Laurent::one());
  CHECK_THROWS_AS((void)Laurent::alpha().pow(-1), InternalError);
}

TEST_CASE("bar") {
  CHECK(Laurent::q().bar() == Laurent::qbar());
  CHECK(Laurent::s().bar() == Laurent::sbar());
  CHECK(Laurent::alpha().bar() == Laurent::alpha());
  Laurent x = Laurent::q() * Laurent::term(Int(3), 0) + Laurent::s();
  CHECK(x.bar().bar() == x);
}

TEST_CASE("specialize") {
  CHECK(Laurent::q().specialize(3) == Rat(9));
  CHECK(Laurent::s().specialize(3) == Rat(3));
  CHECK(Laurent::qbar().specialize(3) == Rat(1, 9));
  CHECK((Laurent::q() - Laurent::qbar()).specialize(2) == Rat(15, 4));
  CHECK(Laurent::zero().specialize(5) == Rat(0));
  CHECK_THROWS_AS((void)Laurent::q().specialize(0), InternalError);
}

TEST_CASE("printing") {
  CHECK(Laurent::zero().str() == "0");
  CHECK(Laurent::one().str() == "1");
  CHECK(Laurent::q().str() == "q");
  CHECK(Laurent::qbar().str() == "q^-1");
  CHECK(Laurent::s().str() == "s");
  CHECK(Laurent::sbar().str() == "s^-1");
  CHECK(Laurent::alpha().str() == "q + q^-1");
  CHECK(Laurent::delta().str() == "-q - q^-1");
  CHECK((Laurent::q() * Laurent::q() - Laurent::qbar() * Laurent::qbar())
            .str() == "q^2 - q^-2");
  CHECK(Laurent::term(Int(-3), 2).str() == "-3*q");
  CHECK((Laurent::q() + Laurent::one()).str() == "q + 1");
}

TEST_CASE("ordering is total") {
  std::vector<Laurent> xs = {Laurent::zero(), Laurent::one(), Laurent::q(),
                             Laurent::s(), Laurent::alpha(), -Laurent::q()};
  for (auto& a : xs)
    for (auto& b : xs) {
      int rel = int(a < b) + int(b < a) + int(a == b);
      CHECK(rel == 1);  // exactly one of <, >, ==
      if (&a == &b) break;
    }
  for (auto& a : xs) CHECK(!(a < a));
}
