#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/curve_word.hpp"

using namespace skein;

TEST_CASE("letter_key order") {
  CHECK(letter_key(1) == 2);
  CHECK(letter_key(-1) == 3);
  CHECK(letter_key(2) == 4);
  CHECK(letter_key(-4) == 9);
  CHECK(letter_key(1) < letter_key(-1));
  CHECK(letter_key(-1) < letter_key(2));
}

TEST_CASE("reduce_cyclic") {
  CHECK(reduce_cyclic({1, -1}) == Word{});
  CHECK(reduce_cyclic({1, 2, -2, 3}) == Word{1, 3});
  CHECK(reduce_cyclic({-2, 3, 2}) == Word{3});
  CHECK(reduce_cyclic({1, 2, -2, -1, 4}) == Word{4});
  CHECK(reduce_cyclic({1, -4, 2, 3, 4}) == Word{1, -4, 2, 3, 4});
  // (+v,-v) of different punctures never cancels
  CHECK(reduce_cyclic({1, -2}) == Word{1, -2});
}

TEST_CASE("canonical words are stable") {
  std::vector<Word> fixed = {
      {1, 2, 3, -2},       {1, -4, 2, 3, 4},    {1, 2, -4, 3, 4},
      {1, -4, 3, 4},       {2, 3, 4, -3},       {1, 2, 3, 4, -3},
      {1, 3, 4, -3},       {1, 2, 3, 4, -3, -2}, {1, 2, -1, 4},
      {1, 3},              {1, 2, 3, 4}};
  for (const auto& w : fixed) {
    CAPTURE(w);
    CHECK(canonical_word(w) == w);
  }
}

TEST_CASE("canonical_word rotation and reflection invariance") {
  Word w = {1, 2, 3, -2};
  CHECK(canonical_word({2, 3, -2, 1}) == w);
  CHECK(canonical_word({3, -2, 1, 2}) == w);
  CHECK(canonical_word(reverse_flip(w)) == w);
  for (const auto& v : {Word{1, -4, 2, 3, 4}, Word{1, 2, 3, 4, -3, -2},
                        Word{1, 2, -1, 4}, Word{2, 3, 4, -3}}) {
    CHECK(canonical_word(reverse_flip(v)) == canonical_word(v));
    Word rot(v.begin() + 1, v.end());
    rot.push_back(v.front());
    CHECK(canonical_word(rot) == canonical_word(v));
  }
}

TEST_CASE("word_less") {
  CHECK(word_less({3, 4}, {1, 2, 3, 4, -2}));   // shorter first
  CHECK(word_less({1, 2}, {1, 3}));
  CHECK(word_less({1, 2}, {1, -2}));
  CHECK(!word_less({1, 2}, {1, 2}));
}

TEST_CASE("multicurve canonicalization") {
  Multicurve m = mc_canonicalize({{3, 4}, {2, 3, -2, 1}});
  REQUIRE(m.comps.size() == 2);
  CHECK(m.comps[0] == Word{3, 4});
  CHECK(m.comps[1] == Word{1, 2, 3, -2});

  Multicurve dup = mc_canonicalize({{3, 4}, {3, 4}});
  REQUIRE(dup.comps.size() == 2);
  CHECK(dup.comps[0] == dup.comps[1]);

  CHECK_THROWS_AS((void)mc_canonicalize({{1, -1}}), InternalError);
}

TEST_CASE("multidegree") {
  CHECK(word_multidegree({1, 2, 3, -2}, 4) == std::vector<int>{1, 2, 1, 0});
  Multicurve m = mc_canonicalize({{1, 2}, {3, 4}});
  CHECK(mc_multidegree(m, 4) == std::vector<int>{1, 1, 1, 1});
}
