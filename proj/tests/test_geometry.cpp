#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/geometry.hpp"

using namespace skein;

namespace {
int cross_count(const std::vector<std::vector<int>>& factors, int variant = 0) {
  return static_cast<int>(stack(factors, 4, variant).crossings.size());
}
}  // namespace

TEST_CASE("single curves cross nothing and read their own letters") {
  for (int variant = 0; variant < kScheduleCount; ++variant) {
    CAPTURE(variant);
    Diagram d1 = stack({{1}}, 4, variant);
    CHECK(d1.crossings.empty());
    CHECK(d1.letters_of_curve(0) == Word{1});

    Diagram d14 = stack({{1, 4}}, 4, variant);
    CHECK(d14.crossings.empty());
    CHECK(d14.letters_of_curve(0) == Word{1, 4});

    Diagram d13 = stack({{1, 3}}, 4, variant);
    CHECK(d13.crossings.empty());
    CHECK(d13.letters_of_curve(0) == Word{1, 3});

    Diagram d0 = stack({{1, 2, 3, 4}}, 4, variant);
    CHECK(d0.crossings.empty());
    CHECK(d0.letters_of_curve(0) == Word{1, 2, 3, 4});
  }
}

TEST_CASE("nested and parallel stacks stay disjoint") {
  CHECK(cross_count({{1}, {1}}) == 0);
  CHECK(cross_count({{1, 2}, {3, 4}}) == 0);
  CHECK(cross_count({{1, 4}, {2, 3}}, 0) == 8);  // tented walls must cross
  CHECK(cross_count({{1, 2}, {1, 2}}) == 0);
  CHECK(cross_count({{1, 2, 3}, {1, 2}}) == 0);  // nested
  CHECK(cross_count({{1, 2, 3, 4}, {2}, {3}}) == 0);
}

TEST_CASE("known crossing counts") {
  CHECK(cross_count({{1, 2}, {2, 3}}) == 2);
  CHECK(cross_count({{2, 3}, {1, 2}}) == 2);
  CHECK(cross_count({{1, 3}, {2, 4}}) == 6);
  CHECK(cross_count({{2, 3}, {3, 4}}) == 2);
}

TEST_CASE("crossings carry levels and sorted positions") {
  Diagram d = stack({{1, 2}, {2, 3}}, 4, 0);
  REQUIRE(d.crossings.size() == 2);
  for (const auto& c : d.crossings) {
    CHECK(c.over_curve == 0);  // first factor is on top
    CHECK(c.under_curve == 1);
  }
  for (size_t i = 1; i < d.crossings.size(); ++i) {
    const auto& a = d.crossings[i - 1].p;
    const auto& b = d.crossings[i].p;
    CHECK((a.x < b.x || (a.x == b.x && a.y < b.y)));
  }
  CHECK(d.letters_of_curve(0) == Word{1, 2});
  CHECK(d.letters_of_curve(1) == Word{2, 3});
}

TEST_CASE("event lists are consistent") {
  Diagram d = stack({{1, 3}, {2, 4}}, 4, 0);
  REQUIRE(d.crossings.size() == 6);
  std::vector<int> seen(d.crossings.size(), 0);
  for (const auto& ev : d.events)
    for (const auto& e : ev)
      if (e.letter == 0) {
        REQUIRE(e.crossing >= 0);
        REQUIRE(e.crossing < static_cast<int>(d.crossings.size()));
        seen[e.crossing]++;
      }
  for (int s : seen) CHECK(s == 2);  // each crossing is visited once per strand
}

TEST_CASE("every schedule gives the same combinatorics") {
  for (int variant = 0; variant < kScheduleCount; ++variant) {
    CAPTURE(variant);
    CHECK(cross_count({{1, 2}, {2, 3}}, variant) == 2);
    CHECK(cross_count({{1, 3}, {2, 4}}, variant) == 6);
    CHECK(cross_count({{1, 4}, {2, 3}}, variant) == 8);
  }
}

TEST_CASE("deterministic layout") {
  Diagram a = stack({{1, 3}, {2, 4}}, 4, 2);
  Diagram b = stack({{1, 3}, {2, 4}}, 4, 2);
  REQUIRE(a.crossings.size() == b.crossings.size());
  for (size_t i = 0; i < a.crossings.size(); ++i) {
    CHECK(a.crossings[i].p.x == b.crossings[i].p.x);
    CHECK(a.crossings[i].p.y == b.crossings[i].p.y);
    CHECK(a.crossings[i].aligned == b.crossings[i].aligned);
  }
}
