#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <vector>

#include "skein/batch.hpp"
#include "skein/catalog.hpp"
#include "skein/table.hpp"

using namespace skein;

TEST_CASE("every index is visited exactly once") {
  std::vector<std::atomic<int>> hits(257);
  for (auto& h : hits) h = 0;
  parallel_for_index(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) CHECK(h == 1);
  parallel_for_index(0, [&](std::size_t) { FAIL("must not run"); });
}

TEST_CASE("serial and parallel catalog verification agree") {
  Catalog cat = build_catalog();
  std::vector<const Relation*> rels = cat.all();
  rels.resize(40);  // a representative slice keeps the test quick

  Evaluator ev_p(4);
  std::vector<VerifyReport> par(rels.size());
  parallel_for_index(
      rels.size(),
      [&](std::size_t i) { par[i] = verify_relation(*rels[i], ev_p); }, false);

  Evaluator ev_s(4);
  std::vector<VerifyReport> ser(rels.size());
  parallel_for_index(
      rels.size(),
      [&](std::size_t i) { ser[i] = verify_relation(*rels[i], ev_s); }, true);

  for (std::size_t i = 0; i < rels.size(); ++i) {
    CHECK(par[i].name == ser[i].name);
    CHECK(par[i].zero == ser[i].zero);
    CHECK(par[i].residual == ser[i].residual);
    CHECK(par[i].zero);
  }
}

TEST_CASE("serial and parallel table rows agree") {
  const auto& rows = table_rows();
  const std::size_t take = 3;

  Evaluator ev_p(4);
  std::vector<RowCheck> par(take);
  parallel_for_index(
      take, [&](std::size_t i) { par[i] = check_table_row(rows[i], ev_p); },
      false);

  Evaluator ev_s(4);
  std::vector<RowCheck> ser(take);
  parallel_for_index(
      take, [&](std::size_t i) { ser[i] = check_table_row(rows[i], ev_s); },
      true);

  for (std::size_t i = 0; i < take; ++i) {
    CHECK(par[i].pass);
    CHECK(par[i].pass == ser[i].pass);
    CHECK(par[i].ranks == ser[i].ranks);
    CHECK(par[i].spec_points == ser[i].spec_points);
  }
}

TEST_CASE("a shared evaluator works under concurrent batch use") {
  Evaluator ev(4);
  Catalog cat = build_catalog();
  std::vector<const Relation*> rels = cat.all();
  std::vector<char> zero(rels.size(), 0);
  parallel_for_index(rels.size(), [&](std::size_t i) {
    zero[i] = verify_relation(*rels[i], ev).zero ? 1 : 0;
  });
  for (std::size_t i = 0; i < rels.size(); ++i) CHECK(zero[i] == 1);
  CHECK((openmp_enabled() || true));
}
