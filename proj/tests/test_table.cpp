#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/table.hpp"

using namespace skein;

TEST_CASE("the table has 24 rows with full-support multidegrees") {
  const auto& rows = table_rows();
  REQUIRE(rows.size() == 24);
  CHECK(rows.front().name == "R1");
  CHECK(rows.back().name == "R24");
  for (const TableRow& r : rows) {
    CAPTURE(r.name);
    CHECK_FALSE(r.monos.empty());
    for (int d : r.md) CHECK(d > 0);
    CHECK(xi_member(r.md));
  }
}

TEST_CASE("exceptional region membership bound") {
  CHECK(xi_member({1, 1, 1, 1}));
  CHECK(xi_member({2, 2, 2, 4}));
  CHECK(xi_member({0, 0, 0, 0}));
  CHECK_FALSE(xi_member({8, 1, 1, 1}));
  CHECK_FALSE(xi_member({5, 0, 0, 0}));
  CHECK(xi_member({4, 0, 0, 0}));
}

TEST_CASE("every row passes its independence check") {
  Evaluator ev(4);
  for (const TableRow& row : table_rows()) {
    RowCheck c = check_table_row(row, ev);
    CAPTURE(row.name);
    CHECK(c.pass);
    CHECK(c.need_rank == int(row.monos.size()));
    CHECK(c.ranks.size() == 3);
    for (int r : c.ranks) CHECK(r == c.need_rank);
    CHECK(c.spec_points.size() == 3);
    for (long long s : c.spec_points) {
      CHECK(s >= 2);
      CHECK(s <= 97);
    }
    for (const MonoCheck& mc : c.monos) CHECK(mc.lead_ok);
  }
}

TEST_CASE("stated leads are exercised alongside computed ones") {
  Evaluator ev(4);
  const auto& rows = table_rows();
  RowCheck r1 = check_table_row(rows[0], ev);
  for (const MonoCheck& mc : r1.monos) CHECK(mc.lead_kind == "disjoint");
  RowCheck r2 = check_table_row(rows[1], ev);
  for (const MonoCheck& mc : r2.monos) CHECK(mc.lead_kind == "stated");
}

TEST_CASE("specialization points are reproducible per row") {
  Evaluator ev(4);
  RowCheck a = check_table_row(table_rows()[4], ev);
  RowCheck b = check_table_row(table_rows()[4], ev);
  CHECK(a.spec_points == b.spec_points);
  CHECK(a.ranks == b.ranks);
}
