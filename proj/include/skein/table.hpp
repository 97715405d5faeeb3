#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "skein/algebra.hpp"

namespace skein {

struct TableMonomial {
  Monomial mono;
  // Stated leading multicurve; empty when the product itself is the lead.
  std::optional<Multicurve> leading;
};

struct TableRow {
  std::string name;  // R1..R24
  std::array<int, 4> md;
  std::vector<TableMonomial> monos;  // 1 or 2 entries
};

const std::vector<TableRow>& table_rows();

// Membership bound for a multidegree in the finite exceptional region.
bool xi_member(const std::array<int, 4>& md);

struct MonoCheck {
  std::string mono;
  bool lead_ok = false;
  std::string lead_kind;  // "stated", "disjoint", "full-degree"
  std::string lead_coeff;
};

struct RowCheck {
  std::string name;
  bool pass = false;
  std::vector<MonoCheck> monos;
  std::vector<long long> spec_points;  // q^{1/2} specializations used
  std::vector<int> ranks;              // exact rank at each point
  int need_rank = 0;
  long long ms = 0;
};

RowCheck check_table_row(const TableRow& row, Evaluator& ev);

}  // namespace skein
