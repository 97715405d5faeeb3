#include "skein/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "skein/batch.hpp"
#include "skein/catalog.hpp"
#include "skein/geometry.hpp"
#include "skein/parser.hpp"
#include "skein/printer.hpp"
#include "skein/resolve.hpp"
#include "skein/rewrite.hpp"
#include "skein/table.hpp"

namespace skein {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFail = 2;
constexpr int kIrreducible = 3;
constexpr int kInternal = 4;

nlohmann::ordered_json monomial_json(const Monomial& m) {
  auto gens = nlohmann::ordered_json::array();
  for (Gen g : m) {
    auto sub = nlohmann::ordered_json::array();
    for (int v : gen_punctures(g)) sub.push_back(v);
    gens.push_back(std::move(sub));
  }
  return gens;
}

struct EvalOpts {
  std::string expr;
  bool json = false;
  int n = 4;
  int schedule = 0;
  long long max_states = ResolveOptions{}.max_states;
};

int do_eval(const EvalOpts& o, std::ostream& out) {
  GenPolynomial p = parse_expression(o.expr, o.n);
  ResolveOptions opt;
  opt.max_states = o.max_states;
  Evaluator ev(o.n, o.schedule, opt);
  SkeinElement e = ev.evaluate(p);
  if (o.json)
    out << element_json(e).dump() << "\n";
  else
    out << element_str(e) << "\n";
  return kOk;
}

struct VerifyOpts {
  std::string name;
  bool json = false;
  bool serial = false;
  bool selftest_negative = false;
};

int do_verify(const VerifyOpts& o, std::ostream& out, std::ostream& err) {
  Evaluator ev(4);
  Catalog cat = build_catalog();

  if (o.selftest_negative) {
    Relation bad = *cat.find("[2,2]-1");
    bad.rhs = bad.rhs.scaled(Laurent::q());
    VerifyReport rep = verify_relation(bad, ev);
    if (rep.zero) {
      err << "negative control failed: mutated relation still verifies\n";
      return kVerifyFail;
    }
    out << "negative control: mutated relation rejected\n";
    return kOk;
  }

  std::vector<const Relation*> rels;
  if (!o.name.empty()) {
    const Relation* r = cat.find(o.name);
    if (!r) {
      err << "unknown relation: " << o.name << "\n";
      return kUsage;
    }
    rels.push_back(r);
  } else {
    rels = cat.all();
  }

  std::vector<VerifyReport> reports(rels.size());
  parallel_for_index(
      rels.size(),
      [&](std::size_t i) { reports[i] = verify_relation(*rels[i], ev); },
      o.serial);

  std::size_t failed = 0;
  for (const VerifyReport& r : reports)
    if (!r.zero) ++failed;

  if (o.json) {
    auto arr = nlohmann::ordered_json::array();
    for (const VerifyReport& r : reports) {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      j["zero"] = r.zero;
      j["residual"] = element_json(r.residual);
      j["ms"] = 0;
      arr.push_back(std::move(j));
    }
    out << arr.dump() << "\n";
  } else {
    for (const VerifyReport& r : reports)
      if (!r.zero)
        out << "FAIL " << r.name << " residual " << element_str(r.residual)
            << "\n";
    if (failed == 0)
      out << "all " << reports.size() << " relations verified\n";
    else
      out << failed << " of " << reports.size() << " relations failed\n";
  }
  return failed == 0 ? kOk : kVerifyFail;
}

struct NfOpts {
  std::string expr;
  bool json = false;
  bool checked = false;
  long long max_steps = 1 << 20;
};

int do_nf(const NfOpts& o, std::ostream& out) {
  GenPolynomial p = parse_expression(o.expr, 4);
  Evaluator ev(4);
  Rewriter rw(ev, o.checked, o.max_steps);
  NfResult r = rw.nf(p);
  if (o.json) {
    nlohmann::ordered_json j;
    j["normal"] = poly_json(r.normal, 4);
    auto fnd = nlohmann::ordered_json::array();
    for (const Monomial& f : r.findings) fnd.push_back(monomial_json(f));
    j["findings"] = std::move(fnd);
    j["steps"] = r.steps;
    out << j.dump() << "\n";
  } else {
    out << poly_str(r.normal, 4) << "\n";
    for (const Monomial& f : r.findings)
      out << "irreducible: " << monomial_str(f, 4) << "\n";
  }
  return r.findings.empty() ? kOk : kIrreducible;
}

struct TableOpts {
  std::string row;
  bool json = false;
  bool serial = false;
};

int do_table(const TableOpts& o, std::ostream& out, std::ostream& err) {
  const std::vector<TableRow>& rows = table_rows();
  std::vector<const TableRow*> todo;
  if (!o.row.empty()) {
    const TableRow* found = nullptr;
    for (const TableRow& r : rows)
      if (r.name == o.row) found = &r;
    if (!found) {
      err << (o.row == "R25" ? "table has 24 rows (R1..R24)\n"
                             : "unknown row: " + o.row + " (R1..R24)\n");
      return kUsage;
    }
    todo.push_back(found);
  } else {
    for (const TableRow& r : rows) todo.push_back(&r);
  }

  Evaluator ev(4);
  std::vector<RowCheck> checks(todo.size());
  parallel_for_index(
      todo.size(),
      [&](std::size_t i) { checks[i] = check_table_row(*todo[i], ev); },
      o.serial);

  std::size_t failed = 0;
  for (const RowCheck& c : checks)
    if (!c.pass) ++failed;

  if (o.json) {
    auto arr = nlohmann::ordered_json::array();
    for (const RowCheck& c : checks) {
      nlohmann::ordered_json j;
      j["name"] = c.name;
      j["pass"] = c.pass;
      auto monos = nlohmann::ordered_json::array();
      for (const MonoCheck& mc : c.monos) {
        nlohmann::ordered_json mj;
        mj["mono"] = mc.mono;
        mj["lead_ok"] = mc.lead_ok;
        mj["lead_kind"] = mc.lead_kind;
        mj["lead_coeff"] = mc.lead_coeff;
        monos.push_back(std::move(mj));
      }
      j["monos"] = std::move(monos);
      j["spec_points"] = c.spec_points;
      j["ranks"] = c.ranks;
      j["need_rank"] = c.need_rank;
      j["ms"] = 0;
      arr.push_back(std::move(j));
    }
    out << arr.dump() << "\n";
  } else {
    for (const RowCheck& c : checks) {
      out << c.name << (c.pass ? " pass" : " FAIL") << " need=" << c.need_rank
          << " ranks=";
      for (std::size_t i = 0; i < c.ranks.size(); ++i)
        out << (i ? "," : "") << c.ranks[i];
      out << " points=";
      for (std::size_t i = 0; i < c.spec_points.size(); ++i)
        out << (i ? "," : "") << c.spec_points[i];
      for (const MonoCheck& mc : c.monos)
        if (!mc.lead_ok) out << " lead!" << mc.mono;
      out << " ms=" << c.ms << "\n";
    }
    if (failed == 0)
      out << "all " << checks.size() << " rows pass\n";
    else
      out << failed << " of " << checks.size() << " rows fail\n";
  }
  return failed == 0 ? kOk : kVerifyFail;
}

int do_catalog(bool json, std::ostream& out) {
  Catalog cat = build_catalog();
  auto provline = [](const Relation& r) {
    std::string s = r.prov.family.empty() ? "base" : "from " + r.prov.family;
    if (r.prov.sigma) s += " sigma^" + std::to_string(r.prov.sigma);
    if (r.prov.mirrored) s += " mirrored";
    if (r.prov.derived) s += " derived";
    return s;
  };
  if (json) {
    auto arr = nlohmann::ordered_json::array();
    auto push = [&](const Relation& r, const char* kind) {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      j["kind"] = kind;
      j["family"] = r.prov.family;
      j["sigma"] = r.prov.sigma;
      j["mirrored"] = r.prov.mirrored;
      j["derived"] = r.prov.derived;
      j["lhs"] = poly_str(r.lhs, 4);
      j["rhs"] = poly_str(r.rhs, 4);
      arr.push_back(std::move(j));
    };
    for (const Relation& r : cat.relations) push(r, "relation");
    for (const Relation& r : cat.identities) push(r, "identity");
    out << arr.dump() << "\n";
  } else {
    for (const Relation& r : cat.relations)
      out << r.name << "  [" << provline(r) << "]\n";
    for (const Relation& r : cat.identities)
      out << r.name << "  [identity, " << provline(r) << "]\n";
    out << cat.relations.size() << " relations, " << cat.identities.size()
        << " identities\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Skein algebra calculator for the five-punctured sphere"};
  app.require_subcommand(1);

  EvalOpts eo;
  CLI::App* eval = app.add_subcommand("eval", "Expand an expression");
  eval->add_option("expr", eo.expr, "Expression source")->required();
  eval->add_flag("--json", eo.json, "Machine-readable output");
  eval->add_option("--n", eo.n, "Puncture count")->check(CLI::Range(1, 9));
  eval->add_option("--schedule", eo.schedule)
      ->check(CLI::Range(0, kScheduleCount - 1))
      ->group("");
  eval->add_option("--max-states", eo.max_states)->group("");

  VerifyOpts vo;
  CLI::App* verify =
      app.add_subcommand("verify", "Check the relation catalog");
  verify->add_option("relation", vo.name, "Single relation name");
  verify->add_flag("--json", vo.json, "Machine-readable output");
  verify->add_flag("--serial", vo.serial)->group("");
  verify->add_flag("--selftest-negative", vo.selftest_negative)->group("");

  NfOpts no;
  CLI::App* nf = app.add_subcommand("nf", "Rewrite to normal form");
  nf->add_option("expr", no.expr, "Expression source")->required();
  nf->add_flag("--json", no.json, "Machine-readable output");
  nf->add_flag("--checked", no.checked, "Verify every applied rule");
  nf->add_option("--max-steps", no.max_steps)->group("");

  TableOpts to;
  CLI::App* table =
      app.add_subcommand("table", "Run the independence table checks");
  table->add_option("--row", to.row, "Single row (R1..R24)");
  table->add_flag("--json", to.json, "Machine-readable output");
  table->add_flag("--serial", to.serial)->group("");

  bool cj = false;
  CLI::App* catalog = app.add_subcommand("catalog", "List the relations");
  catalog->add_flag("--json", cj, "Machine-readable output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(eval)) return do_eval(eo, out);
    if (app.got_subcommand(verify)) return do_verify(vo, out, err);
    if (app.got_subcommand(nf)) return do_nf(no, out);
    if (app.got_subcommand(table)) return do_table(to, out, err);
    if (app.got_subcommand(catalog)) return do_catalog(cj, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.pos << ": " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace skein
