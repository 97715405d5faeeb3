#include "skein/catalog.hpp"

#include <chrono>
#include <stdexcept>

#include "skein/parser.hpp"

namespace skein {

namespace {

constexpr int kN = 4;

GenPolynomial P(const std::string& src) { return parse_expression(src, kN); }

SkeinElement expect(std::vector<std::pair<Laurent, std::vector<Word>>> terms) {
  SkeinElement e;
  for (auto& [c, comps] : terms) e.add_term(mc_canonicalize(comps), c);
  return e;
}

Relation rel(std::string name, const std::string& lhs, const std::string& rhs,
             std::string family = {}) {
  Relation r;
  r.name = std::move(name);
  r.lhs = P(lhs);
  r.rhs = P(rhs);
  r.prov.family = family.empty() ? r.name : std::move(family);
  return r;
}

Relation ident(std::string name, const std::string& lhs, const std::string& rhs,
               SkeinElement expected) {
  Relation r = rel(std::move(name), lhs, rhs);
  r.expected = std::move(expected);
  return r;
}

void push_orbit(std::vector<Relation>& out, const Relation& base, int upto = 3) {
  out.push_back(base);
  for (int k = 1; k <= upto; ++k) {
    Relation r;
    r.name = base.name + ".s" + std::to_string(k);
    r.lhs = permute(base.lhs, k, kN);
    r.rhs = permute(base.rhs, k, kN);
    r.prov.family = base.name;
    r.prov.sigma = k;
    out.push_back(r);
  }
}

const char* kRed1Rhs =
    "A*t0 + t1*t234 + t2*t134 + t3*t124 + t4*t123 + q^2*t12*t34 + "
    "q^-2*t14*t23 + q*t3*t4*t12 + q^-1*t1*t4*t23 + q*t1*t2*t34 + "
    "q^-1*t2*t3*t14 + t1*t2*t3*t4";

const char* kLongPairRhs =
    "t3*t12*t234 + q^2*t2*t34*t123 - q^3*t2*t124 - q^-1*t3*t134 + "
    "q^-1*t12*t24 + q^-1*t13*t34 + (1-q^2)*t2*t4*t12 - q^-2*t14 + "
    "(q-q^-1)*t1*t4 - q^2*t2*t3*t0";

}  // namespace

const Relation* Catalog::find(const std::string& name) const {
  for (auto& r : relations)
    if (r.name == name) return &r;
  for (auto& r : identities)
    if (r.name == name) return &r;
  return nullptr;
}

std::vector<const Relation*> Catalog::all() const {
  std::vector<const Relation*> out;
  out.reserve(relations.size() + identities.size());
  for (auto& r : relations) out.push_back(&r);
  for (auto& r : identities) out.push_back(&r);
  return out;
}

Catalog build_catalog() {
  Catalog c;
  auto& rs = c.relations;

  push_orbit(rs,
             rel("[2,2]-1", "q*t23*t12 - q^-1*t12*t23",
                 "(q^2-q^-2)*t13 + (q-q^-1)*(t1*t3+t2*t123)"));
  // The remaining [2,2] orbit collapses onto itself under the rotation.
  rs.push_back(rel("[2,2]-2", "t24*t13 - t13*t24",
                   "(q^-2-q^2)*(t12*t34-t14*t23) + "
                   "(q^-1-q)*(t3*t4*t12 - t1*t4*t23 + t1*t2*t34 - t2*t3*t14)"));
  push_orbit(rs,
             rel("[2,3]-1", "q^-1*t234*t14 - q*t14*t234",
                 "(q^-2-q^2)*t123 + (q^-1-q)*(t4*t0+t1*t23)"));
  push_orbit(rs,
             rel("[2,3]-2", "q*t124*t34 - q^-1*t34*t124",
                 "(q^2-q^-2)*t123 + (q-q^-1)*(t4*t0+t3*t12)"));
  push_orbit(rs,
             rel("[2,3]-3", "t134*t24 - t24*t134",
                 "(q-q^-1)*(q^-1*t34*t124 - q*t14*t234 + q*t1*t23 - "
                 "q^-1*t3*t12) + (q-q^-1)^2*(t4*t0+A*t123)"));

  rs.push_back(rel("red-1", "t13*t24", kRed1Rhs));
  push_orbit(rs,
             rel("red-2", "t24*t134",
                 "q^2*t14*t234 + q^-2*t34*t124 + (1-q^2-q^-2)*t4*t0 - "
                 "(q^3+q^-3)*t123 - q^2*t1*t23 - q^-2*t3*t12 + "
                 "t2*(q*t14*t34 - q^2*t13 - q*t4*t134) - q*t1*t2*t3"));
  push_orbit(rs,
             rel("red-3", "t123^2",
                 "q^-1*t12*t23*t13 - "
                 "(t1*t2*t3 + q*t1*t23 + q^-1*t2*t13 + q^-1*t3*t12)*t123 - "
                 "(t1^2+t2^2+t3^2) + A^2 - "
                 "(q*t2*t3*t23 + q^-1*t1*t3*t13 + q^-1*t1*t2*t12) - "
                 "(q^2*t23^2 + q^-2*t13^2 + q^-2*t12^2)"));
  Relation red4 =
      rel("red-4", "t123*t234",
          "(t23+q*t2*t3)*t0 + q^-1*t12*t23*t34 - q^-1*t3*t12*t234 - "
          "q*t2*t34*t123 + q^2*t2*t124 + q^-2*t3*t134 - q^-2*t12*t24 - "
          "q^-2*t13*t34 + (q-q^-1)*t2*t4*t12 + q^-2*(A*t14+t1*t4)");
  push_orbit(rs, red4);
  {
    Relation m;
    m.name = "red-4.m";
    m.lhs = mirror(red4.lhs);
    m.rhs = mirror(red4.rhs);
    m.prov.family = "red-4";
    m.prov.mirrored = true;
    rs.push_back(m);
  }
  push_orbit(rs,
             rel("red-5", "t123*t134",
                 "t13*t0 + t12*t14 + t23*t34 - t1*t124 - t3*t234 - A*t24 - "
                 "t2*t4"));
  push_orbit(rs,
             rel("red-6", "t23*t34*t124",
                 "(q*t234 + q^2*t2*t34 + t3*t24 + t4*t23 + q*t2*t3*t4)*t0 + "
                 "(t2*t4 + q^-1*t24)*t124 + q^3*t34*t134 + q^-1*t23*t123 + "
                 "t3*t23*t12 + q^2*t3*t14*t34 + q*t2*t12 - q^3*t3*t13 + "
                 "q*t4*t14 - q^2*t1*t3^2 + q*A*t1"));
  rs.push_back(
      rel("red-7", "t14*t12*t23*t34",
          "q^2*t0^2 + "
          "q^2*(q^-1*t1*t234 + q*t4*t123 + t1*t4*t23 - t2*t3*t14)*t0 + "
          "t234^2 + q^4*t123^2 + t3*t14*t12*t234 + q^2*t2*t14*t34*t123 + "
          "q*t4*t23*t234 - q^-1*t3*t14*t134 + q^3*t1*t23*t123 - "
          "q^3*t2*t14*t124 + q^-1*t14*t12*t24 + q^-1*t14*t13*t34 + "
          "(1-q^2)*t2*t4*t14*t12 - q^-2*t14^2 + q^2*t23^2 + "
          "(q-q^-1)*t1*t4*t14 + q^2*(t1^2+t4^2-A^2)"));

  {
    const char* centrals[] = {"t1", "t2", "t3", "t4", "t0"};
    const char* gens[] = {"t1",   "t2",   "t3",   "t4",   "t12",
                          "t13",  "t14",  "t23",  "t24",  "t34",
                          "t123", "t124", "t134", "t234", "t0"};
    for (auto* z : centrals)
      for (auto* g : gens) {
        Relation r;
        r.name = std::string("central-") + z + "-" + g;
        r.lhs = P(std::string(z) + "*" + g + " - " + g + "*" + z);
        r.rhs = GenPolynomial::zero();
        r.prov.family = "central";
        rs.push_back(r);
      }
  }

  auto& ids = c.identities;
  ids.push_back(ident("id-t12.t23", "t12*t23", "q^-1*t13 + t1*t3 + t2*t123",
                      expect({{Laurent::q(), {{1, 2, 3, -2}}}})));
  ids.push_back(ident("id-t13.t24", "t13*t24", kRed1Rhs, SkeinElement{}));
  ids.push_back(ident("id-t23.t34", "t23*t34", "q^-1*t24 + t2*t4 + t3*t234",
                      expect({{Laurent::q(), {{2, 3, 4, -3}}}})));
  ids.push_back(ident("id-t14.t234", "t14*t234", "t4*t0 + q*t123 + t1*t23",
                      expect({{Laurent::qbar(), {{1, -4, 2, 3, 4}}}})));
  ids.push_back(ident("id-t34.t124", "t34*t124", "t4*t0 + q^-1*t123 + t3*t12",
                      expect({{Laurent::q(), {{1, 2, -4, 3, 4}}}})));
  ids.push_back(ident("id-t24.t134", "t24*t134", "t4*t0",
                      expect({{Laurent::qbar(), {{1, 2, -4, 3, 4}}},
                              {Laurent::q(), {{1, -4, 2, 3, 4}}},
                              {Laurent::one(), {{2}, {1, -4, 3, 4}}}})));
  ids.push_back(
      ident("id-t12.t23.t34-mid", "t12*t23*t34",
            "q*t1*t4 + q^-1*t12*t24 + t2*t4*t12 + t3*t12*t234",
            expect({{Laurent::q() * Laurent::q(), {{1, 2, 3, 4, -3, -2}}},
                    {Laurent::one(), {{1, 3, 4, -3}}},
                    {Laurent::q(), {{2}, {1, 2, 3, 4, -3}}}})));
  ids.push_back(
      ident("id-t12.t23.t34", "t12*t23*t34", kLongPairRhs,
            expect({{Laurent::q() * Laurent::q(), {{1, 2, 3, 4, -3, -2}}}})));
  ids.push_back(ident("id-t14.t34", "t14*t34", "q*t13 + t1*t3 + t4*t134",
                      expect({{Laurent::qbar(), {{1, -4, 3, 4}}}})));
  ids.push_back(ident("id-t13.t34", "t13*t34", "q^-1*t14 + t1*t4 + t3*t134",
                      expect({{Laurent::q(), {{1, 3, 4, -3}}}})));
  ids.push_back(ident("id-t34.t123", "t34*t123", "q*t124 + t4*t12 + t3*t0",
                      expect({{Laurent::qbar(), {{1, 2, 3, 4, -3}}}})));
  ids.push_back(
      ident("id-t123.t234-step", "t123*t234", "q^-1*t14 + t1*t4 + t23*t0",
            expect({{Laurent::q(), {{1, 2, 3, 4, -3, -2}}}})));
  ids.push_back(ident("id-t123.t134-step", "t123*t134", "t2*t4 + t13*t0",
                      expect({{Laurent::q(), {{2, 3, 4, -3}}},
                              {Laurent::qbar(), {{1, 2, -1, 4}}}})));
  ids.push_back(ident("id-curve-12m14",
                      "q*t12*t14 - q^2*t24 - q*t2*t4 - q*t1*t124", "0",
                      expect({{Laurent::one(), {{1, 2, -1, 4}}}})));
  ids.push_back(ident("id-curve-234m3",
                      "q^-1*t23*t34 - q^-2*t24 - q^-1*t2*t4 - q^-1*t3*t234",
                      "0", expect({{Laurent::one(), {{2, 3, 4, -3}}}})));
  ids.push_back(ident(
      "id-top-times-down-cleared",
      "t12*t23*t13 - q^-1*t13^2 - t1*t3*t13 - t2*t123*t13",
      "q*t123^2 + q^2*t1*t23*t123 + t3*t12*t123 + q*t1*t2*t3*t123 + "
      "q^3*t23^2 + q^-1*t12^2 + q^2*t2*t3*t23 + t1*t2*t12 + "
      "q*(t1^2+t2^2+t3^2) - q*A^2",
      SkeinElement{}));
  ids.push_back(ident(
      "id-fig3-cleared", "t23*(t34*t124 - t4*t0 - q^-1*t123 - t3*t12)",
      "q*((q*t2*t34 + q^-1*t3*t24 + t2*t3*t4 + t234)*t0 + "
      "(q^2*t34 + q*t3*t4)*t134 + (q^-1*t2*t4 + q^-2*t24)*t124 + A*t1 + "
      "t4*t14 + t2*t12 + t3*(q*(t14*t34 - q*t13 - t1*t3 - t4*t134)))",
      SkeinElement{}));
  ids.push_back(ident(
      "id-t14.1234m3m2",
      std::string("q^-2*t14*(t12*t23*t34 - (") + kLongPairRhs + "))",
      "t0^2 + (q^-1*t1*t234 + q*t4*t123 + t1*t4*t23)*t0 + q^2*t123^2 + "
      "q^-2*t234^2 + q^-1*t4*t23*t234 + q*t1*t23*t123 + t23^2 + t1^2 + "
      "t4^2 - A^2",
      SkeinElement{}));

  return c;
}

VerifyReport verify_relation(const Relation& r, Evaluator& ev) {
  VerifyReport rep;
  rep.name = r.name;
  auto t0 = std::chrono::steady_clock::now();
  SkeinElement diff = ev.evaluate(r.lhs - r.rhs);
  rep.residual = diff - r.expected;
  rep.zero = rep.residual.is_zero();
  auto t1 = std::chrono::steady_clock::now();
  rep.ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return rep;
}

}  // namespace skein
