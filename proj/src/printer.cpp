#include "skein/printer.hpp"

#include <sstream>

namespace skein {

std::string word_str(const Word& w) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i];
  }
  os << ")";
  return os.str();
}

std::string mc_str(const Multicurve& mc) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < mc.comps.size(); ++i) {
    if (i) os << ",";
    os << word_str(mc.comps[i]);
  }
  os << "}";
  return os.str();
}

std::string element_str(const SkeinElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mc, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one())
      os << mc_str(mc);
    else if (c.terms().size() == 1)
      os << c.str() << "*" << mc_str(mc);
    else
      os << "(" << c.str() << ")*" << mc_str(mc);
  }
  return os.str();
}

std::string monomial_str(const Monomial& m, int n) {
  if (m.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < m.size()) {
    size_t j = i;
    while (j < m.size() && m[j] == m[i]) ++j;
    if (!first) os << "*";
    first = false;
    os << gen_name(m[i], n);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string poly_str(const GenPolynomial& p, int n) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = false;
    std::string body;
    if (c.terms().size() == 1) {
      Laurent pos = c;
      if (c.terms().begin()->second < 0) {
        neg = true;
        pos = -c;
      }
      if (m.empty())
        body = pos.str();
      else if (pos.is_one())
        body = monomial_str(m, n);
      else
        body = pos.str() + "*" + monomial_str(m, n);
    } else {
      body = "(" + c.str() + ")";
      if (!m.empty()) body += "*" + monomial_str(m, n);
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    os << body;
  }
  return os.str();
}

nlohmann::ordered_json scalar_json(const Laurent& c) {
  auto arr = nlohmann::ordered_json::array();
  static const Int kMax = Int(1) << 53;
  for (const auto& [e, k] : c.terms()) {
    auto pair = nlohmann::ordered_json::array();
    pair.push_back(e);
    if (k < kMax && k > -kMax)
      pair.push_back(k.convert_to<long long>());
    else
      pair.push_back(k.str());
    arr.push_back(std::move(pair));
  }
  return arr;
}

nlohmann::ordered_json word_json(const Word& w) {
  auto arr = nlohmann::ordered_json::array();
  for (int a : w) arr.push_back(a);
  return arr;
}

nlohmann::ordered_json mc_json(const Multicurve& mc) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& w : mc.comps) arr.push_back(word_json(w));
  return arr;
}

nlohmann::ordered_json element_json(const SkeinElement& e) {
  nlohmann::ordered_json j;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [mc, c] : e.terms()) {
    nlohmann::ordered_json t;
    t["mc"] = mc_json(mc);
    t["coeff"] = scalar_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

nlohmann::ordered_json poly_json(const GenPolynomial& p, [[maybe_unused]] int n) {
  nlohmann::ordered_json j;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["coeff"] = scalar_json(c);
    auto gens = nlohmann::ordered_json::array();
    for (Gen g : m) {
      auto sub = nlohmann::ordered_json::array();
      for (int v : gen_punctures(g)) sub.push_back(v);
      gens.push_back(std::move(sub));
    }
    t["gens"] = std::move(gens);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace skein
