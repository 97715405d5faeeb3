#pragma once

#include <string>

#include <json.hpp>

#include "skein/algebra.hpp"

namespace skein {

std::string word_str(const Word& w);
std::string mc_str(const Multicurve& mc);
std::string element_str(const SkeinElement& e);
std::string monomial_str(const Monomial& m, int n);
// Grammar-compatible rendering: parse_expression(poly_str(p, n), n) == p.
std::string poly_str(const GenPolynomial& p, int n);

nlohmann::ordered_json scalar_json(const Laurent& c);
nlohmann::ordered_json word_json(const Word& w);
nlohmann::ordered_json mc_json(const Multicurve& mc);
nlohmann::ordered_json element_json(const SkeinElement& e);
nlohmann::ordered_json poly_json(const GenPolynomial& p, int n);

}  // namespace skein
