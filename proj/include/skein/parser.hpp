#pragma once

#include <string>

#include "skein/algebra.hpp"

namespace skein {

// Parses an expression over generators and scalars. Terms are separated by
// '+' or '-', factors by '*', exponents attach with '^'. Scalars are integer
// literals, 'q', 's' (a square root of q) and 'A' (q + q^-1). Generators are
// 't' followed by strictly increasing puncture digits, with 't0' naming the
// subset of all punctures. Throws ParseError with an input position.
GenPolynomial parse_expression(const std::string& src, int n);

}  // namespace skein
