#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace skein {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when a deterministic internal guard trips (layout genericity retries
// exhausted, resolution state budget exceeded). Maps to process exit code 4.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t p) : std::runtime_error(msg), pos(p) {}
};

}  // namespace skein
