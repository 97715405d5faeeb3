#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skein {

// Exit codes: 0 ok, 1 usage/parse, 2 verification failure,
// 3 irreducible normal form, 4 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace skein
