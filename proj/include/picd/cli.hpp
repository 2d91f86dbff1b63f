#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace picd {

// Exit status: 0 success, 2 usage or validation error, 1 other failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "inf", "a/b" fractions, plain decimals
double parse_real(const std::string& s);

}  // namespace picd
