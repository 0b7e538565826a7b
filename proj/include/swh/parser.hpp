#pragma once

#include "swh/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace swh {

// Grammar:
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { ['*'] factor }
//   factor := atom [ '^' natural ]
//   atom   := integer [ '/' integer ] | name | '(' expr ')'
// Names match [a-zA-Z][a-zA-Z0-9]*.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

// Distinct variable names occurring in text, sorted alphabetically.
std::vector<std::string> infer_variables(std::string_view text);

}  // namespace swh
