#pragma once

#include <string>
#include <string_view>

#include "nil2/group.hpp"

namespace nil2 {

// Text format:
//   group <name> ; dimV <int> ; dimW <int> ; (bracket <label> ; <dimV rows>) x dimW
// Rows hold dimV whitespace-separated rationals; newlines and ';' separate
// statements; '#' starts a comment. Throws SyntaxError with line/column for
// lexical problems and passes group-validation diagnostics through.
ClassTwoGroup parse_group_text(std::string_view text);
ClassTwoGroup parse_group_file(const std::string& path);

// Canonical serialization; parse(serialize(g)) reproduces g.
std::string serialize_group(const ClassTwoGroup& g);

// Element expression over a group's V-basis and bracket values:
//   x1^(1/2)*x2^(1/3)*c(1,2)^(5)
// x<i> is the i-th basis element of V (1-based); c(i,j) is the central
// element [x_i, x_j]. Exponents are rationals, parenthesized or bare.
LieElement parse_element(const ClassTwoGroup& g, std::string_view text);

}  // namespace nil2
