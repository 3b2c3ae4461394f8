#pragma once

#include <string>
#include <string_view>

#include "mmdc/instance.hpp"

namespace mmdc {

/// Instance text format (ASCII, '\n' line endings, single-space separators):
///
///     mmdc 1
///     s t
///     <s lines of t weights>
///     <demand_a: s values>
///     <cap_a: s values>
///     <demand_b: t values>
///     <cap_b: t values>
///
/// Blank lines and lines starting with '#' are ignored. Throws ParseError with
/// the 1-based line/column of the first problem.
Instance parse_instance(std::string_view text);

/// Canonical form of the format above; parse_instance(write_instance(x)) == x.
std::string write_instance(const Instance& inst);

/// `cost <C>` followed by `i j m` per pair (1-based, sorted by (i, j)), then
/// optional `# stats:` comment lines.
std::string write_solution(const Solution& sol, bool include_stats = true);

/// Reads the format produced by write_solution. Stats comments are skipped;
/// stats in the result are default-initialised.
Solution parse_solution(std::string_view text);

}  // namespace mmdc
