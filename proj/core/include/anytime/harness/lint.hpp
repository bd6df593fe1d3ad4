#ifndef ANYTIME_HARNESS_LINT_HPP
#define ANYTIME_HARNESS_LINT_HPP

#include "anytime/harness/trace.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace anytime::harness {

struct LintIssue {
    std::size_t line = 0;
    std::string message;
};

/*
  Row-to-row checks on a trace:
    lower <= upper; lower never decreases; upper never increases;
    lower <= f* <= upper when the header carries fstar;
    quality never decreases;
    upper/lower < w (strict) for weighted best-first traces with w > 1,
    an incumbent and lower > 0.
*/
std::vector<LintIssue> lint_trace(const ParsedTrace &trace);

/// Parses then lints; parse failures are reported as a single issue.
std::vector<LintIssue> lint_text(std::string_view text);

} // namespace anytime::harness

#endif
