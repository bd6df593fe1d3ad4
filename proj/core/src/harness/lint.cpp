#include "anytime/harness/lint.hpp"

#include "anytime/core/errors.hpp"
#include "anytime/core/weight.hpp"

#include <set>

namespace anytime::harness {

namespace {

bool ratio_dominance_applies(const TraceHeader &h) {
    static const std::set<std::string> weighted_best_first{"wastar", "awastar", "ara_star"};
    const auto alg = h.find("algorithm");
    return alg != h.end() && weighted_best_first.count(alg->second) > 0;
}

} // namespace

std::vector<LintIssue> lint_trace(const ParsedTrace &trace) {
    std::vector<LintIssue> issues;
    auto flag = [&](std::size_t line, std::string msg) { issues.push_back({line, std::move(msg)}); };

    std::optional<Cost> fstar;
    if (const auto it = trace.header.find("fstar"); it != trace.header.end()) {
        try {
            fstar = Cost(std::stoull(it->second));
        } catch (const std::exception &) {
            flag(0, "header fstar '" + it->second + "' is not a cost");
        }
    }
    std::optional<Rational> weight;
    if (const auto it = trace.header.find("weight"); it != trace.header.end()) {
        try {
            weight = WeightSpec::parse(it->second).value();
        } catch (const std::exception &) {
            flag(0, "header weight '" + it->second + "' is not a valid weight");
        }
    }
    const bool check_ratio = weight && Rational::integer(1) < *weight && ratio_dominance_applies(trace.header);

    if (trace.rows.empty())
        flag(0, "trace has no rows");

    for (std::size_t i = 0; i < trace.rows.size(); ++i) {
        const TraceRow &r = trace.rows[i];
        const std::size_t line = trace.row_lines[i];
        if (r.lower_bound > r.upper_bound)
            flag(line, "lower bound " + r.lower_bound.str() + " exceeds upper bound " + r.upper_bound.str());
        if (r.incumbent_cost && *r.incumbent_cost != r.upper_bound)
            flag(line, "upper bound differs from the incumbent cost");
        if (!r.incumbent_cost && r.upper_bound.is_finite())
            flag(line, "finite upper bound without an incumbent");
        if (fstar) {
            if (r.lower_bound.is_finite() && r.lower_bound > *fstar)
                flag(line, "lower bound " + r.lower_bound.str() + " exceeds f* " + fstar->str());
            if (r.upper_bound < *fstar)
                flag(line, "upper bound " + r.upper_bound.str() + " is below f* " + fstar->str());
        }
        if (check_ratio && r.incumbent_cost && r.lower_bound.is_finite() && r.lower_bound > Cost(0) &&
            r.lower_bound < r.upper_bound) {
            const Rational ratio(r.upper_bound.value(), r.lower_bound.value());
            if (!(ratio < *weight))
                flag(line, "ratio " + ratio.str() + " is not below the weight " + weight->str());
        }
        if (i == 0)
            continue;
        const TraceRow &p = trace.rows[i - 1];
        if (r.lower_bound.is_finite() && p.lower_bound.is_finite() && r.lower_bound < p.lower_bound)
            flag(line, "lower bound decreased from " + p.lower_bound.str() + " to " + r.lower_bound.str());
        if (r.upper_bound > p.upper_bound)
            flag(line, "upper bound increased from " + p.upper_bound.str() + " to " + r.upper_bound.str());
        if (r.quality && p.quality && *r.quality < *p.quality)
            flag(line, "quality decreased");
        if (r.expansions < p.expansions)
            flag(line, "expansion count decreased");
    }
    return issues;
}

std::vector<LintIssue> lint_text(std::string_view text) {
    try {
        return lint_trace(parse_trace(text));
    } catch (const ParseError &e) {
        return {LintIssue{e.line(), e.what()}};
    }
}

} // namespace anytime::harness
