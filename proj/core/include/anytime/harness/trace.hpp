#ifndef ANYTIME_HARNESS_TRACE_HPP
#define ANYTIME_HARNESS_TRACE_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/rational.hpp"
#include "anytime/search/result.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace anytime::harness {

inline constexpr std::string_view kTraceVersion = "v1";
inline constexpr std::string_view kTraceColumns =
    "wall_time_s,expansions,stored,incumbent_cost,lower_bound,upper_bound,bound_difference,approx_ratio,quality";

struct TraceRow {
    std::optional<double> wall_time_s;
    std::uint64_t expansions = 0;
    std::uint64_t stored = 0;
    std::optional<Cost> incumbent_cost;
    Cost lower_bound;
    Cost upper_bound = Cost::infinity();
    std::optional<Cost> bound_difference;
    std::optional<Rational> approx_ratio;
    std::optional<Rational> quality;
};

/// 1 - (f - f*)/f* for f >= f*, as an exact fraction; 1 when f* = f = 0.
Rational solution_quality(Cost f, Cost fstar);

TraceRow make_row(const Emission &e, std::optional<Cost> fstar, bool record_wall_time);

/// key=value pairs of the "# anytime-search trace" header line.
using TraceHeader = std::map<std::string, std::string>;

struct TraceSummary {
    std::string status;
    std::optional<Cost> cost;
    SearchStats stats;
    bool record_wall_time = false;
};

std::string format_trace(const TraceHeader &header, const std::vector<TraceRow> &rows,
                         const std::optional<TraceSummary> &summary);

/// Fixed-point decimal with six digits, the precision used in CSV output.
std::string format_ratio(const Rational &r);

struct ParsedTrace {
    TraceHeader header;
    std::vector<TraceRow> rows;
    std::vector<std::size_t> row_lines;
    /// key=value pairs of the trailing summary line, empty if missing.
    std::map<std::string, std::string> summary;
};

/// Parses a trace produced by format_trace; ratios are read back as exact decimals.
/// Throws ParseError with the offending line number.
ParsedTrace parse_trace(std::string_view text);

} // namespace anytime::harness

#endif
