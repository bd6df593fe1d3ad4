#include "anytime/harness/trace.hpp"

#include "anytime/core/errors.hpp"

#include <iomanip>
#include <sstream>

namespace anytime::harness {

Rational solution_quality(Cost f, Cost fstar) {
    if (f < fstar)
        throw std::invalid_argument("solution cost " + f.str() + " is below the optimum " + fstar.str());
    if (fstar == Cost(0))
        return Rational::integer(f == Cost(0) ? 1 : 0);
    // 1 - (f - f*)/f* = (2f* - f)/f*, floored at zero for solutions worse than 2f*.
    return saturating_sub(Rational::integer(2), Rational(f.value(), fstar.value()));
}

TraceRow make_row(const Emission &e, std::optional<Cost> fstar, bool record_wall_time) {
    TraceRow row;
    if (record_wall_time)
        row.wall_time_s = std::chrono::duration<double>(e.wall_time).count();
    row.expansions = e.expansions;
    row.stored = e.stored;
    if (e.incumbent)
        row.incumbent_cost = e.incumbent->cost;
    row.lower_bound = e.bounds.lower;
    row.upper_bound = e.bounds.upper;
    row.bound_difference = e.bounds.difference;
    row.approx_ratio = e.bounds.ratio;
    if (fstar && e.incumbent)
        row.quality = solution_quality(e.incumbent->cost, *fstar);
    return row;
}

std::string format_ratio(const Rational &r) { return r.decimal(6); }

std::string format_trace(const TraceHeader &header, const std::vector<TraceRow> &rows,
                         const std::optional<TraceSummary> &summary) {
    std::ostringstream out;
    out << "# anytime-search trace " << kTraceVersion;
    for (const auto &[k, v] : header)
        out << ' ' << k << '=' << v;
    out << '\n' << kTraceColumns << '\n';
    for (const TraceRow &r : rows) {
        if (r.wall_time_s)
            out << std::fixed << std::setprecision(6) << *r.wall_time_s;
        out << ',' << r.expansions << ',' << r.stored << ',';
        if (r.incumbent_cost)
            out << *r.incumbent_cost;
        out << ',' << r.lower_bound << ',' << r.upper_bound << ',';
        if (r.bound_difference)
            out << *r.bound_difference;
        out << ',';
        if (r.approx_ratio)
            out << format_ratio(*r.approx_ratio);
        out << ',';
        if (r.quality)
            out << format_ratio(*r.quality);
        out << '\n';
    }
    if (summary) {
        const SearchStats &s = summary->stats;
        out << "# summary status=" << summary->status << " cost=" << (summary->cost ? summary->cost->str() : "none")
            << " expansions=" << s.expansions << " distinct=" << s.distinct_expanded
            << " reexpansions=" << s.reexpansions << " generated=" << s.generated << " stored=" << s.stored
            << " recursive_calls=" << s.recursive_calls << " wall_time_s=";
        if (summary->record_wall_time)
            out << std::fixed << std::setprecision(6) << std::chrono::duration<double>(s.wall_time).count();
        out << '\n';
    }
    return out.str();
}

namespace {

std::map<std::string, std::string> key_values(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos)
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

Cost parse_cost(const std::string &s, std::size_t line) {
    if (s == "inf")
        return Cost::infinity();
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used == s.size())
            return Cost(v);
    } catch (const std::exception &) {
    }
    throw ParseError(line, "expected a cost, got '" + s + "'");
}

std::uint64_t parse_count(const std::string &s, std::size_t line) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception &) {
    }
    throw ParseError(line, "expected a count, got '" + s + "'");
}

std::optional<Rational> parse_decimal(const std::string &s, std::size_t line) {
    if (s.empty())
        return std::nullopt;
    try {
        return Rational::parse(s);
    } catch (const std::exception &) {
        throw ParseError(line, "expected a decimal, got '" + s + "'");
    }
}

} // namespace

ParsedTrace parse_trace(std::string_view text) {
    ParsedTrace t;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    bool have_header = false;
    bool have_columns = false;
    const std::string prefix = "# anytime-search trace ";
    while (std::getline(in, line)) {
        ++n;
        if (line.empty())
            continue;
        if (line.rfind(prefix, 0) == 0) {
            const std::string rest = line.substr(prefix.size());
            if (rest.rfind(kTraceVersion, 0) != 0)
                throw ParseError(n, "unsupported trace version");
            t.header = key_values(rest.substr(kTraceVersion.size()));
            have_header = true;
            continue;
        }
        if (line.rfind("# summary", 0) == 0) {
            t.summary = key_values(line.substr(9));
            continue;
        }
        if (line[0] == '#')
            continue;
        if (!have_columns) {
            if (line != kTraceColumns)
                throw ParseError(n, "unexpected column header");
            have_columns = true;
            continue;
        }
        const auto f = split(line);
        if (f.size() != 9)
            throw ParseError(n, "expected 9 fields, got " + std::to_string(f.size()));
        TraceRow r;
        if (!f[0].empty()) {
            try {
                r.wall_time_s = std::stod(f[0]);
            } catch (const std::exception &) {
                throw ParseError(n, "bad wall time '" + f[0] + "'");
            }
        }
        r.expansions = parse_count(f[1], n);
        r.stored = parse_count(f[2], n);
        if (!f[3].empty())
            r.incumbent_cost = parse_cost(f[3], n);
        r.lower_bound = parse_cost(f[4], n);
        r.upper_bound = parse_cost(f[5], n);
        if (!f[6].empty())
            r.bound_difference = parse_cost(f[6], n);
        r.approx_ratio = parse_decimal(f[7], n);
        r.quality = parse_decimal(f[8], n);
        t.rows.push_back(r);
        t.row_lines.push_back(n);
    }
    if (!have_header)
        throw ParseError(0, "missing '# anytime-search trace' header line");
    if (!have_columns)
        throw ParseError(0, "missing column header");
    return t;
}

} // namespace anytime::harness
