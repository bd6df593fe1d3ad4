#include "anytime/harness/runner.hpp"

#include "anytime/core/errors.hpp"
#include "anytime/rbfs/rbfs.hpp"
#include "anytime/search/best_first.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <thread>

namespace anytime::harness {

int exit_code(SearchStatus status) {
    switch (status) {
    case SearchStatus::Converged:
    case SearchStatus::Solved:
        return kExitConverged;
    case SearchStatus::Interrupted:
        return kExitInterrupted;
    case SearchStatus::NoSolution:
        return kExitNoSolution;
    }
    return kExitUsage;
}

SearchResult execute(Algorithm algorithm, const SearchSpace &space, const WeightSpec &w, const Rational &step,
                     const SearchLimits &limits, const EmissionSink &sink, std::optional<Cost> upper_bound) {
    BestFirstOptions bf;
    bf.limits = limits;
    bf.sink = sink;
    RbfsOptions rb;
    rb.limits = limits;
    rb.sink = sink;
    switch (algorithm) {
    case Algorithm::AStar:
        return astar(space, bf);
    case Algorithm::WAStar:
        return weighted_astar(space, w, bf);
    case Algorithm::AWAStar:
        return anytime_wastar(space, w, bf);
    case Algorithm::EAStar: {
        if (!upper_bound) {
            BestFirstOptions probe;
            probe.limits = limits;
            const SearchResult first = weighted_astar(space, w, probe);
            if (!first.incumbent)
                return first;
            // Strict pruning would drop a goal whose f equals the known cost.
            upper_bound = first.incumbent->cost + Cost(1);
        }
        return enhanced_astar(space, *upper_bound, bf);
    }
    case Algorithm::AraStar:
        return ara_star(space, w, step, bf);
    case Algorithm::Rbfs:
        return rbfs_weighted(space, w, rb);
    case Algorithm::Wrbfs:
        return wrbfs(space, w, rb);
    case Algorithm::AnytimeWrbfs:
        return anytime_wrbfs(space, w, rb);
    case Algorithm::AnytimeRbfsWeighted:
        return anytime_rbfs_weighted(space, w, rb);
    }
    throw ConfigError("unsupported algorithm");
}

namespace {

// Rows that differ only in wall time carry no new information.
bool same_progress(const TraceRow &a, const TraceRow &b) {
    return a.expansions == b.expansions && a.stored == b.stored && a.incumbent_cost == b.incumbent_cost &&
           a.lower_bound == b.lower_bound && a.upper_bound == b.upper_bound &&
           a.bound_difference == b.bound_difference && a.approx_ratio == b.approx_ratio && a.quality == b.quality;
}

} // namespace

RunOutcome run_instance(const RunConfig &config, const Instance &instance) {
    config.validate();
    RunOutcome out;
    out.fstar = resolve_fstar(config.fstar, instance, config.instance_path);
    const std::optional<Cost> fstar = out.fstar;
    const bool wall = config.record_wall_time;
    std::vector<TraceRow> &rows = out.rows;
    const EmissionSink sink = [&rows, fstar, wall](const Emission &e) {
        TraceRow row = make_row(e, fstar, wall);
        if (!rows.empty() && same_progress(rows.back(), row))
            return;
        rows.push_back(std::move(row));
    };

    out.result = execute(config.algorithm, *instance.space, config.weight, config.effective_step(), config.limits,
                         sink, config.upper_bound);
    out.exit_code = exit_code(out.result.status);

    TraceHeader header;
    header["algorithm"] = std::string(to_string(config.algorithm));
    header["weight"] = config.weight.str();
    if (config.algorithm == Algorithm::AraStar)
        header["weight_step"] = config.effective_step().str();
    header["domain"] = std::string(to_string(instance.domain));
    header["instance"] = instance.name;
    header["seed"] = std::to_string(config.seed);
    if (fstar)
        header["fstar"] = fstar->str();
    TraceSummary summary;
    summary.status = std::string(to_string(out.result.status));
    if (out.result.incumbent)
        summary.cost = out.result.incumbent->cost;
    summary.stats = out.result.stats;
    summary.record_wall_time = wall;
    out.csv = format_trace(header, rows, summary);
    return out;
}

RunOutcome run(const RunConfig &config) {
    config.validate();
    const Instance instance = load_instance(config.domain, config.instance_path, config.scheme_path);
    return run_instance(config, instance);
}

std::string ProfileSeries::label() const {
    std::string s = std::string(to_string(algorithm)) + "@" + weight.str();
    if (weight_step)
        s += "-" + weight_step->str();
    return s;
}

ProfileSeries parse_series(std::string_view text) {
    ProfileSeries s;
    const auto colon = text.find(':');
    s.algorithm = parse_algorithm(text.substr(0, colon));
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        const auto colon2 = rest.find(':');
        try {
            s.weight = WeightSpec::parse(rest.substr(0, colon2));
            if (colon2 != std::string_view::npos)
                s.weight_step = Rational::parse(rest.substr(colon2 + 1));
        } catch (const std::invalid_argument &e) {
            throw ConfigError("bad series '" + std::string(text) + "': " + e.what());
        }
    }
    if (s.weight_step && s.algorithm != Algorithm::AraStar)
        throw ConfigError("a weight step is only valid for ara_star series");
    if (!s.weight.is_unit() && s.algorithm == Algorithm::AStar)
        throw ConfigError("astar is unweighted");
    return s;
}

double quality_at(const SearchResult &result, Cost fstar, std::uint64_t expansions) {
    double best = 0.0;
    for (const Incumbent &inc : result.trace.entries)
        if (inc.found_at.expansions <= expansions)
            best = std::max(best, solution_quality(inc.cost, fstar).to_double());
    return best;
}

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

ProfileReport profile(const ProfileConfig &config) {
    if (config.series.empty())
        throw ConfigError("profile needs at least one algorithm series");
    if (config.instance_paths.empty())
        throw ConfigError("profile needs at least one instance");
    for (const auto &s : config.series)
        if (config.domain == Domain::Msa && is_rbfs_family(s.algorithm))
            throw ConfigError("the RBFS family is not run on the alignment lattice");

    const std::size_t ni = config.instance_paths.size();
    const std::size_t ns = config.series.size();
    std::vector<std::optional<Cost>> fstars(ni);
    std::vector<std::vector<SearchResult>> results(ns, std::vector<SearchResult>(ni));
    std::vector<std::string> errors(ni);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < ni; i = next++) {
            try {
                const Instance inst = load_instance(config.domain, config.instance_paths[i], config.scheme_path);
                fstars[i] = resolve_fstar(config.fstar, inst, config.instance_paths[i]);
                for (std::size_t s = 0; s < ns; ++s) {
                    const ProfileSeries &ser = config.series[s];
                    results[s][i] = execute(ser.algorithm, *inst.space, ser.weight,
                                            ser.weight_step.value_or(Rational(1, 10)), config.limits, {});
                }
            } catch (const std::exception &e) {
                errors[i] = config.instance_paths[i] + ": " + e.what();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(ni)));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    for (const auto &e : errors)
        if (!e.empty())
            throw ConfigError(e);

    ProfileReport rep;
    for (std::size_t i = 0; i < ni; ++i)
        if (!fstars[i])
            rep.warnings.push_back("no f* for " + config.instance_paths[i] + "; quality left blank");

    std::uint64_t max_exp = 1;
    for (const auto &per_series : results)
        for (const auto &r : per_series)
            max_exp = std::max(max_exp, r.stats.expansions);
    for (std::uint64_t b = 1;; b *= 2) {
        rep.buckets.push_back(b);
        if (b >= max_exp)
            break;
    }

    for (std::size_t s = 0; s < ns; ++s) {
        rep.labels.push_back(config.series[s].label());
        std::vector<double> q(rep.buckets.size(), 0.0);
        double stored = 0, exp = 0, distinct = 0, calls = 0, final_q = 0;
        std::size_t with_fstar = 0;
        for (std::size_t i = 0; i < ni; ++i) {
            const SearchResult &r = results[s][i];
            stored += static_cast<double>(r.stats.stored);
            exp += static_cast<double>(r.stats.expansions);
            distinct += static_cast<double>(r.stats.distinct_expanded);
            calls += static_cast<double>(r.stats.recursive_calls);
            if (!fstars[i])
                continue;
            ++with_fstar;
            for (std::size_t b = 0; b < rep.buckets.size(); ++b)
                q[b] += quality_at(r, *fstars[i], rep.buckets[b]);
            final_q += quality_at(r, *fstars[i], r.stats.expansions);
        }
        const double n = static_cast<double>(ni);
        rep.mean_stored.push_back(stored / n);
        rep.mean_expansions.push_back(exp / n);
        rep.mean_distinct.push_back(distinct / n);
        rep.mean_recursive_calls.push_back(calls / n);
        if (with_fstar) {
            for (double &x : q)
                x /= static_cast<double>(with_fstar);
            rep.mean_quality.push_back(q);
            rep.final_mean_quality.push_back(final_q / static_cast<double>(with_fstar));
        } else {
            rep.mean_quality.emplace_back();
            rep.final_mean_quality.push_back(-1.0);
        }
    }
    return rep;
}

std::string ProfileReport::quality_csv() const {
    std::string out = "expansions";
    for (const auto &l : labels)
        out += "," + l;
    out += '\n';
    for (std::size_t b = 0; b < buckets.size(); ++b) {
        out += std::to_string(buckets[b]);
        for (std::size_t s = 0; s < labels.size(); ++s) {
            out += ',';
            if (!mean_quality[s].empty())
                out += fixed6(mean_quality[s][b]);
        }
        out += '\n';
    }
    return out;
}

std::string ProfileReport::summary_csv() const {
    std::string out = "series,mean_stored,mean_expansions,mean_distinct_expanded,mean_recursive_calls,final_mean_quality\n";
    for (std::size_t s = 0; s < labels.size(); ++s) {
        out += labels[s] + "," + fixed6(mean_stored[s]) + "," + fixed6(mean_expansions[s]) + "," +
               fixed6(mean_distinct[s]) + "," + fixed6(mean_recursive_calls[s]) + ",";
        if (final_mean_quality[s] >= 0)
            out += fixed6(final_mean_quality[s]);
        out += '\n';
    }
    return out;
}

} // namespace anytime::harness
