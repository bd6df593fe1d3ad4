#ifndef ANYTIME_HARNESS_RUNNER_HPP
#define ANYTIME_HARNESS_RUNNER_HPP

#include "anytime/harness/config.hpp"
#include "anytime/harness/trace.hpp"
#include "anytime/search/result.hpp"

#include <string>
#include <vector>

namespace anytime::harness {

/// Process exit codes of the command line tool.
enum ExitCode : int {
    kExitConverged = 0,
    kExitInterrupted = 2,
    kExitNoSolution = 3,
    kExitUsage = 4,
};

int exit_code(SearchStatus status);

/// Runs one algorithm on an already loaded problem.
SearchResult execute(Algorithm algorithm, const SearchSpace &space, const WeightSpec &w, const Rational &step,
                     const SearchLimits &limits, const EmissionSink &sink,
                     std::optional<Cost> upper_bound = std::nullopt);

struct RunOutcome {
    SearchResult result;
    std::vector<TraceRow> rows;
    std::optional<Cost> fstar;
    std::string csv;
    int exit_code = kExitConverged;
};

RunOutcome run(const RunConfig &config);
/// As run() but on a loaded instance; `instance_path` is only used for f* file lookups.
RunOutcome run_instance(const RunConfig &config, const Instance &instance);

/// One (algorithm, weight) series of a performance profile.
struct ProfileSeries {
    Algorithm algorithm = Algorithm::AWAStar;
    WeightSpec weight;
    std::optional<Rational> weight_step;

    std::string label() const;
};

/// Parses "awastar:13/10" or "astar"; throws ConfigError.
ProfileSeries parse_series(std::string_view text);

struct ProfileConfig {
    Domain domain = Domain::Tiles;
    std::vector<std::string> instance_paths;
    std::string scheme_path;
    std::vector<ProfileSeries> series;
    FstarSource fstar = FstarFromOracle{};
    SearchLimits limits;
    unsigned jobs = 1;
};

struct ProfileReport {
    /// Bucket upper edges in expansions: 1, 2, 4, ...
    std::vector<std::uint64_t> buckets;
    /// mean_quality[s][b]: mean over instances of the best quality reached within buckets[b] expansions.
    std::vector<std::vector<double>> mean_quality;
    std::vector<double> mean_stored;
    std::vector<double> mean_expansions;
    std::vector<double> mean_distinct;
    std::vector<double> mean_recursive_calls;
    std::vector<double> final_mean_quality;
    std::vector<std::string> warnings;
    std::vector<std::string> labels;

    std::string quality_csv() const;
    std::string summary_csv() const;
};

/// Quality reached by `result` within `expansions`, 0 before the first solution.
double quality_at(const SearchResult &result, Cost fstar, std::uint64_t expansions);

ProfileReport profile(const ProfileConfig &config);

} // namespace anytime::harness

#endif
