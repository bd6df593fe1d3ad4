#ifndef ANYTIME_HARNESS_CONFIG_HPP
#define ANYTIME_HARNESS_CONFIG_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/rational.hpp"
#include "anytime/core/search_space.hpp"
#include "anytime/core/weight.hpp"
#include "anytime/search/result.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace anytime::harness {

enum class Algorithm {
    AStar,
    WAStar,
    AWAStar,
    EAStar,
    AraStar,
    Rbfs,
    Wrbfs,
    AnytimeWrbfs,
    AnytimeRbfsWeighted,
};

std::string_view to_string(Algorithm a);
/// Accepts the names printed by to_string; throws ConfigError otherwise.
Algorithm parse_algorithm(std::string_view name);
bool is_anytime(Algorithm a);
bool is_rbfs_family(Algorithm a);

enum class Domain { Tiles, Msa, Graph };

std::string_view to_string(Domain d);
Domain parse_domain(std::string_view name);

/// Where the optimal cost used for quality and lint checks comes from.
struct FstarFromOracle {};
struct FstarFromFile {
    std::string path;
};
struct FstarValue {
    Cost value;
};
using FstarSource = std::variant<std::monostate, FstarFromOracle, FstarFromFile, FstarValue>;

/// Parses the --fstar argument: "oracle", an integer, or a file path.
FstarSource parse_fstar(std::string_view text);

struct RunConfig {
    Algorithm algorithm = Algorithm::AWAStar;
    WeightSpec weight;
    std::optional<Rational> weight_step;
    Domain domain = Domain::Tiles;
    std::string instance_path;
    /// Optional scoring-scheme file for MSA; PAM-250 defaults otherwise.
    std::string scheme_path;
    /// Explicit bound for ea_star; when absent it is derived from a weighted A* run.
    std::optional<Cost> upper_bound;
    SearchLimits limits;
    std::uint64_t seed = 0;
    std::string out_path;
    FstarSource fstar;
    /// Record wall-clock seconds in traces (makes output run-dependent).
    bool record_wall_time = false;

    /// Throws ConfigError on inconsistent settings.
    void validate() const;
    /// Step used by ara_star: the configured one or 1/10.
    Rational effective_step() const;
};

/// A loaded problem plus a short display name.
struct Instance {
    std::string name;
    Domain domain = Domain::Tiles;
    std::shared_ptr<const SearchSpace> space;
};

Instance load_instance(Domain domain, const std::string &path, const std::string &scheme_path = {});
Instance parse_instance(Domain domain, std::string_view text, std::string name, const std::string &scheme_text = {});

std::string read_file(const std::string &path);

/// Exact optimal cost by the oracle suited to the domain (astar for Fifteen Puzzle).
std::optional<Cost> oracle_fstar(const Instance &instance);

/// Resolves an f* source for one instance; file lookups match the full path or its file name.
std::optional<Cost> resolve_fstar(const FstarSource &source, const Instance &instance, const std::string &path);

} // namespace anytime::harness

#endif
