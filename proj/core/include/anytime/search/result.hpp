#ifndef ANYTIME_SEARCH_RESULT_HPP
#define ANYTIME_SEARCH_RESULT_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/rational.hpp"
#include "anytime/core/search_space.hpp"
#include "anytime/core/weight.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace anytime {

enum class SearchStatus : std::uint8_t {
    Converged,   ///< terminated with a solution proved optimal
    Solved,      ///< stopped at its first solution (no optimality proof)
    Interrupted, ///< a limit was hit; best-so-far is returned
    NoSolution,
};

std::string_view to_string(SearchStatus s);

struct Discovery {
    std::uint64_t expansions = 0;
    std::chrono::nanoseconds wall_time{0};
};

struct Incumbent {
    StateId goal_state{};
    Cost cost;
    std::vector<StateId> path;
    Discovery found_at;
    /// Suboptimality bound attached when the solution was found, if one is known.
    std::optional<Rational> bound_at_discovery;
};

/// Improving solutions in discovery order; costs strictly decrease.
struct IncumbentTrace {
    std::vector<Incumbent> entries;

    bool strictly_decreasing() const;
    std::vector<Cost> costs() const;
};

/*
  Lower bound f^L and upper bound f(incumbent) on the optimal cost.  `ratio`
  is upper/lower; `reported_ratio` is the tightest bound the producing
  algorithm can certify (the ratio, possibly capped by the weight).
*/
struct BoundPair {
    Cost lower;
    Cost upper = Cost::infinity();
    std::optional<Cost> difference;
    std::optional<Rational> ratio;
    std::optional<Rational> reported_ratio;
};

/*
  Computes the bound report for an incumbent cost and the least f over the
  frontier.  open_min_f = nullopt means the frontier is exhausted, in which
  case lower = upper and the error is zero.  When weight_bound_holds is set
  the reported ratio is additionally capped at w.
*/
BoundPair error_bound(std::optional<Cost> incumbent_cost, std::optional<Cost> open_min_f, const WeightSpec &w,
                      bool weight_bound_holds);

struct SearchLimits {
    std::optional<std::uint64_t> max_expansions;
    std::optional<std::uint64_t> max_stored;
    std::optional<std::chrono::nanoseconds> max_wall_time;
};

struct SearchStats {
    std::uint64_t expansions = 0;
    std::uint64_t distinct_expanded = 0;
    std::uint64_t reexpansions = 0;
    std::uint64_t generated = 0;
    /// Peak number of node records held (Open + Closed, or stack entries for RBFS).
    std::uint64_t stored = 0;
    std::uint64_t recursive_calls = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t purged = 0;
    std::chrono::nanoseconds wall_time{0};
};

/// One progress report delivered to a sink during search.
struct Emission {
    const Incumbent *incumbent = nullptr;
    BoundPair bounds;
    std::uint64_t expansions = 0;
    std::uint64_t stored = 0;
    std::chrono::nanoseconds wall_time{0};
    bool improved = false;
    bool final = false;
    /// Current weight (varies for the decreasing-weight schedule).
    WeightSpec weight;
};

using EmissionSink = std::function<void(const Emission &)>;

/// Observer for node expansions (instrumentation and runtime checks).
struct ExpansionEvent {
    StateId state{};
    Cost g;
    Cost h;
    std::uint64_t depth = 0;
    /// Stored/backed-up value used to select the node (RBFS) or its key (best-first).
    Key selection_value;
    /// Identifies the search-tree node for tree searches (hash of the path); 0 otherwise.
    std::uint64_t path_hash = 0;
};

using ExpansionObserver = std::function<void(const ExpansionEvent &)>;

struct SearchResult {
    SearchStatus status = SearchStatus::NoSolution;
    std::optional<Incumbent> incumbent;
    BoundPair bounds;
    SearchStats stats;
    IncumbentTrace trace;
};

/// Sum of edge costs along `path`; throws std::invalid_argument if a step is not an edge.
Cost path_cost(const SearchSpace &space, const std::vector<StateId> &path);

} // namespace anytime

#endif
