#ifndef ANYTIME_DOMAINS_GRAPH_HPP
#define ANYTIME_DOMAINS_GRAPH_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/search_space.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace anytime::graph {

struct Edge {
    std::uint32_t from;
    std::uint32_t to;
    Cost cost;
};

/*
  Directed graph with explicit per-vertex heuristic labels.  Vertices are
  numbered 0..V-1 and the StateId of vertex v is v itself.  Construction
  validates edge costs, goal labels and heuristic admissibility.
*/
class ExplicitGraph final : public SearchSpace {
public:
    ExplicitGraph(std::uint32_t vertices, std::vector<Edge> edges, std::uint32_t start,
                  std::vector<std::uint32_t> goals, std::vector<Cost> heuristic);

    StateId start() const override { return state_id(start_); }
    bool is_goal(StateId s) const override;
    void successors(StateId s, std::vector<Successor> &out) const override;
    Cost heuristic(StateId s) const override;
    std::string describe(StateId s) const override { return "v" + std::to_string(raw(s)); }

    std::uint32_t vertex_count() const { return vertices_; }
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<std::uint32_t> &goals() const { return goals_; }
    const std::vector<Cost> &heuristic_values() const { return h_; }

    /// Exact cost-to-goal for every vertex (infinity when no goal is reachable).
    std::vector<Cost> distances_to_goal() const;

    std::string format() const;

private:
    std::uint32_t vertex(StateId s) const;

    std::uint32_t vertices_;
    std::vector<Edge> edges_;
    std::uint32_t start_;
    std::vector<std::uint32_t> goals_;
    std::vector<Cost> h_;
    std::vector<bool> is_goal_;
    std::vector<std::vector<Successor>> adjacency_;
};

/// Parses "V E start goal_count", the goal line, the heuristic line and E "u v cost" lines.
ExplicitGraph load_graph(std::string_view text);

} // namespace anytime::graph

#endif
