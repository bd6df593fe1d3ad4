#ifndef ANYTIME_ORACLE_ORACLE_HPP
#define ANYTIME_ORACLE_ORACLE_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/search_space.hpp"
#include "anytime/domains/graph.hpp"
#include "anytime/domains/msa.hpp"
#include "anytime/domains/scoring.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

/*
  Ground-truth solvers used by tests and the acceptance suite.  None of them
  touches the open list, node table or search engines of the library; they
  are deliberately plain so that agreement with the searches means something.
*/
namespace anytime::oracle {

struct OracleResult {
    Cost optimal_cost;
    std::vector<StateId> optimal_path;
    std::uint64_t explored = 0;
};

/// Dijkstra ignoring the heuristic.  nullopt when no goal is reachable.
/// Throws ResourceLimit after settling max_states states.
std::optional<OracleResult> uniform_cost(const SearchSpace &space, std::uint64_t max_states = 20'000'000);

/// Minimum over every simple path of at most max_len edges.  Graph must have <= 10 vertices.
std::optional<OracleResult> enumerate_paths(const graph::ExplicitGraph &graph, std::size_t max_len = 10);

/// Exact remaining cost from every lattice point, indexed like MsaProblem::encode.
struct AlignmentTable {
    std::vector<std::uint32_t> lengths;
    std::vector<Cost> cost_to_go;

    std::uint64_t index(const msa::MsaState &state) const;
};

/// Full-lattice backward DP.  Throws ResourceLimit above max_cells lattice points.
AlignmentTable alignment_table(const std::vector<msa::Sequence> &seqs, const msa::ScoringScheme &scheme,
                               std::uint64_t max_cells = 1'000'000);

/// Optimal sum-of-pairs alignment; path is the lattice path as MsaProblem StateIds.
OracleResult exact_alignment(const std::vector<msa::Sequence> &seqs, const msa::ScoringScheme &scheme,
                             std::uint64_t max_cells = 1'000'000);

/*
  Exact distance-to-goal of all 181440 solvable Eight Puzzle boards, built by
  breadth-first search backwards from the goal.  Keys are TileState encodings.
*/
class EightPuzzleTable {
public:
    EightPuzzleTable();
    int distance(StateId board) const;
    std::size_t size() const { return dist_.size(); }

private:
    std::unordered_map<std::uint64_t, std::uint8_t> dist_;
};

} // namespace anytime::oracle

#endif
