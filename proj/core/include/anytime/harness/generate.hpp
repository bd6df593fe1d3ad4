#ifndef ANYTIME_HARNESS_GENERATE_HPP
#define ANYTIME_HARNESS_GENERATE_HPP

#include "anytime/domains/graph.hpp"
#include "anytime/domains/msa.hpp"
#include "anytime/domains/tiles.hpp"

#include <cstdint>
#include <vector>

namespace anytime::harness {

/// Seeded instance generators.  Equal parameters and seed give equal instances.

struct TileGenParams {
    int width = 3;
    /// Random-walk length from the goal; 0 draws a uniformly random solvable board.
    int walk = 0;
};
tiles::TileState generate_tiles(const TileGenParams &params, std::uint64_t seed);

struct GraphGenParams {
    std::uint32_t min_vertices = 4;
    std::uint32_t max_vertices = 10;
    /// Edge probability in percent for each ordered vertex pair.
    std::uint32_t edge_percent = 35;
    std::uint32_t max_cost = 9;
    std::uint32_t max_goals = 2;
};
/*
  Random digraph with vertex 0 as start and at least one reachable goal.
  Heuristic labels are floor(d(v) * k_v / 10) with k_v drawn from 0..10 per
  vertex, where d(v) is the true distance to the nearest goal: admissible but
  generally inconsistent.
*/
graph::ExplicitGraph generate_graph(const GraphGenParams &params, std::uint64_t seed);

struct SequenceGenParams {
    std::size_t count = 3;
    std::size_t min_length = 8;
    std::size_t max_length = 12;
};
/// Uniform random residues; names are seq1, seq2, ...
std::vector<msa::Sequence> generate_sequences(const SequenceGenParams &params, std::uint64_t seed);

} // namespace anytime::harness

#endif
