#include "anytime/harness/generate.hpp"

#include "anytime/core/errors.hpp"

#include <algorithm>
#include <random>

namespace anytime::harness {

namespace {

template <class T>
T draw(std::mt19937_64 &rng, T lo, T hi) {
    return std::uniform_int_distribution<T>(lo, hi)(rng);
}

} // namespace

tiles::TileState generate_tiles(const TileGenParams &params, std::uint64_t seed) {
    if (params.width != 3 && params.width != 4)
        throw ConfigError("tile width must be 3 or 4");
    if (params.walk < 0)
        throw ConfigError("walk length must be non-negative");
    std::mt19937_64 rng(seed);
    if (params.walk == 0)
        return tiles::random_solvable(params.width, rng);
    return tiles::random_walk(params.width, params.walk, rng);
}

graph::ExplicitGraph generate_graph(const GraphGenParams &p, std::uint64_t seed) {
    if (p.min_vertices < 2 || p.max_vertices < p.min_vertices)
        throw ConfigError("graph generator needs 2 <= min_vertices <= max_vertices");
    if (p.edge_percent == 0 || p.edge_percent > 100 || p.max_cost == 0 || p.max_goals == 0)
        throw ConfigError("graph generator parameters out of range");
    std::mt19937_64 rng(seed);
    for (;;) {
        const auto v = draw<std::uint32_t>(rng, p.min_vertices, p.max_vertices);
        std::vector<graph::Edge> edges;
        for (std::uint32_t a = 0; a < v; ++a)
            for (std::uint32_t b = 0; b < v; ++b)
                if (a != b && draw<std::uint32_t>(rng, 1, 100) <= p.edge_percent)
                    edges.push_back({a, b, Cost(draw<std::uint32_t>(rng, 1, p.max_cost))});
        const auto goal_count = std::min(draw<std::uint32_t>(rng, 1, p.max_goals), v - 1);
        std::vector<std::uint32_t> candidates;
        for (std::uint32_t x = 1; x < v; ++x)
            candidates.push_back(x);
        std::vector<std::uint32_t> goals;
        for (std::uint32_t k = 0; k < goal_count; ++k) {
            const auto i = draw<std::size_t>(rng, 0, candidates.size() - 1);
            goals.push_back(candidates[i]);
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(i));
        }
        std::sort(goals.begin(), goals.end());

        const graph::ExplicitGraph blind(v, edges, 0, goals, std::vector<Cost>(v, Cost(0)));
        const auto dist = blind.distances_to_goal();
        if (dist[0].is_infinite())
            continue;
        std::vector<Cost> h(v, Cost(0));
        for (std::uint32_t x = 0; x < v; ++x) {
            const auto k = draw<std::uint64_t>(rng, 0, 10);
            if (dist[x].is_finite())
                h[x] = Cost(dist[x].value() * k / 10);
        }
        return graph::ExplicitGraph(v, std::move(edges), 0, std::move(goals), std::move(h));
    }
}

std::vector<msa::Sequence> generate_sequences(const SequenceGenParams &p, std::uint64_t seed) {
    if (p.count < 2 || p.min_length > p.max_length)
        throw ConfigError("sequence generator needs count >= 2 and min_length <= max_length");
    std::mt19937_64 rng(seed);
    std::vector<msa::Sequence> out;
    for (std::size_t i = 0; i < p.count; ++i) {
        msa::Sequence s;
        s.name = "seq" + std::to_string(i + 1);
        const auto len = draw<std::size_t>(rng, p.min_length, p.max_length);
        for (std::size_t k = 0; k < len; ++k)
            s.residues += msa::kAminoAcids[draw<std::size_t>(rng, 0, msa::kAlphabetSize - 1)];
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace anytime::harness
