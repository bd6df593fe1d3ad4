#ifndef ANYTIME_DOMAINS_TILES_HPP
#define ANYTIME_DOMAINS_TILES_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/search_space.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anytime::tiles {

/*
  Sliding-tile board of width 3 (Eight Puzzle) or 4 (Fifteen Puzzle) in
  row-major order, 0 = blank.  The goal puts the blank in the upper-left
  corner followed by the tiles in numerical order.
*/
class TileState {
public:
    /// Throws ValidationError unless `tiles` is a permutation of 0..width^2-1.
    TileState(int width, const std::vector<int> &tiles);

    static TileState goal(int width);
    static TileState decode(int width, StateId id);

    int width() const { return width_; }
    int cells() const { return width_ * width_; }
    int at(int cell) const { return cells_[static_cast<std::size_t>(cell)]; }
    int blank() const;

    StateId encode() const;
    bool is_solvable() const;
    std::vector<int> tiles() const;
    std::string str() const;

    friend bool operator==(const TileState &, const TileState &) = default;

private:
    TileState() = default;
    int width_ = 3;
    std::array<std::uint8_t, 16> cells_{};
};

/// Sum of |row - goal_row| + |col - goal_col| over non-blank tiles.
Cost manhattan_h(const TileState &s);

/// Blank swaps with each orthogonal neighbour (up, left, right, down); every move costs 1.
std::vector<std::pair<TileState, Cost>> tile_successors(const TileState &s);

/// "W\n t0 t1 ... " with whitespace-separated tiles; rejects unsolvable boards.
TileState load_tiles(std::string_view text);
std::string format_tiles(const TileState &s);

/// Random walk of `steps` blank moves from the goal that never undoes its previous move.
TileState random_walk(int width, int steps, std::mt19937_64 &rng);
/// Uniformly random solvable board.
TileState random_solvable(int width, std::mt19937_64 &rng);

class TilePuzzle final : public SearchSpace {
public:
    explicit TilePuzzle(const TileState &start);

    StateId start() const override { return start_; }
    bool is_goal(StateId s) const override { return s == goal_; }
    void successors(StateId s, std::vector<Successor> &out) const override;
    Cost heuristic(StateId s) const override;
    std::string describe(StateId s) const override;

    int width() const { return width_; }
    TileState state(StateId s) const { return TileState::decode(width_, s); }

private:
    int width_;
    StateId start_;
    StateId goal_;
    std::array<std::array<std::uint8_t, 16>, 16> distance_{};
};

} // namespace anytime::tiles

#endif
