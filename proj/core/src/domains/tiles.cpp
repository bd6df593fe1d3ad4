#include "anytime/domains/tiles.hpp"

#include "anytime/core/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace anytime::tiles {

namespace {

void check_width(int width) {
    if (width != 3 && width != 4)
        throw ValidationError("tile width must be 3 or 4, got " + std::to_string(width));
}

std::uint8_t nibble(std::uint64_t id, int cell) { return static_cast<std::uint8_t>((id >> (4 * cell)) & 0xF); }

int manhattan(int width, int tile, int cell) {
    return std::abs(cell / width - tile / width) + std::abs(cell % width - tile % width);
}

} // namespace

TileState::TileState(int width, const std::vector<int> &tiles) : width_(width) {
    check_width(width);
    const auto n = static_cast<std::size_t>(width * width);
    if (tiles.size() != n)
        throw ValidationError("expected " + std::to_string(n) + " tiles, got " + std::to_string(tiles.size()));
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const int t = tiles[i];
        if (t < 0 || static_cast<std::size_t>(t) >= n || seen[static_cast<std::size_t>(t)])
            throw ValidationError("tiles are not a permutation of 0.." + std::to_string(n - 1));
        seen[static_cast<std::size_t>(t)] = true;
        cells_[i] = static_cast<std::uint8_t>(t);
    }
}

TileState TileState::goal(int width) {
    check_width(width);
    std::vector<int> t(static_cast<std::size_t>(width * width));
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = static_cast<int>(i);
    return TileState(width, t);
}

TileState TileState::decode(int width, StateId id) {
    check_width(width);
    TileState s;
    s.width_ = width;
    for (int c = 0; c < width * width; ++c)
        s.cells_[static_cast<std::size_t>(c)] = nibble(raw(id), c);
    return s;
}

int TileState::blank() const {
    for (int c = 0; c < cells(); ++c)
        if (at(c) == 0)
            return c;
    return -1;
}

StateId TileState::encode() const {
    std::uint64_t id = 0;
    for (int c = 0; c < cells(); ++c)
        id |= static_cast<std::uint64_t>(at(c)) << (4 * c);
    return state_id(id);
}

bool TileState::is_solvable() const {
    int inversions = 0;
    for (int i = 0; i < cells(); ++i)
        for (int j = i + 1; j < cells(); ++j)
            if (at(i) && at(j) && at(i) > at(j))
                ++inversions;
    // For odd widths a move changes inversions by an even amount.  For even
    // widths a vertical move flips inversion parity and changes the blank row
    // by one, so inversions + blank row is invariant.
    if (width_ % 2 == 1)
        return inversions % 2 == 0;
    return (inversions + blank() / width_) % 2 == 0;
}

std::vector<int> TileState::tiles() const {
    std::vector<int> out;
    for (int c = 0; c < cells(); ++c)
        out.push_back(at(c));
    return out;
}

std::string TileState::str() const {
    std::string out;
    for (int c = 0; c < cells(); ++c) {
        if (c)
            out += c % width_ ? ' ' : '/';
        out += std::to_string(at(c));
    }
    return out;
}

Cost manhattan_h(const TileState &s) {
    std::uint64_t total = 0;
    for (int c = 0; c < s.cells(); ++c)
        if (s.at(c))
            total += static_cast<std::uint64_t>(manhattan(s.width(), s.at(c), c));
    return Cost(total);
}

std::vector<std::pair<TileState, Cost>> tile_successors(const TileState &s) {
    TilePuzzle space(s);
    std::vector<Successor> succ;
    space.successors(s.encode(), succ);
    std::vector<std::pair<TileState, Cost>> out;
    for (const auto &x : succ)
        out.emplace_back(TileState::decode(s.width(), x.state), x.cost);
    return out;
}

TileState load_tiles(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    int width = 0;
    std::vector<int> tiles;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string tok;
        while (fields >> tok) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception &) {
                throw ParseError(line_no, "expected an integer, got '" + tok + "'");
            }
            if (width == 0) {
                if (v != 3 && v != 4)
                    throw ParseError(line_no, "tile width must be 3 or 4, got " + tok);
                width = v;
            } else {
                tiles.push_back(v);
            }
        }
    }
    if (width == 0)
        throw ParseError(line_no, "missing width line");
    TileState s(width, tiles);
    if (!s.is_solvable())
        throw ValidationError("tile board " + s.str() + " is not solvable (parity)");
    return s;
}

std::string format_tiles(const TileState &s) {
    std::string out = std::to_string(s.width()) + "\n";
    for (int c = 0; c < s.cells(); ++c) {
        out += std::to_string(s.at(c));
        out += c + 1 == s.cells() ? '\n' : ' ';
    }
    return out;
}

TileState random_walk(int width, int steps, std::mt19937_64 &rng) {
    check_width(width);
    if (steps < 0)
        throw std::invalid_argument("walk length must be non-negative");
    TilePuzzle space(TileState::goal(width));
    StateId cur = TileState::goal(width).encode();
    StateId prev = cur;
    std::vector<Successor> succ;
    for (int i = 0; i < steps; ++i) {
        space.successors(cur, succ);
        std::erase_if(succ, [&](const Successor &x) { return i > 0 && x.state == prev; });
        std::uniform_int_distribution<std::size_t> pick(0, succ.size() - 1);
        prev = cur;
        cur = succ[pick(rng)].state;
    }
    return TileState::decode(width, cur);
}

TileState random_solvable(int width, std::mt19937_64 &rng) {
    check_width(width);
    std::vector<int> t(static_cast<std::size_t>(width * width));
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = static_cast<int>(i);
    for (;;) {
        for (std::size_t i = t.size() - 1; i > 0; --i) {
            std::uniform_int_distribution<std::size_t> pick(0, i);
            std::swap(t[i], t[pick(rng)]);
        }
        TileState s(width, t);
        if (s.is_solvable())
            return s;
    }
}

TilePuzzle::TilePuzzle(const TileState &start)
    : width_(start.width()), start_(start.encode()), goal_(TileState::goal(start.width()).encode()) {
    if (!start.is_solvable())
        throw ValidationError("tile board " + start.str() + " is not solvable (parity)");
    const int n = width_ * width_;
    for (int t = 1; t < n; ++t)
        for (int c = 0; c < n; ++c)
            distance_[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)] =
                static_cast<std::uint8_t>(manhattan(width_, t, c));
}

void TilePuzzle::successors(StateId s, std::vector<Successor> &out) const {
    out.clear();
    const std::uint64_t id = raw(s);
    int blank = 0;
    while (nibble(id, blank) != 0)
        ++blank;
    const int row = blank / width_;
    const int col = blank % width_;
    auto slide = [&](int cell) {
        const std::uint64_t tile = nibble(id, cell);
        const std::uint64_t next = (id & ~(std::uint64_t{0xF} << (4 * cell))) | (tile << (4 * blank));
        out.push_back({state_id(next), Cost(1)});
    };
    if (row > 0)
        slide(blank - width_);
    if (col > 0)
        slide(blank - 1);
    if (col + 1 < width_)
        slide(blank + 1);
    if (row + 1 < width_)
        slide(blank + width_);
}

Cost TilePuzzle::heuristic(StateId s) const {
    const std::uint64_t id = raw(s);
    std::uint64_t total = 0;
    for (int c = 0; c < width_ * width_; ++c)
        total += distance_[nibble(id, c)][static_cast<std::size_t>(c)];
    return Cost(total);
}

std::string TilePuzzle::describe(StateId s) const { return state(s).str(); }

} // namespace anytime::tiles
