#include "anytime/oracle/oracle.hpp"

#include "anytime/core/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <queue>
#include <stdexcept>

namespace anytime::oracle {

std::optional<OracleResult> uniform_cost(const SearchSpace &space, std::uint64_t max_states) {
    struct Info {
        Cost dist;
        std::optional<StateId> parent;
        bool settled = false;
    };
    std::unordered_map<std::uint64_t, Info> info;
    using Item = std::pair<Cost, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    const auto start = raw(space.start());
    info[start] = {Cost(0), std::nullopt};
    queue.emplace(Cost(0), start);
    std::uint64_t settled = 0;
    std::vector<Successor> succ;
    while (!queue.empty()) {
        const auto [d, u] = queue.top();
        queue.pop();
        Info &iu = info.at(u);
        if (iu.settled || d > iu.dist)
            continue;
        iu.settled = true;
        if (++settled > max_states)
            throw ResourceLimit("uniform_cost settled more than " + std::to_string(max_states) + " states");
        if (space.is_goal(state_id(u))) {
            OracleResult r{d, {}, settled};
            for (std::optional<StateId> at = state_id(u); at; at = info.at(raw(*at)).parent)
                r.optimal_path.push_back(*at);
            std::reverse(r.optimal_path.begin(), r.optimal_path.end());
            return r;
        }
        space.successors(state_id(u), succ);
        for (const auto &s : succ) {
            const Cost nd = d + s.cost;
            auto [it, fresh] = info.try_emplace(raw(s.state), Info{nd, state_id(u)});
            if (!fresh) {
                if (it->second.settled || nd >= it->second.dist)
                    continue;
                it->second.dist = nd;
                it->second.parent = state_id(u);
            }
            queue.emplace(nd, raw(s.state));
        }
    }
    return std::nullopt;
}

std::optional<OracleResult> enumerate_paths(const graph::ExplicitGraph &graph, std::size_t max_len) {
    const std::uint32_t n = graph.vertex_count();
    if (n > 10)
        throw std::invalid_argument("enumerate_paths supports at most 10 vertices, got " + std::to_string(n));
    std::vector<std::vector<std::pair<std::uint32_t, Cost>>> adj(n);
    for (const auto &e : graph.edges())
        adj[e.from].emplace_back(e.to, e.cost);
    std::vector<bool> goal(n, false);
    for (auto g : graph.goals())
        goal[g] = true;

    std::optional<OracleResult> best;
    std::vector<std::uint32_t> path{static_cast<std::uint32_t>(raw(graph.start()))};
    std::vector<bool> on_path(n, false);
    on_path[path[0]] = true;
    std::uint64_t visited = 0;

    std::function<void(Cost)> walk = [&](Cost cost) {
        ++visited;
        const auto v = path.back();
        if (goal[v]) {
            // Edge costs are positive, so extending past a goal never helps.
            if (!best || cost < best->optimal_cost) {
                best = OracleResult{cost, {}, 0};
                for (auto x : path)
                    best->optimal_path.push_back(state_id(x));
            }
            return;
        }
        if (path.size() - 1 >= max_len)
            return;
        for (const auto &[w, c] : adj[v]) {
            if (on_path[w])
                continue;
            on_path[w] = true;
            path.push_back(w);
            walk(cost + c);
            path.pop_back();
            on_path[w] = false;
        }
    };
    walk(Cost(0));
    if (best)
        best->explored = visited;
    return best;
}

std::uint64_t AlignmentTable::index(const msa::MsaState &state) const {
    std::uint64_t id = 0;
    std::uint64_t radix = 1;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        id += state[i] * radix;
        radix *= lengths[i] + 1;
    }
    return id;
}

namespace {

Cost pair_cost(const msa::ScoringScheme &scheme, char a, char b) {
    if (a == '-' && b == '-')
        return Cost(0);
    if (a == '-' || b == '-')
        return scheme.gap_cost;
    return scheme.substitution(msa::residue_index(a), msa::residue_index(b));
}

// Cost of the column emitted when the sequences in `mask` advance from `pos`.
Cost column(const std::vector<msa::Sequence> &seqs, const msa::ScoringScheme &scheme,
            const std::vector<std::uint32_t> &pos, std::uint32_t mask) {
    std::vector<char> col(seqs.size());
    for (std::size_t i = 0; i < seqs.size(); ++i)
        col[i] = (mask >> i) & 1u ? seqs[i].residues[pos[i]] : '-';
    Cost total(0);
    for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t j = i + 1; j < col.size(); ++j)
            total += pair_cost(scheme, col[i], col[j]);
    return total;
}

} // namespace

AlignmentTable alignment_table(const std::vector<msa::Sequence> &seqs, const msa::ScoringScheme &scheme,
                               std::uint64_t max_cells) {
    if (seqs.size() < 2 || seqs.size() > 8)
        throw std::invalid_argument("exact alignment supports 2 to 8 sequences");
    AlignmentTable t;
    std::uint64_t cells = 1;
    for (const auto &s : seqs) {
        for (char c : s.residues)
            if (msa::residue_index(c) < 0)
                throw std::invalid_argument(std::string("invalid residue '") + c + "'");
        t.lengths.push_back(static_cast<std::uint32_t>(s.residues.size()));
        cells *= s.residues.size() + 1;
        if (cells > max_cells)
            throw ResourceLimit("alignment lattice exceeds " + std::to_string(max_cells) + " cells");
    }
    const std::size_t n = seqs.size();
    std::vector<std::uint64_t> radix(n, 1);
    for (std::size_t i = 1; i < n; ++i)
        radix[i] = radix[i - 1] * (t.lengths[i - 1] + 1);

    t.cost_to_go.assign(cells, Cost::infinity());
    t.cost_to_go[cells - 1] = Cost(0);
    std::vector<std::uint32_t> pos(n);
    // Every move increases the index, so a descending sweep sees successors first.
    for (std::uint64_t id = cells - 1; id-- > 0;) {
        std::uint64_t rest = id;
        for (std::size_t i = 0; i < n; ++i) {
            pos[i] = static_cast<std::uint32_t>(rest % (t.lengths[i] + 1));
            rest /= t.lengths[i] + 1;
        }
        Cost best = Cost::infinity();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::uint64_t next = id;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                if ((mask >> i) & 1u) {
                    ok = pos[i] < t.lengths[i];
                    next += radix[i];
                }
            }
            if (ok)
                best = std::min(best, column(seqs, scheme, pos, mask) + t.cost_to_go[next]);
        }
        t.cost_to_go[id] = best;
    }
    return t;
}

OracleResult exact_alignment(const std::vector<msa::Sequence> &seqs, const msa::ScoringScheme &scheme,
                             std::uint64_t max_cells) {
    const AlignmentTable t = alignment_table(seqs, scheme, max_cells);
    const std::size_t n = seqs.size();
    OracleResult r{t.cost_to_go[0], {state_id(0)}, t.cost_to_go.size()};
    std::vector<std::uint32_t> pos(n, 0);
    while (pos != t.lengths) {
        const Cost here = t.cost_to_go[t.index(pos)];
        bool moved = false;
        for (std::uint32_t mask = 1; mask < (1u << n) && !moved; ++mask) {
            std::vector<std::uint32_t> next = pos;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i)
                if ((mask >> i) & 1u)
                    ok = ++next[i] <= t.lengths[i];
            if (!ok)
                continue;
            if (column(seqs, scheme, pos, mask) + t.cost_to_go[t.index(next)] == here) {
                pos = next;
                r.optimal_path.push_back(state_id(t.index(pos)));
                moved = true;
            }
        }
        if (!moved)
            throw std::logic_error("alignment table is inconsistent");
    }
    return r;
}

namespace {

using Board = std::array<std::uint8_t, 9>;

std::uint64_t board_key(const Board &b) {
    std::uint64_t k = 0;
    for (std::size_t c = 0; c < 9; ++c)
        k |= static_cast<std::uint64_t>(b[c]) << (4 * c);
    return k;
}

} // namespace

EightPuzzleTable::EightPuzzleTable() {
    Board goal{};
    for (std::uint8_t i = 0; i < 9; ++i)
        goal[i] = i;
    std::deque<Board> frontier{goal};
    dist_.reserve(181440);
    dist_[board_key(goal)] = 0;
    constexpr int dr[4] = {-1, 1, 0, 0};
    constexpr int dc[4] = {0, 0, -1, 1};
    while (!frontier.empty()) {
        const Board b = frontier.front();
        frontier.pop_front();
        const std::uint8_t d = dist_.at(board_key(b));
        const auto blank = static_cast<int>(std::find(b.begin(), b.end(), 0) - b.begin());
        for (int k = 0; k < 4; ++k) {
            const int r = blank / 3 + dr[k];
            const int c = blank % 3 + dc[k];
            if (r < 0 || r > 2 || c < 0 || c > 2)
                continue;
            Board nb = b;
            std::swap(nb[static_cast<std::size_t>(blank)], nb[static_cast<std::size_t>(r * 3 + c)]);
            if (dist_.try_emplace(board_key(nb), static_cast<std::uint8_t>(d + 1)).second)
                frontier.push_back(nb);
        }
    }
}

int EightPuzzleTable::distance(StateId board) const {
    const auto it = dist_.find(raw(board));
    if (it == dist_.end())
        throw std::out_of_range("board is not a solvable Eight Puzzle state");
    return it->second;
}

} // namespace anytime::oracle
