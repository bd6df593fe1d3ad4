#include "anytime/domains/graph.hpp"

#include "anytime/core/errors.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace anytime::graph {

ExplicitGraph::ExplicitGraph(std::uint32_t vertices, std::vector<Edge> edges, std::uint32_t start,
                             std::vector<std::uint32_t> goals, std::vector<Cost> heuristic)
    : vertices_(vertices), edges_(std::move(edges)), start_(start), goals_(std::move(goals)),
      h_(std::move(heuristic)), is_goal_(vertices, false), adjacency_(vertices) {
    if (vertices_ == 0)
        throw ValidationError("graph needs at least one vertex");
    if (start_ >= vertices_)
        throw ValidationError("start vertex " + std::to_string(start_) + " out of range");
    if (goals_.empty())
        throw ValidationError("graph needs at least one goal vertex");
    if (h_.size() != vertices_)
        throw ValidationError("expected " + std::to_string(vertices_) + " heuristic values, got " +
                              std::to_string(h_.size()));
    for (auto g : goals_) {
        if (g >= vertices_)
            throw ValidationError("goal vertex " + std::to_string(g) + " out of range");
        is_goal_[g] = true;
    }
    for (const auto &e : edges_) {
        if (e.from >= vertices_ || e.to >= vertices_)
            throw ValidationError("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                                  " references a missing vertex");
        if (e.cost.is_infinite() || e.cost < Cost(1))
            throw ValidationError("edge cost must be >= 1");
        adjacency_[e.from].push_back({state_id(e.to), e.cost});
    }
    for (std::uint32_t v = 0; v < vertices_; ++v) {
        if (h_[v].is_infinite())
            throw ValidationError("heuristic of vertex " + std::to_string(v) + " is infinite");
        if (is_goal_[v] && h_[v] != Cost(0))
            throw ValidationError("heuristic of goal vertex " + std::to_string(v) + " must be 0");
    }
    const auto dist = distances_to_goal();
    for (std::uint32_t v = 0; v < vertices_; ++v)
        if (dist[v].is_finite() && h_[v] > dist[v])
            throw ValidationError("heuristic is not admissible at vertex " + std::to_string(v) + ": h=" +
                                  h_[v].str() + " exceeds true distance " + dist[v].str());
}

std::uint32_t ExplicitGraph::vertex(StateId s) const {
    const auto v = raw(s);
    if (v >= vertices_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return static_cast<std::uint32_t>(v);
}

bool ExplicitGraph::is_goal(StateId s) const { return is_goal_[vertex(s)]; }

void ExplicitGraph::successors(StateId s, std::vector<Successor> &out) const { out = adjacency_[vertex(s)]; }

Cost ExplicitGraph::heuristic(StateId s) const { return h_[vertex(s)]; }

std::vector<Cost> ExplicitGraph::distances_to_goal() const {
    std::vector<std::vector<std::pair<std::uint32_t, Cost>>> reverse(vertices_);
    for (const auto &e : edges_)
        reverse[e.to].emplace_back(e.from, e.cost);
    std::vector<Cost> dist(vertices_, Cost::infinity());
    using Item = std::pair<Cost, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (auto g : goals_) {
        dist[g] = Cost(0);
        queue.emplace(Cost(0), g);
    }
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (d > dist[v])
            continue;
        for (const auto &[u, c] : reverse[v]) {
            const Cost nd = d + c;
            if (nd < dist[u]) {
                dist[u] = nd;
                queue.emplace(nd, u);
            }
        }
    }
    return dist;
}

std::string ExplicitGraph::format() const {
    std::ostringstream out;
    out << vertices_ << ' ' << edges_.size() << ' ' << start_ << ' ' << goals_.size() << '\n';
    for (std::size_t i = 0; i < goals_.size(); ++i)
        out << (i ? " " : "") << goals_[i];
    out << '\n';
    for (std::size_t i = 0; i < h_.size(); ++i)
        out << (i ? " " : "") << h_[i];
    out << '\n';
    for (const auto &e : edges_)
        out << e.from << ' ' << e.to << ' ' << e.cost << '\n';
    return out.str();
}

namespace {

struct Line {
    std::size_t number;
    std::vector<long long> values;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::istringstream in{std::string(text)};
    std::string raw_line;
    std::size_t n = 0;
    while (std::getline(in, raw_line)) {
        ++n;
        const auto hash = raw_line.find('#');
        if (hash != std::string::npos)
            raw_line.erase(hash);
        std::istringstream fields(raw_line);
        std::string tok;
        Line line{n, {}};
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                line.values.push_back(std::stoll(tok, &used));
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception &) {
                throw ParseError(n, "expected an integer, got '" + tok + "'");
            }
        }
        if (!line.values.empty())
            lines.push_back(std::move(line));
    }
    return lines;
}

std::uint32_t as_index(const Line &line, long long v, const char *what) {
    if (v < 0 || v > 0xFFFFFFFFll)
        throw ParseError(line.number, std::string(what) + " " + std::to_string(v) + " out of range");
    return static_cast<std::uint32_t>(v);
}

} // namespace

ExplicitGraph load_graph(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(0, "empty graph file");
    const Line &header = lines[0];
    if (header.values.size() != 4)
        throw ParseError(header.number, "header must be 'V E start goal_count'");
    const auto v = as_index(header, header.values[0], "vertex count");
    const auto e = static_cast<std::size_t>(as_index(header, header.values[1], "edge count"));
    const auto start = as_index(header, header.values[2], "start vertex");
    const auto goal_count = static_cast<std::size_t>(as_index(header, header.values[3], "goal count"));
    if (goal_count == 0)
        throw ValidationError("graph needs at least one goal vertex");
    if (lines.size() != 3 + e)
        throw ParseError(lines.back().number, "expected " + std::to_string(3 + e) + " non-empty lines, found " +
                                                  std::to_string(lines.size()));

    const Line &goal_line = lines[1];
    if (goal_line.values.size() != goal_count)
        throw ParseError(goal_line.number, "expected " + std::to_string(goal_count) + " goal vertices");
    std::vector<std::uint32_t> goals;
    for (auto g : goal_line.values)
        goals.push_back(as_index(goal_line, g, "goal vertex"));

    const Line &h_line = lines[2];
    if (h_line.values.size() != v)
        throw ParseError(h_line.number, "expected " + std::to_string(v) + " heuristic values");
    std::vector<Cost> h;
    for (auto x : h_line.values) {
        if (x < 0)
            throw ValidationError("heuristic values must be non-negative (line " + std::to_string(h_line.number) + ")");
        h.emplace_back(static_cast<std::uint64_t>(x));
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < e; ++i) {
        const Line &line = lines[3 + i];
        if (line.values.size() != 3)
            throw ParseError(line.number, "edge line must be 'u v cost'");
        const auto from = as_index(line, line.values[0], "edge source");
        const auto to = as_index(line, line.values[1], "edge target");
        if (line.values[2] < 1)
            throw ValidationError("edge cost must be >= 1, got " + std::to_string(line.values[2]) + " on line " +
                                  std::to_string(line.number));
        edges.push_back({from, to, Cost(static_cast<std::uint64_t>(line.values[2]))});
    }
    return ExplicitGraph(v, std::move(edges), start, std::move(goals), std::move(h));
}

} // namespace anytime::graph
