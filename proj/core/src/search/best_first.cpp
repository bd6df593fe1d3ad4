#include "anytime/search/best_first.hpp"

#include "anytime/core/check.hpp"
#include "anytime/core/node.hpp"

#include <algorithm>
#include <chrono>

namespace anytime {

namespace {

using Clock = std::chrono::steady_clock;

enum class GoalTest { AtSelection, AtGeneration };

enum class WeightCap {
    /// Goal selected as the minimum key: the incumbent is within w of optimal.
    AtSelection,
    /// Goal found at generation: the cap holds only while q*upper <= least key in Open.
    WhenKeysDominate,
};

struct EngineConfig {
    WeightSpec weight;
    GoalTest goal_test = GoalTest::AtSelection;
    bool stop_at_first = true;
    Cost insertion_bound = Cost::infinity();
    bool defer_reopen = false;
    std::optional<Rational> weight_step;
    WeightCap cap = WeightCap::AtSelection;
};

/*
  Shared best-first loop.  The public algorithms are configurations of it:

    astar / weighted_astar : goal at selection, stop at first goal
    enhanced_astar         : astar with an insertion bound
    anytime_wastar         : goal at generation, continue, prune by incumbent
    ara_star               : goal at selection, continue, every improved
                             path to an expanded node deferred to INCONS
                             until the weight next decreases
*/
class Engine {
public:
    Engine(const SearchSpace &space, EngineConfig cfg, const BestFirstOptions &opts)
        : space_(space), cfg_(std::move(cfg)), opts_(opts), open_(opts.tie), weight_(cfg_.weight),
          started_(Clock::now()) {}

    SearchResult run();

private:
    Cost bound() const { return std::min(upper(), cfg_.insertion_bound); }
    Cost upper() const { return result_.incumbent ? result_.incumbent->cost : Cost::infinity(); }
    std::chrono::nanoseconds elapsed() const { return Clock::now() - started_; }

    void note_stored() { result_.stats.stored = std::max<std::uint64_t>(result_.stats.stored, table_.size()); }
    bool limits_exceeded();
    void push_record(NodeRecord &rec);
    void set_incumbent(StateId goal, std::vector<StateId> path, Cost cost);
    void expand(NodeRecord &rec);
    void end_iteration();
    std::optional<Cost> frontier_min_f() const;
    bool weight_cap_holds() const;
    BoundPair current_bounds();
    void emit(bool improved, bool final);
    void flush_improvement();
    SearchResult finish(SearchStatus status);

    const SearchSpace &space_;
    EngineConfig cfg_;
    const BestFirstOptions &opts_;
    NodeTable table_;
    OpenList open_;
    std::vector<StateId> incons_;
    WeightSpec weight_;
    WeightSpec cap_weight_;
    Clock::time_point started_;
    SearchResult result_;
    Cost lower_floor_ = Cost(0);
    std::uint64_t next_emit_at_ = 1;
    bool improved_pending_ = false;
    std::size_t pending_from_ = 0;
    std::uint64_t loop_count_ = 0;
    std::vector<Successor> succ_;
};

bool Engine::limits_exceeded() {
    const SearchLimits &lim = opts_.limits;
    if (lim.max_expansions && result_.stats.expansions >= *lim.max_expansions)
        return true;
    if (lim.max_stored && table_.size() > *lim.max_stored) {
        if (opts_.purge_on_memory_pressure && result_.incumbent) {
            const Cost ub = upper();
            std::vector<StateId> doomed;
            open_.for_each([&](const OpenEntry &e) {
                if (e.f >= ub)
                    doomed.push_back(e.state);
            });
            for (StateId s : doomed) {
                open_.erase(s);
                // Expanded records may be parents of live records; keep them.
                NodeRecord *rec = table_.find(s);
                if (rec->times_expanded == 0)
                    table_.erase(s);
                else
                    rec->status = NodeStatus::Pruned;
            }
            result_.stats.purged += doomed.size();
        }
        if (table_.size() > *lim.max_stored)
            return true;
    }
    if (lim.max_wall_time && (++loop_count_ & 255u) == 0 && elapsed() >= *lim.max_wall_time)
        return true;
    return false;
}

void Engine::push_record(NodeRecord &rec) {
    rec.status = NodeStatus::Open;
    open_.push(OpenEntry{rec.state, rec.key(weight_), rec.h, rec.f()});
}

void Engine::set_incumbent(StateId goal, std::vector<StateId> path, Cost cost) {
    Incumbent inc;
    inc.goal_state = goal;
    inc.cost = cost;
    inc.path = std::move(path);
    inc.found_at = Discovery{result_.stats.expansions, elapsed()};
    result_.incumbent = inc;
    cap_weight_ = weight_;
    if (!improved_pending_)
        pending_from_ = result_.trace.entries.size();
    result_.trace.entries.push_back(inc);
    improved_pending_ = true;
}

/*
  Bounds are attached and reported once Open holds every child of the node
  that produced the improvement.  A goal superseded within the same expansion
  keeps its own uncapped cost/lower ratio.
*/
void Engine::flush_improvement() {
    if (!improved_pending_)
        return;
    improved_pending_ = false;
    const BoundPair b = current_bounds();
    auto &entries = result_.trace.entries;
    for (std::size_t i = pending_from_; i + 1 < entries.size(); ++i)
        entries[i].bound_at_discovery = error_bound(entries[i].cost, b.lower, cap_weight_, false).reported_ratio;
    result_.incumbent->bound_at_discovery = b.reported_ratio;
    entries.back().bound_at_discovery = b.reported_ratio;
    emit(true, false);
}

void Engine::expand(NodeRecord &rec_in) {
    const StateId n = rec_in.state;
    const Cost g_n = rec_in.g;
    ANYTIME_CHECK(!result_.incumbent || rec_in.f() < upper(), "expanding a node that cannot improve the incumbent");

    rec_in.status = NodeStatus::Closed;
    if (rec_in.times_expanded++ == 0)
        ++result_.stats.distinct_expanded;
    else
        ++result_.stats.reexpansions;
    ++result_.stats.expansions;
    if (opts_.on_expand)
        opts_.on_expand(ExpansionEvent{n, g_n, rec_in.h, 0, rec_in.key(weight_), 0});

    space_.successors(n, succ_);
    for (const Successor &s : succ_) {
        ++result_.stats.generated;
        const Cost g2 = g_n + s.cost;
        NodeRecord *known = table_.find(s.state);
        const Cost h2 = known ? known->h : space_.heuristic(s.state);
        if (!(g2 + h2 < bound()))
            continue;

        if (cfg_.goal_test == GoalTest::AtGeneration && space_.is_goal(s.state)) {
            std::vector<StateId> path = table_.path_to(n);
            path.push_back(s.state);
            const Cost cost = table_.chain_cost(n) + s.cost;
            if (cost < upper())
                set_incumbent(s.state, std::move(path), cost);
            continue;
        }

        if (known == nullptr) {
            NodeRecord rec;
            rec.state = s.state;
            rec.g = g2;
            rec.h = h2;
            rec.parent = n;
            rec.edge_cost = s.cost;
            push_record(table_.insert(rec));
            note_stored();
            continue;
        }
        if (!(g2 < known->g))
            continue;

        switch (known->status) {
        case NodeStatus::Open:
            known->g = g2;
            known->parent = n;
            known->edge_cost = s.cost;
            push_record(*known);
            break;
        case NodeStatus::Closed:
            if (cfg_.defer_reopen) {
                known->g = g2;
                known->parent = n;
                known->edge_cost = s.cost;
                if (!known->in_incons) {
                    known->in_incons = true;
                    incons_.push_back(known->state);
                }
            } else {
                [[maybe_unused]] bool reopened = reopen(*known, g2, n, s.cost, open_, weight_);
            }
            break;
        case NodeStatus::Pruned:
            known->g = g2;
            known->parent = n;
            known->edge_cost = s.cost;
            push_record(*known);
            break;
        }
    }
}

void Engine::end_iteration() {
    if (cfg_.weight_step)
        weight_ = weight_.decreased_by(*cfg_.weight_step);
    const Cost ub = upper();
    for (StateId s : incons_) {
        NodeRecord *rec = table_.find(s);
        if (rec == nullptr || !rec->in_incons)
            continue;
        rec->in_incons = false;
        if (rec->f() < ub)
            push_record(*rec);
        else
            rec->status = NodeStatus::Pruned;
    }
    incons_.clear();
    const WeightSpec w = weight_;
    open_.rebuild([&w](const OpenEntry &e) { return priority_key(difference(e.f, e.h), e.h, w); });
}

std::optional<Cost> Engine::frontier_min_f() const {
    if (open_.empty() && incons_.empty())
        return std::nullopt;
    Cost m = open_.min_f();
    for (StateId s : incons_)
        if (const NodeRecord *rec = table_.find(s); rec && rec->in_incons)
            m = std::min(m, rec->f());
    return m;
}

bool Engine::weight_cap_holds() const {
    if (!result_.incumbent)
        return false;
    switch (cfg_.cap) {
    case WeightCap::AtSelection:
        return true;
    case WeightCap::WhenKeysDominate:
        if (open_.empty())
            return true;
        return scaled_f(upper(), weight_) <= open_.min_key();
    }
    return false;
}

BoundPair Engine::current_bounds() {
    std::optional<Cost> frontier = frontier_min_f();
    if (frontier) {
        const Cost candidate = std::min(*frontier, upper());
        if (candidate.is_finite())
            lower_floor_ = std::max(lower_floor_, candidate);
        frontier = lower_floor_;
    }
    // Under the decreasing schedule the incumbent is certified by the weight it was found with.
    const WeightSpec &cap_weight = result_.incumbent ? cap_weight_ : weight_;
    return error_bound(result_.incumbent ? std::optional<Cost>(upper()) : std::nullopt, frontier, cap_weight,
                       weight_cap_holds());
}

void Engine::emit(bool improved, bool final) {
    if (!opts_.sink)
        return;
    Emission e;
    e.incumbent = result_.incumbent ? &*result_.incumbent : nullptr;
    e.bounds = final ? result_.bounds : current_bounds();
    e.expansions = result_.stats.expansions;
    e.stored = result_.stats.stored;
    e.wall_time = elapsed();
    e.improved = improved;
    e.final = final;
    e.weight = weight_;
    opts_.sink(e);
}

SearchResult Engine::finish(SearchStatus status) {
    result_.status = status;
    result_.stats.wall_time = elapsed();
    note_stored();
    if (status == SearchStatus::Converged) {
        result_.bounds = error_bound(upper(), std::nullopt, cap_weight_, true);
    } else {
        result_.bounds = current_bounds();
    }
    emit(false, true);
    return std::move(result_);
}

SearchResult Engine::run() {
    const StateId s0 = space_.start();
    NodeRecord start;
    start.state = s0;
    start.g = Cost(0);
    start.h = space_.heuristic(s0);
    ++result_.stats.generated;

    if (space_.is_goal(s0)) {
        table_.insert(start).status = NodeStatus::Closed;
        note_stored();
        set_incumbent(s0, {s0}, Cost(0));
        flush_improvement();
        return finish(SearchStatus::Converged);
    }
    if (!(start.f() < cfg_.insertion_bound))
        return finish(SearchStatus::NoSolution);
    push_record(table_.insert(start));
    note_stored();

    while (true) {
        if (open_.empty()) {
            if (!incons_.empty()) {
                end_iteration();
                continue;
            }
            break;
        }
        if (limits_exceeded())
            return finish(SearchStatus::Interrupted);

        const OpenEntry top = open_.pop_min();
        NodeRecord *rec = table_.find(top.state);
        ANYTIME_CHECK(rec != nullptr, "open entry without record");
        if (result_.incumbent && !(rec->f() < upper())) {
            rec->status = NodeStatus::Pruned;
            continue;
        }

        if (cfg_.goal_test == GoalTest::AtSelection && space_.is_goal(rec->state)) {
            rec->status = NodeStatus::Pruned;
            const Cost cost = table_.chain_cost(rec->state);
            if (cost < upper())
                set_incumbent(rec->state, table_.path_to(rec->state), cost);
            flush_improvement();
            if (cfg_.stop_at_first)
                return finish(cfg_.weight.is_unit() ? SearchStatus::Converged : SearchStatus::Solved);
            end_iteration();
            continue;
        }

        expand(*rec);
        const bool reported = improved_pending_;
        flush_improvement();
        if (result_.stats.expansions >= next_emit_at_) {
            if (!reported)
                emit(false, false);
            next_emit_at_ *= 2;
        }
    }
    return finish(result_.incumbent ? SearchStatus::Converged : SearchStatus::NoSolution);
}

} // namespace

SearchResult astar(const SearchSpace &space, const BestFirstOptions &opts) {
    EngineConfig cfg;
    return Engine(space, cfg, opts).run();
}

SearchResult weighted_astar(const SearchSpace &space, const WeightSpec &w, const BestFirstOptions &opts) {
    EngineConfig cfg;
    cfg.weight = w;
    return Engine(space, cfg, opts).run();
}

SearchResult anytime_wastar(const SearchSpace &space, const WeightSpec &w, const BestFirstOptions &opts) {
    EngineConfig cfg;
    cfg.weight = w;
    cfg.goal_test = GoalTest::AtGeneration;
    cfg.stop_at_first = false;
    cfg.cap = WeightCap::WhenKeysDominate;
    return Engine(space, cfg, opts).run();
}

SearchResult enhanced_astar(const SearchSpace &space, Cost upper_bound, const BestFirstOptions &opts) {
    EngineConfig cfg;
    cfg.insertion_bound = upper_bound;
    return Engine(space, cfg, opts).run();
}

SearchResult ara_star(const SearchSpace &space, const WeightSpec &w0, const Rational &step,
                      const BestFirstOptions &opts) {
    if (step == Rational())
        throw std::invalid_argument("ara_star requires a positive weight step");
    EngineConfig cfg;
    cfg.weight = w0;
    cfg.stop_at_first = false;
    cfg.defer_reopen = true;
    cfg.weight_step = step;
    return Engine(space, cfg, opts).run();
}

} // namespace anytime

