#include "anytime/rbfs/rbfs.hpp"

#include "anytime/core/check.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace anytime {

namespace {

using Clock = std::chrono::steady_clock;

enum class Variant { Weighted, Wrbfs, AnytimeWrbfs, AnytimeWeighted };

struct Child {
    StateId state{};
    Cost g;
    Cost h;
    Cost F;  // backed-up unweighted value
    Key Fp;  // backed-up weighted value
    std::uint32_t order = 0;
};

struct Frame {
    StateId state{};
    Cost g;
    Cost h;
    Cost F;
    Key Fp;
    Key bound;
    std::uint64_t hash = 0;
    bool expanded = false;
    std::vector<Child> children;
};

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct Backup {
    Cost F;
    Key Fp;
};

class Rbfs {
public:
    Rbfs(const SearchSpace &space, Variant variant, const WeightSpec &w, const RbfsOptions &opts)
        : space_(space), variant_(variant), w_(w), opts_(opts), started_(Clock::now()) {}

    SearchResult run();

private:
    bool anytime() const { return variant_ == Variant::AnytimeWrbfs || variant_ == Variant::AnytimeWeighted; }
    bool weighted_order() const { return variant_ == Variant::Weighted || variant_ == Variant::AnytimeWeighted; }
    Cost upper() const { return result_.incumbent ? result_.incumbent->cost : Cost::infinity(); }
    std::chrono::nanoseconds elapsed() const { return Clock::now() - started_; }

    Key order_key(const Child &c) const { return weighted_order() ? c.Fp : dynamic_key(c.g, c.F, w_); }
    bool before(const Child &a, const Child &b) const;
    void sort_children(Frame &f) const;
    void normalize(Frame &f) const;
    bool keep_going(const Frame &f) const;
    Key child_bound(const Frame &f) const;
    Backup backed_up(const Frame &f) const;

    bool limits_exceeded();
    void count_expansion(const Frame &f);
    void expand(Frame &f);
    void set_incumbent(std::vector<StateId> path, Cost cost);
    std::vector<StateId> stack_path() const;
    std::optional<Cost> frontier_min_f() const;
    BoundPair current_bounds();
    void emit(bool improved, bool final);
    SearchResult finish(SearchStatus status);

    const SearchSpace &space_;
    Variant variant_;
    WeightSpec w_;
    const RbfsOptions &opts_;
    Clock::time_point started_;
    SearchResult result_;
    std::vector<Frame> stack_;
    std::vector<Successor> succ_;
    std::unordered_set<std::uint64_t> seen_;
    std::uint64_t stored_now_ = 0;
    std::uint64_t max_branching_ = 0;
    std::uint64_t next_emit_at_ = 1;
    Cost lower_floor_ = Cost(0);
    bool improved_pending_ = false;
};

bool Rbfs::before(const Child &a, const Child &b) const {
    const Key ka = order_key(a);
    const Key kb = order_key(b);
    if (ka != kb)
        return ka < kb;
    if (!weighted_order() && a.F != b.F)
        return a.F < b.F;
    return a.order < b.order;
}

void Rbfs::sort_children(Frame &f) const {
    std::sort(f.children.begin(), f.children.end(), [this](const Child &a, const Child &b) { return before(a, b); });
}

// Children that cannot lead to a better solution than the incumbent are closed off.
void Rbfs::normalize(Frame &f) const {
    if (!anytime())
        return;
    const Cost ub = upper();
    for (Child &c : f.children)
        if (c.F >= ub) {
            c.F = Cost::infinity();
            c.Fp = Key::infinity();
        }
}

bool Rbfs::keep_going(const Frame &f) const {
    if (f.children.empty())
        return false;
    const Child &n1 = f.children.front();
    switch (variant_) {
    case Variant::Weighted:
        return n1.Fp.is_finite() && n1.Fp <= f.bound;
    case Variant::Wrbfs:
        return n1.F.is_finite() && order_key(n1) <= f.bound;
    case Variant::AnytimeWrbfs:
        return n1.F < upper() && order_key(n1) <= f.bound;
    case Variant::AnytimeWeighted:
        return n1.F < upper() && n1.Fp.is_finite() && n1.Fp <= f.bound;
    }
    return false;
}

// min(B', value of the second-best child); a lone child sees an infinite sibling.
Key Rbfs::child_bound(const Frame &f) const {
    if (f.children.size() < 2)
        return f.bound;
    return std::min(f.bound, order_key(f.children[1]));
}

Backup Rbfs::backed_up(const Frame &f) const {
    Backup b{Cost::infinity(), Key::infinity()};
    for (const Child &c : f.children) {
        b.F = std::min(b.F, c.F);
        b.Fp = std::min(b.Fp, c.Fp);
    }
    return b;
}

bool Rbfs::limits_exceeded() {
    const SearchLimits &lim = opts_.limits;
    if (lim.max_expansions && result_.stats.expansions >= *lim.max_expansions)
        return true;
    if (lim.max_stored && stored_now_ > *lim.max_stored)
        return true;
    if (lim.max_wall_time && (result_.stats.recursive_calls & 255u) == 0 && elapsed() >= *lim.max_wall_time)
        return true;
    return false;
}

std::vector<StateId> Rbfs::stack_path() const {
    std::vector<StateId> path;
    path.reserve(stack_.size() + 1);
    for (const Frame &f : stack_)
        path.push_back(f.state);
    return path;
}

void Rbfs::set_incumbent(std::vector<StateId> path, Cost cost) {
    Incumbent inc;
    inc.goal_state = path.back();
    inc.cost = cost;
    inc.path = std::move(path);
    inc.found_at = Discovery{result_.stats.expansions, elapsed()};
    result_.incumbent = std::move(inc);
    result_.trace.entries.push_back(*result_.incumbent);
    improved_pending_ = true;
}

void Rbfs::count_expansion(const Frame &f) {
    ++result_.stats.expansions;
    if (opts_.track_distinct) {
        if (seen_.insert(raw(f.state)).second)
            ++result_.stats.distinct_expanded;
        else
            ++result_.stats.reexpansions;
    } else {
        ++result_.stats.distinct_expanded;
    }
    if (opts_.on_expand)
        opts_.on_expand(ExpansionEvent{f.state, f.g, f.h, stack_.size() - 1,
                                       weighted_order() ? f.Fp : dynamic_key(f.g, f.F, w_), f.hash});
}

void Rbfs::expand(Frame &f) {
    f.expanded = true;
    count_expansion(f);

    std::optional<StateId> parent;
    if (stack_.size() >= 2)
        parent = stack_[stack_.size() - 2].state;
    space_.successors(f.state, succ_);
    const Cost f_n = f.g + f.h;
    const Key fp_n = priority_key(f.g, f.h, w_);
    f.children.reserve(succ_.size());
    std::uint32_t order = 0;
    for (const Successor &s : succ_) {
        if (opts_.exclude_parent && parent && s.state == *parent)
            continue;
        ++result_.stats.generated;
        Child c;
        c.state = s.state;
        c.g = f.g + s.cost;
        c.h = space_.heuristic(s.state);
        c.order = order++;
        const Cost fc = c.g + c.h;
        const Key fpc = priority_key(c.g, c.h, w_);
        if (anytime() && space_.is_goal(s.state) && c.g < upper()) {
            std::vector<StateId> path = stack_path();
            path.push_back(s.state);
            set_incumbent(std::move(path), c.g);
        }
        if (anytime() && fc >= upper()) {
            c.F = Cost::infinity();
            c.Fp = Key::infinity();
        } else {
            // A node whose stored value exceeds its static value was expanded
            // before; its children inherit the backed-up value.
            c.F = f_n < f.F ? std::max(f.F, fc) : fc;
            c.Fp = fp_n < f.Fp ? std::max(f.Fp, fpc) : fpc;
        }
        f.children.push_back(c);
    }
    normalize(f);
    sort_children(f);

    stored_now_ += f.children.size();
    max_branching_ = std::max<std::uint64_t>(max_branching_, f.children.size());
    result_.stats.stored = std::max(result_.stats.stored, stored_now_ + 1);
    result_.stats.max_depth = std::max<std::uint64_t>(result_.stats.max_depth, stack_.size());
    ANYTIME_CHECK(stored_now_ <= stack_.size() * max_branching_, "stack holds more than depth * branching entries");

    if (improved_pending_) {
        improved_pending_ = false;
        result_.trace.entries.back().bound_at_discovery = current_bounds().reported_ratio;
        result_.incumbent->bound_at_discovery = result_.trace.entries.back().bound_at_discovery;
        emit(true, false);
    } else if (result_.stats.expansions >= next_emit_at_) {
        emit(false, false);
        next_emit_at_ *= 2;
    }
}

std::optional<Cost> Rbfs::frontier_min_f() const {
    bool any = false;
    Cost m = Cost::infinity();
    for (std::size_t k = 0; k < stack_.size(); ++k) {
        const Frame &f = stack_[k];
        if (!f.expanded) {
            // Entered but not expanded yet: the node itself is frontier.
            any = true;
            m = std::min(m, f.F);
            continue;
        }
        // children[0] is on the stack as the next frame; its subtree is covered there.
        const std::size_t first = k + 1 < stack_.size() ? 1 : 0;
        for (std::size_t i = first; i < f.children.size(); ++i) {
            any = true;
            m = std::min(m, f.children[i].F);
        }
    }
    if (!any)
        return std::nullopt;
    return m;
}

BoundPair Rbfs::current_bounds() {
    std::optional<Cost> frontier = frontier_min_f();
    if (frontier) {
        const Cost candidate = std::min(*frontier, upper());
        if (candidate.is_finite())
            lower_floor_ = std::max(lower_floor_, candidate);
        frontier = lower_floor_;
    }
    return error_bound(result_.incumbent ? std::optional<Cost>(upper()) : std::nullopt, frontier, w_, false);
}

void Rbfs::emit(bool improved, bool final) {
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
    e.weight = w_;
    opts_.sink(e);
}

SearchResult Rbfs::finish(SearchStatus status) {
    result_.status = status;
    result_.stats.wall_time = elapsed();
    if (status == SearchStatus::Converged)
        result_.bounds = error_bound(upper(), std::nullopt, w_, false);
    else
        result_.bounds = current_bounds();
    emit(false, true);
    return std::move(result_);
}

SearchResult Rbfs::run() {
    const StateId s0 = space_.start();
    Frame root;
    root.state = s0;
    root.g = Cost(0);
    root.h = space_.heuristic(s0);
    root.F = root.g + root.h;
    root.Fp = priority_key(root.g, root.h, w_);
    root.bound = Key::infinity();
    root.hash = mix(raw(s0));
    ++result_.stats.generated;

    if (anytime() && space_.is_goal(s0)) {
        set_incumbent({s0}, Cost(0));
        improved_pending_ = false;
        result_.stats.stored = 1;
        emit(true, false);
        return finish(SearchStatus::Converged);
    }

    stack_.push_back(std::move(root));
    ++result_.stats.recursive_calls;
    std::optional<Backup> returned;

    while (!stack_.empty()) {
        Frame &top = stack_.back();
        if (!top.expanded) {
            if (!anytime() && space_.is_goal(top.state)) {
                count_expansion(top);
                set_incumbent(stack_path(), top.g);
                improved_pending_ = false;
                emit(true, false);
                return finish(w_.is_unit() ? SearchStatus::Converged : SearchStatus::Solved);
            }
            if (limits_exceeded())
                return finish(SearchStatus::Interrupted);
            expand(top);
        } else if (returned) {
            Child &n1 = top.children.front();
            n1.F = returned->F;
            n1.Fp = returned->Fp;
            returned.reset();
            normalize(top);
            sort_children(top);
        }

        Frame &cur = stack_.back();
        if (keep_going(cur)) {
            const Child n1 = cur.children.front();
            Frame next;
            next.state = n1.state;
            next.g = n1.g;
            next.h = n1.h;
            next.F = n1.F;
            next.Fp = n1.Fp;
            next.bound = child_bound(cur);
            next.hash = mix(cur.hash ^ mix(raw(n1.state)));
            stack_.push_back(std::move(next));
            ++result_.stats.recursive_calls;
            continue;
        }
        returned = backed_up(cur);
        stored_now_ -= cur.children.size();
        stack_.pop_back();
    }

    if (result_.incumbent)
        return finish(SearchStatus::Converged);
    return finish(SearchStatus::NoSolution);
}

} // namespace

SearchResult rbfs_weighted(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts) {
    return Rbfs(space, Variant::Weighted, w, opts).run();
}

SearchResult wrbfs(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts) {
    return Rbfs(space, Variant::Wrbfs, w, opts).run();
}

SearchResult anytime_wrbfs(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts) {
    return Rbfs(space, Variant::AnytimeWrbfs, w, opts).run();
}

SearchResult anytime_rbfs_weighted(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts) {
    return Rbfs(space, Variant::AnytimeWeighted, w, opts).run();
}

} // namespace anytime
