#include "anytime/search/result.hpp"

#include <algorithm>
#include <stdexcept>

namespace anytime {

std::string_view to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Converged:
        return "converged";
    case SearchStatus::Solved:
        return "solved";
    case SearchStatus::Interrupted:
        return "interrupted";
    case SearchStatus::NoSolution:
        return "no_solution";
    }
    return "unknown";
}

bool IncumbentTrace::strictly_decreasing() const {
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (!(entries[i].cost < entries[i - 1].cost))
            return false;
    return true;
}

std::vector<Cost> IncumbentTrace::costs() const {
    std::vector<Cost> out;
    out.reserve(entries.size());
    for (const auto &e : entries)
        out.push_back(e.cost);
    return out;
}

BoundPair error_bound(std::optional<Cost> incumbent_cost, std::optional<Cost> open_min_f, const WeightSpec &w,
                      bool weight_bound_holds) {
    BoundPair b;
    if (!incumbent_cost) {
        b.upper = Cost::infinity();
        b.lower = open_min_f.value_or(Cost::infinity());
        return b;
    }
    const Cost upper = *incumbent_cost;
    b.upper = upper;
    b.lower = open_min_f ? std::min(*open_min_f, upper) : upper;
    b.difference = difference(upper, b.lower);
    if (b.lower == upper) {
        b.ratio = Rational::integer(1);
    } else if (b.lower.value() > 0) {
        b.ratio = Rational(upper.value(), b.lower.value());
    }
    b.reported_ratio = b.ratio;
    if (weight_bound_holds) {
        const Rational wv = w.value();
        if (!b.reported_ratio || wv < *b.reported_ratio)
            b.reported_ratio = wv;
    }
    return b;
}

Cost path_cost(const SearchSpace &space, const std::vector<StateId> &path) {
    Cost total(0);
    std::vector<Successor> succ;
    for (std::size_t i = 1; i < path.size(); ++i) {
        space.successors(path[i - 1], succ);
        Cost best = Cost::infinity();
        for (const auto &s : succ)
            if (s.state == path[i])
                best = std::min(best, s.cost);
        if (best.is_infinite())
            throw std::invalid_argument("path step " + std::to_string(i) + " is not an edge");
        total += best;
    }
    return total;
}

} // namespace anytime
