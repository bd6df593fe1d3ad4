#ifndef ANYTIME_SEARCH_BEST_FIRST_HPP
#define ANYTIME_SEARCH_BEST_FIRST_HPP

#include "anytime/core/open_list.hpp"
#include "anytime/core/search_space.hpp"
#include "anytime/core/weight.hpp"
#include "anytime/search/result.hpp"

namespace anytime {

struct BestFirstOptions {
    SearchLimits limits;
    TieBreak tie = TieBreak::LeastH;
    EmissionSink sink;
    ExpansionObserver on_expand;
    /// When max_stored is hit, first drop Open entries with f >= f(incumbent) before interrupting.
    bool purge_on_memory_pressure = true;
};

/// A*: goal test at selection, closed nodes reopened on g improvement.
SearchResult astar(const SearchSpace &space, const BestFirstOptions &opts = {});

/// Weighted A*: stops at the first goal selected under g + w*h ordering.
SearchResult weighted_astar(const SearchSpace &space, const WeightSpec &w, const BestFirstOptions &opts = {});

/*
  Anytime Weighted A*.  Expands in g + w*h order, tests goals at generation,
  never inserts successors whose f reaches the incumbent cost and skips popped
  nodes whose f does.  Runs until Open is exhausted, at which point the last
  incumbent is optimal.
*/
SearchResult anytime_wastar(const SearchSpace &space, const WeightSpec &w, const BestFirstOptions &opts = {});

/*
  Enhanced A*: unweighted A* that never inserts nodes with f >= upper_bound.
  With integer costs pass (known solution cost + 1) to keep an optimal goal
  whose f equals the known cost.
*/
SearchResult enhanced_astar(const SearchSpace &space, Cost upper_bound, const BestFirstOptions &opts = {});

/*
  ARA*: weighted search that never reexpands a node directly; a cheaper path
  to an expanded node parks it in an INCONS set instead.  Each time an improved solution is selected the weight
  drops by `step` (never below 1), INCONS is merged into Open and all keys are
  recomputed.  Upper-bound pruning as in anytime_wastar.
*/
SearchResult ara_star(const SearchSpace &space, const WeightSpec &w0, const Rational &step,
                      const BestFirstOptions &opts = {});

} // namespace anytime

#endif
