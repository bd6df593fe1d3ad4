#ifndef ANYTIME_RBFS_RBFS_HPP
#define ANYTIME_RBFS_RBFS_HPP

#include "anytime/core/search_space.hpp"
#include "anytime/core/weight.hpp"
#include "anytime/search/result.hpp"

namespace anytime {

struct RbfsOptions {
    SearchLimits limits;
    EmissionSink sink;
    ExpansionObserver on_expand;
    /// Never generate the state the current node was reached from.
    bool exclude_parent = true;
    /// Track distinct expanded states (costs memory proportional to states seen).
    bool track_distinct = true;
};

/*
  Recursive best-first search.  All variants are tree searches run on an
  explicit stack; `recursive_calls` counts invocations, `stored` the peak
  number of child entries held across the stack.

  rbfs_weighted          backs up weighted values F' = g + w*h and stops at
                         the first goal expanded.
  wrbfs                  backs up unweighted F and orders children by
                         g + w*(F - g); stops at the first goal expanded.
  anytime_wrbfs          wrbfs with goal test at generation, incumbent
                         pruning and continuation until the stack empties.
  anytime_rbfs_weighted  orders by backed-up F' but also backs up F for
                         pruning and the lower bound.
*/
SearchResult rbfs_weighted(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts = {});
SearchResult wrbfs(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts = {});
SearchResult anytime_wrbfs(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts = {});
SearchResult anytime_rbfs_weighted(const SearchSpace &space, const WeightSpec &w, const RbfsOptions &opts = {});

} // namespace anytime

#endif
