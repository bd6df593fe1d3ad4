#ifndef ANYTIME_CORE_NODE_HPP
#define ANYTIME_CORE_NODE_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/search_space.hpp"
#include "anytime/core/weight.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace anytime {

class OpenList;

enum class NodeStatus : std::uint8_t { Open, Closed, Pruned };

struct NodeRecord {
    StateId state{};
    Cost g;
    Cost h;
    std::optional<StateId> parent;
    /// Cost of the edge parent -> state recorded when the parent pointer was set.
    Cost edge_cost;
    NodeStatus status = NodeStatus::Open;
    std::uint32_t times_expanded = 0;
    bool in_incons = false;

    Cost f() const { return g + h; }
    Key key(const WeightSpec &w) const { return priority_key(g, h, w); }
};

/// Per-state bookkeeping for best-first graph search.
class NodeTable {
public:
    NodeRecord *find(StateId s);
    const NodeRecord *find(StateId s) const;
    NodeRecord &insert(NodeRecord rec);
    bool erase(StateId s) { return records_.erase(s) > 0; }
    std::size_t size() const { return records_.size(); }
    void reserve(std::size_t n) { records_.reserve(n); }

    /// Path start..s following parent pointers.
    std::vector<StateId> path_to(StateId s) const;
    /// Sum of recorded edge costs along the parent chain of s.
    Cost chain_cost(StateId s) const;

    template <class Fn>
    void for_each(Fn &&fn) const {
        for (const auto &[id, rec] : records_)
            fn(rec);
    }

private:
    std::unordered_map<StateId, NodeRecord> records_;
};

/*
  Moves a Closed (or Pruned) record back to Open after a cheaper path to it
  was found, recomputing its key under `w`.  Returns false and leaves the
  record untouched when new_g does not improve on rec.g or the record is not
  closed; that case is a caller contract violation.
*/
[[nodiscard]] bool reopen(NodeRecord &rec, Cost new_g, StateId new_parent, Cost edge_cost, OpenList &open,
                          const WeightSpec &w);

} // namespace anytime

#endif
