#include "anytime/core/node.hpp"

#include "anytime/core/open_list.hpp"

#include <algorithm>
#include <stdexcept>

namespace anytime {

NodeRecord *NodeTable::find(StateId s) {
    auto it = records_.find(s);
    return it == records_.end() ? nullptr : &it->second;
}

const NodeRecord *NodeTable::find(StateId s) const {
    auto it = records_.find(s);
    return it == records_.end() ? nullptr : &it->second;
}

NodeRecord &NodeTable::insert(NodeRecord rec) {
    auto [it, inserted] = records_.emplace(rec.state, rec);
    if (!inserted)
        throw std::logic_error("duplicate node record");
    return it->second;
}

std::vector<StateId> NodeTable::path_to(StateId s) const {
    std::vector<StateId> path;
    std::optional<StateId> cur = s;
    while (cur) {
        const NodeRecord *rec = find(*cur);
        if (rec == nullptr)
            throw std::logic_error("broken parent chain");
        path.push_back(*cur);
        cur = rec->parent;
        if (path.size() > records_.size() + 1)
            throw std::logic_error("cycle in parent chain");
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Cost NodeTable::chain_cost(StateId s) const {
    Cost total(0);
    std::optional<StateId> cur = s;
    std::size_t steps = 0;
    while (cur) {
        const NodeRecord *rec = find(*cur);
        if (rec == nullptr)
            throw std::logic_error("broken parent chain");
        if (rec->parent)
            total += rec->edge_cost;
        cur = rec->parent;
        if (++steps > records_.size() + 1)
            throw std::logic_error("cycle in parent chain");
    }
    return total;
}

bool reopen(NodeRecord &rec, Cost new_g, StateId new_parent, Cost edge_cost, OpenList &open, const WeightSpec &w) {
    if (rec.status == NodeStatus::Open || !(new_g < rec.g))
        return false;
    rec.g = new_g;
    rec.parent = new_parent;
    rec.edge_cost = edge_cost;
    rec.status = NodeStatus::Open;
    open.push(OpenEntry{rec.state, rec.key(w), rec.h, rec.f()});
    return true;
}

} // namespace anytime
