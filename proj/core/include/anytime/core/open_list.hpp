#ifndef ANYTIME_CORE_OPEN_LIST_HPP
#define ANYTIME_CORE_OPEN_LIST_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/search_space.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace anytime {

/// Ordering among entries with equal key.  FIFO always applies last.
enum class TieBreak : std::uint8_t { LeastH, Fifo };

struct OpenEntry {
    StateId state{};
    Key key;
    Cost h;
    Cost f;
};

/*
  Indexed binary heap ordered by (key, h, insertion sequence) with a
  membership index by StateId.  push() on a state already present replaces
  its entry, so a state is never stored twice.  A second index counts entries
  per f value so the least f over the list is available at any time.
*/
class OpenList {
public:
    explicit OpenList(TieBreak tie = TieBreak::LeastH) : tie_(tie) {}

    /// Inserts the entry, or replaces the existing entry for the same state.
    void push(const OpenEntry &e);
    OpenEntry pop_min();
    const OpenEntry &top() const;

    bool contains(StateId s) const { return where_.count(s) != 0; }
    std::optional<OpenEntry> find(StateId s) const;
    bool erase(StateId s);

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

    /// Least f among stored entries; infinity when empty.
    Cost min_f() const;
    /// Least key among stored entries; infinity when empty.
    Key min_key() const;

    /// Recomputes every key with `rekey` and re-heapifies (weight changes).
    void rebuild(const std::function<Key(const OpenEntry &)> &rekey);

    /// Removes all entries matching pred; returns the number removed.
    std::size_t erase_if(const std::function<bool(const OpenEntry &)> &pred);

    /// Full structural check of heap order, membership and f-index agreement.
    bool check_invariants() const;

    /// Entries in heap storage order (not sorted).
    template <class Fn>
    void for_each(Fn &&fn) const {
        for (const auto &slot : heap_)
            fn(slot.entry);
    }

private:
    struct Slot {
        OpenEntry entry;
        std::uint64_t seq;
    };

    bool before(const Slot &a, const Slot &b) const;
    void place(std::size_t i, Slot slot);
    void sift_up(std::size_t i);
    void sift_down(std::size_t i);
    void remove_at(std::size_t i);
    void add_f(Cost f);
    void drop_f(Cost f);

    TieBreak tie_;
    std::vector<Slot> heap_;
    std::unordered_map<StateId, std::size_t> where_;
    std::map<Cost, std::size_t> f_counts_;
    std::uint64_t next_seq_ = 0;
};

} // namespace anytime

#endif
