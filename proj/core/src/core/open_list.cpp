#include "anytime/core/open_list.hpp"

#include <stdexcept>
#include <utility>

namespace anytime {

bool OpenList::before(const Slot &a, const Slot &b) const {
    if (a.entry.key != b.entry.key)
        return a.entry.key < b.entry.key;
    if (tie_ == TieBreak::LeastH && a.entry.h != b.entry.h)
        return a.entry.h < b.entry.h;
    return a.seq < b.seq;
}

void OpenList::place(std::size_t i, Slot slot) {
    where_[slot.entry.state] = i;
    heap_[i] = std::move(slot);
}

void OpenList::sift_up(std::size_t i) {
    Slot moving = heap_[i];
    while (i > 0) {
        std::size_t parent = (i - 1) / 2;
        if (!before(moving, heap_[parent]))
            break;
        place(i, heap_[parent]);
        i = parent;
    }
    place(i, std::move(moving));
}

void OpenList::sift_down(std::size_t i) {
    Slot moving = heap_[i];
    const std::size_t n = heap_.size();
    while (true) {
        std::size_t child = 2 * i + 1;
        if (child >= n)
            break;
        if (child + 1 < n && before(heap_[child + 1], heap_[child]))
            ++child;
        if (!before(heap_[child], moving))
            break;
        place(i, heap_[child]);
        i = child;
    }
    place(i, std::move(moving));
}

void OpenList::add_f(Cost f) { ++f_counts_[f]; }

void OpenList::drop_f(Cost f) {
    auto it = f_counts_.find(f);
    if (it == f_counts_.end())
        throw std::logic_error("open list f-index out of sync");
    if (--it->second == 0)
        f_counts_.erase(it);
}

void OpenList::push(const OpenEntry &e) {
    if (auto it = where_.find(e.state); it != where_.end()) {
        std::size_t i = it->second;
        drop_f(heap_[i].entry.f);
        add_f(e.f);
        heap_[i] = Slot{e, next_seq_++};
        // Replacement may move the entry either way.
        sift_up(i);
        sift_down(where_.at(e.state));
        return;
    }
    heap_.push_back(Slot{e, next_seq_++});
    where_[e.state] = heap_.size() - 1;
    add_f(e.f);
    sift_up(heap_.size() - 1);
}

const OpenEntry &OpenList::top() const {
    if (heap_.empty())
        throw std::logic_error("top() on empty open list");
    return heap_.front().entry;
}

void OpenList::remove_at(std::size_t i) {
    drop_f(heap_[i].entry.f);
    where_.erase(heap_[i].entry.state);
    const std::size_t last = heap_.size() - 1;
    if (i != last) {
        heap_[i] = std::move(heap_[last]);
        heap_.pop_back();
        const StateId moved = heap_[i].entry.state;
        where_[moved] = i;
        sift_up(i);
        sift_down(where_.at(moved));
    } else {
        heap_.pop_back();
    }
}

OpenEntry OpenList::pop_min() {
    if (heap_.empty())
        throw std::logic_error("pop_min() on empty open list");
    OpenEntry out = heap_.front().entry;
    remove_at(0);
    return out;
}

std::optional<OpenEntry> OpenList::find(StateId s) const {
    auto it = where_.find(s);
    if (it == where_.end())
        return std::nullopt;
    return heap_[it->second].entry;
}

bool OpenList::erase(StateId s) {
    auto it = where_.find(s);
    if (it == where_.end())
        return false;
    remove_at(it->second);
    return true;
}

Cost OpenList::min_f() const { return f_counts_.empty() ? Cost::infinity() : f_counts_.begin()->first; }

Key OpenList::min_key() const { return heap_.empty() ? Key::infinity() : heap_.front().entry.key; }

void OpenList::rebuild(const std::function<Key(const OpenEntry &)> &rekey) {
    for (auto &slot : heap_)
        slot.entry.key = rekey(slot.entry);
    for (std::size_t i = heap_.size() / 2; i-- > 0;)
        sift_down(i);
    for (std::size_t i = 0; i < heap_.size(); ++i)
        where_[heap_[i].entry.state] = i;
}

std::size_t OpenList::erase_if(const std::function<bool(const OpenEntry &)> &pred) {
    std::vector<Slot> kept;
    kept.reserve(heap_.size());
    std::size_t removed = 0;
    for (auto &slot : heap_) {
        if (pred(slot.entry)) {
            drop_f(slot.entry.f);
            where_.erase(slot.entry.state);
            ++removed;
        } else {
            kept.push_back(std::move(slot));
        }
    }
    heap_ = std::move(kept);
    for (std::size_t i = 0; i < heap_.size(); ++i)
        where_[heap_[i].entry.state] = i;
    for (std::size_t i = heap_.size() / 2; i-- > 0;)
        sift_down(i);
    return removed;
}

bool OpenList::check_invariants() const {
    if (where_.size() != heap_.size())
        return false;
    std::map<Cost, std::size_t> counts;
    for (std::size_t i = 0; i < heap_.size(); ++i) {
        auto it = where_.find(heap_[i].entry.state);
        if (it == where_.end() || it->second != i)
            return false;
        if (i > 0 && before(heap_[i], heap_[(i - 1) / 2]))
            return false;
        ++counts[heap_[i].entry.f];
    }
    return counts == f_counts_;
}

} // namespace anytime
