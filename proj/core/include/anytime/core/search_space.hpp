#ifndef ANYTIME_CORE_SEARCH_SPACE_HPP
#define ANYTIME_CORE_SEARCH_SPACE_HPP

#include "anytime/core/cost.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace anytime {

/// Opaque 64-bit state handle produced by a domain's canonical encoding.
enum class StateId : std::uint64_t {};

constexpr StateId state_id(std::uint64_t raw) { return static_cast<StateId>(raw); }
constexpr std::uint64_t raw(StateId s) { return static_cast<std::uint64_t>(s); }

struct Successor {
    StateId state;
    Cost cost;
};

/*
  The problem interface every search algorithm consumes.

  Implementations must guarantee a finite branching factor, edge costs >= 1,
  heuristic(s) >= 0 everywhere and heuristic(goal) = 0.  All bundled domains
  provide admissible heuristics and report so through is_admissible().
*/
class SearchSpace {
public:
    virtual ~SearchSpace() = default;

    virtual StateId start() const = 0;
    virtual bool is_goal(StateId s) const = 0;
    /// Appends the successors of s to out (out is cleared first).
    virtual void successors(StateId s, std::vector<Successor> &out) const = 0;
    virtual Cost heuristic(StateId s) const = 0;

    virtual bool is_admissible() const { return true; }
    virtual std::string describe(StateId s) const { return std::to_string(raw(s)); }
};

} // namespace anytime

#endif
