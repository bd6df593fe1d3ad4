#ifndef ANYTIME_CORE_WEIGHT_HPP
#define ANYTIME_CORE_WEIGHT_HPP

#include "anytime/core/cost.hpp"
#include "anytime/core/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace anytime {

/*
  Heuristic weight w = p/q >= 1 kept as an exact fraction.  Search keys are
  computed as q*g + p*h, which orders nodes exactly like g + w*h without any
  rounding; this is what keeps tie-breaking reproducible across platforms.
*/
class WeightSpec {
public:
    /// Unit weight (plain A* ordering).
    WeightSpec() = default;
    /// Throws std::invalid_argument unless p >= q >= 1.
    WeightSpec(std::uint64_t p, std::uint64_t q);
    explicit WeightSpec(const Rational &w);

    static WeightSpec parse(std::string_view text) { return WeightSpec(Rational::parse(text)); }

    std::uint64_t p() const { return p_; }
    std::uint64_t q() const { return q_; }

    Rational value() const { return Rational(p_, q_); }
    Rational epsilon() const { return Rational(p_ - q_, q_); }
    bool is_unit() const { return p_ == q_; }
    std::string str() const { return value().str(); }

    /// max(1, w - step); used by the decreasing-weight schedule.
    WeightSpec decreased_by(const Rational &step) const;

    friend bool operator==(const WeightSpec &, const WeightSpec &) = default;

private:
    std::uint64_t p_ = 1;
    std::uint64_t q_ = 1;
};

/// q*g + p*h.  Throws CostOverflow; requires finite g and h.
Key priority_key(Cost g, Cost h, const WeightSpec &w);

/// Unweighted f = g + h expressed in key units (q*(g+h)).
Key scaled_f(Cost f, const WeightSpec &w);

/// Dynamic weighted value g + w*(F - g) in key units; infinite when F or g is.
Key dynamic_key(Cost g, Cost stored_f, const WeightSpec &w);

} // namespace anytime

#endif
