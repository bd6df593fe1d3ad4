#include "anytime/core/weight.hpp"

#include <stdexcept>

namespace anytime {

WeightSpec::WeightSpec(std::uint64_t p, std::uint64_t q) {
    if (q < 1 || p < q)
        throw std::invalid_argument("weight must satisfy p >= q >= 1, got " + std::to_string(p) + "/" +
                                    std::to_string(q));
    Rational r(p, q);
    p_ = r.num();
    q_ = r.den();
}

WeightSpec::WeightSpec(const Rational &w) : WeightSpec(w.num(), w.den()) {}

WeightSpec WeightSpec::decreased_by(const Rational &step) const {
    Rational next = saturating_sub(value(), step);
    if (next < Rational::integer(1))
        return WeightSpec();
    return WeightSpec(next);
}

Key priority_key(Cost g, Cost h, const WeightSpec &w) {
    if (!g.is_finite() || !h.is_finite())
        throw std::logic_error("priority_key requires finite g and h");
    return Key(scale(g, w.q()).value()) + Key(scale(h, w.p()).value());
}

Key scaled_f(Cost f, const WeightSpec &w) {
    if (f.is_infinite())
        return Key::infinity();
    return Key(scale(f, w.q()).value());
}

Key dynamic_key(Cost g, Cost stored_f, const WeightSpec &w) {
    if (g.is_infinite() || stored_f.is_infinite())
        return Key::infinity();
    // The stored F never drops below g for admissible backed-up values.
    Cost backed_h = difference(stored_f, g);
    return priority_key(g, backed_h, w);
}

} // namespace anytime
