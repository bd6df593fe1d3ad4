#ifndef ANYTIME_CORE_COST_HPP
#define ANYTIME_CORE_COST_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace anytime {

/// Raised whenever cost or key arithmetic would leave the representable range.
class CostOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace detail {

/*
  Non-negative integer extended with a distinguished infinity.  Infinity
  compares greater than every finite value and absorbs addition.  Finite
  arithmetic that would reach the infinity encoding throws CostOverflow.
*/
template <class Tag>
class ExtendedValue {
public:
    using value_type = std::uint64_t;

    constexpr ExtendedValue() = default;
    constexpr explicit ExtendedValue(value_type v) : value_(v) {
        if (v == kInfinity)
            throw CostOverflow(std::string(Tag::name) + " value collides with infinity");
    }

    static constexpr ExtendedValue infinity() {
        ExtendedValue c;
        c.value_ = kInfinity;
        return c;
    }

    constexpr bool is_finite() const { return value_ != kInfinity; }
    constexpr bool is_infinite() const { return value_ == kInfinity; }

    constexpr value_type value() const {
        if (!is_finite())
            throw std::logic_error(std::string("value() of infinite ") + Tag::name);
        return value_;
    }

    friend constexpr auto operator<=>(ExtendedValue, ExtendedValue) = default;

    friend constexpr ExtendedValue operator+(ExtendedValue a, ExtendedValue b) {
        if (a.is_infinite() || b.is_infinite())
            return infinity();
        value_type out = 0;
        if (__builtin_add_overflow(a.value_, b.value_, &out) || out == kInfinity)
            throw CostOverflow(std::string(Tag::name) + " addition overflow");
        ExtendedValue r;
        r.value_ = out;
        return r;
    }

    ExtendedValue &operator+=(ExtendedValue other) { return *this = *this + other; }

    /// Finite scaling by a non-negative factor; infinity stays infinity.
    friend constexpr ExtendedValue scale(ExtendedValue a, value_type factor) {
        if (a.is_infinite())
            return infinity();
        value_type out = 0;
        if (__builtin_mul_overflow(a.value_, factor, &out) || out == kInfinity)
            throw CostOverflow(std::string(Tag::name) + " multiplication overflow");
        ExtendedValue r;
        r.value_ = out;
        return r;
    }

    /// Subtraction that requires a >= b and finite b.
    friend constexpr ExtendedValue difference(ExtendedValue a, ExtendedValue b) {
        if (b.is_infinite())
            throw std::logic_error(std::string("subtracting infinite ") + Tag::name);
        if (a.is_infinite())
            return infinity();
        if (a.value_ < b.value_)
            throw std::logic_error(std::string(Tag::name) + " difference would be negative");
        ExtendedValue r;
        r.value_ = a.value_ - b.value_;
        return r;
    }

    friend std::ostream &operator<<(std::ostream &os, ExtendedValue c) {
        if (c.is_infinite())
            return os << "inf";
        return os << c.value_;
    }

    std::string str() const { return is_finite() ? std::to_string(value_) : std::string("inf"); }

private:
    static constexpr value_type kInfinity = std::numeric_limits<value_type>::max();
    value_type value_ = 0;
};

struct CostTag {
    static constexpr const char *name = "Cost";
};
struct KeyTag {
    static constexpr const char *name = "Key";
};

} // namespace detail

/// Path cost in domain units (tile moves, alignment column costs, edge weights).
using Cost = detail::ExtendedValue<detail::CostTag>;

/// Priority key in weight-scaled units: q*g + p*h for a weight w = p/q.
using Key = detail::ExtendedValue<detail::KeyTag>;

inline constexpr Cost operator""_c(unsigned long long v) { return Cost(v); }

} // namespace anytime

#endif
