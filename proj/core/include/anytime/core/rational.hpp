#ifndef ANYTIME_CORE_RATIONAL_HPP
#define ANYTIME_CORE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace anytime {

/// Exact non-negative fraction, always stored in lowest terms with den > 0.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::uint64_t num, std::uint64_t den);

    static Rational integer(std::uint64_t v) { return Rational(v, 1); }

    /// Accepts "P/Q", an integer, or a finite decimal such as "1.3".
    static Rational parse(std::string_view text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    /// Fixed-point decimal rendering with `digits` fractional digits, rounded half up.
    std::string decimal(int digits) const;

    friend bool operator==(const Rational &, const Rational &) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    friend Rational operator+(const Rational &a, const Rational &b);
    /// Saturates at zero.
    friend Rational saturating_sub(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

} // namespace anytime

#endif
