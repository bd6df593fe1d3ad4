#include "anytime/core/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace anytime {

namespace {

using u128 = unsigned __int128;

std::uint64_t narrow(u128 v) {
    if (v > static_cast<u128>(UINT64_MAX))
        throw std::overflow_error("rational component overflow");
    return static_cast<std::uint64_t>(v);
}

Rational reduce(u128 num, u128 den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    u128 a = num, b = den;
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    if (a == 0)
        a = 1;
    return Rational(narrow(num / a), narrow(den / a));
}

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    return v;
}

} // namespace

Rational::Rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    std::uint64_t g = std::gcd(num, den);
    if (g == 0)
        g = 1;
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_u64(text.substr(0, slash), text), parse_u64(text.substr(slash + 1), text));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (frac_part.empty() || frac_part.size() > 18)
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        std::uint64_t den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i)
            den *= 10;
        std::uint64_t ip = int_part.empty() ? 0 : parse_u64(int_part, text);
        std::uint64_t fp = parse_u64(frac_part, text);
        return reduce(static_cast<u128>(ip) * den + fp, den);
    }
    return Rational(parse_u64(text, text), 1);
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal(int digits) const {
    u128 scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    u128 scaled = (static_cast<u128>(num_) * scale * 2 + den_) / (static_cast<u128>(den_) * 2);
    u128 ip = scaled / scale;
    u128 fp = scaled % scale;
    std::string out = std::to_string(static_cast<std::uint64_t>(ip));
    if (digits > 0) {
        std::string frac = std::to_string(static_cast<std::uint64_t>(fp));
        out += '.';
        out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    u128 lhs = static_cast<u128>(a.num_) * b.den_;
    u128 rhs = static_cast<u128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

Rational operator+(const Rational &a, const Rational &b) {
    return reduce(static_cast<u128>(a.num_) * b.den_ + static_cast<u128>(b.num_) * a.den_,
                  static_cast<u128>(a.den_) * b.den_);
}

Rational saturating_sub(const Rational &a, const Rational &b) {
    u128 lhs = static_cast<u128>(a.num_) * b.den_;
    u128 rhs = static_cast<u128>(b.num_) * a.den_;
    if (lhs <= rhs)
        return Rational(0, 1);
    return reduce(lhs - rhs, static_cast<u128>(a.den_) * b.den_);
}

Rational operator*(const Rational &a, const Rational &b) {
    return reduce(static_cast<u128>(a.num_) * b.num_, static_cast<u128>(a.den_) * b.den_);
}

} // namespace anytime
