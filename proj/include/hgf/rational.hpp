#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hgf {

// Small exact rational, always stored reduced with a positive denominator.
// Parameters of the hypergeometric functions have denominators dividing
// 4(p-1) or so, far from the int64 range; overflow is nonetheless checked.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    std::int64_t floor() const;
    bool is_integer() const { return den_ == 1; }

    // "r/s", or "r" when the denominator is 1.
    std::string to_string() const;

    // Accepts "r/s", "-r/s" and plain integers. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Fractional part <x> = x - floor(x), in [0, 1).
Rational frac(const Rational& x);

}  // namespace hgf
