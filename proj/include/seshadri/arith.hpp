#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace seshadri {

using Integer = mpz_class;

/// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}
    Rational(const Integer& v) : value_(v) {}

    /// Builds num/den in lowest terms. Throws InputError when den == 0.
    static Rational reduce(const Integer& num, const Integer& den);

    /// Parses "p/q", "p" and an optional leading minus sign.
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    Integer floor() const;
    /// Representative of this value mod 1 in [0, 1).
    Rational frac() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    /// Decimal rendering for display only, with the given significant digits.
    std::string to_decimal(int significant_digits = 12) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::string to_string(const Integer& v);
Integer parse_integer(std::string_view text);

/// Integer square root of a non-negative value, or nullopt if it is not a square.
std::optional<Integer> exact_isqrt(const Integer& v);

/// Exact square root of v when v is the square of a rational. Throws on v < 0.
std::optional<Rational> is_perfect_square(const Rational& v);

/// Least n >= 1 making n*v integral for every v; 1 for an empty list.
Integer lcm_of_denominators(std::span<const Rational> values);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace seshadri
