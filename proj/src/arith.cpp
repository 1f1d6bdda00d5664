#include "seshadri/arith.hpp"

#include <cctype>
#include <vector>

#include "seshadri/errors.hpp"

namespace seshadri {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::reduce(const Integer& num, const Integer& den) {
    if (den == 0) throw InputError("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num_part = body.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (negative) num = -num;
    return reduce(num, den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
    mpf_class f(0, 512);
    f = value_;
    std::vector<char> buf(256);
    const int len = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant_digits, f.get_mpf_t());
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string to_string(const Integer& v) { return v.get_str(); }

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    if (!all_digits(body)) throw InputError("malformed integer '" + std::string(text) + "'");
    return Integer(std::string(text), 10);
}

std::optional<Integer> exact_isqrt(const Integer& v) {
    if (v < 0) return std::nullopt;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
    if (root * root != v) return std::nullopt;
    return root;
}

std::optional<Rational> is_perfect_square(const Rational& v) {
    if (v.sign() < 0) throw InputError("square root of a negative rational");
    // Lowest terms: p/q is a rational square iff both p and q are squares.
    auto num = exact_isqrt(v.num());
    if (!num) return std::nullopt;
    auto den = exact_isqrt(v.den());
    if (!den) return std::nullopt;
    return Rational::reduce(*num, *den);
}

Integer lcm_of_denominators(std::span<const Rational> values) {
    Integer result = 1;
    for (const auto& v : values) result = lcm(result, v.den());
    return result;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace seshadri
