#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace swm {

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using BigInt = mpz_class;

/// Exact rational number of unbounded size.
///
/// A thin value type over GMP's mpq_t. Unlike mpq_class it has no expression
/// templates, so it can be used as an Eigen scalar and in generic code that
/// expects `a * b` to have type `Rational`.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(const BigInt& n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& q) : v_(q) {}

    /// Parses "a", "-a" or "a/b" (no whitespace). Throws PreconditionError.
    static Rational parse(std::string_view text);
    /// Exact value of a finite double.
    static Rational from_double(double x);

    [[nodiscard]] BigInt num() const { return v_.get_num(); }
    [[nodiscard]] BigInt den() const { return v_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return v_.get_d(); }
    /// "num/den", or "num" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] const mpq_class& get() const { return v_; }

    /// Largest integer <= value; must fit in int64.
    [[nodiscard]] std::int64_t floor_int() const;
    [[nodiscard]] std::int64_t ceil_int() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);
    /// this += a * b without a temporary Rational.
    Rational& add_mul(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, long exponent);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

BigInt factorial(long n);
/// C(a, b) with the falling-factorial convention a(a-1)...(a-b+1)/b!, valid for
/// any integer a (including negative); zero for b < 0.
BigInt binomial(long a, long b);
/// Same convention with a rational upper argument.
Rational binomial(const Rational& a, long b);

} // namespace swm
