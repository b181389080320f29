#include "swm/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace swm {

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw PreconditionError("Rational: zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw PreconditionError("Rational: zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
        throw PreconditionError("not a rational number: '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n.front() == '+') {
        n.erase(0, 1);
    }
    const BigInt d(std::string{den});
    if (d == 0) {
        throw PreconditionError("rational with zero denominator: '" + std::string(text) + "'");
    }
    return {BigInt(n), d};
}

Rational Rational::from_double(double x)
{
    if (!std::isfinite(x)) {
        throw PreconditionError("Rational::from_double: non-finite value");
    }
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

std::string Rational::to_string() const
{
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::int64_t Rational::floor_int() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    if (!q.fits_slong_p()) {
        throw std::overflow_error("Rational::floor_int: out of range");
    }
    return q.get_si();
}

std::int64_t Rational::ceil_int() const
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    if (!q.fits_slong_p()) {
        throw std::overflow_error("Rational::ceil_int: out of range");
    }
    return q.get_si();
}

Rational& Rational::operator+=(const Rational& o)
{
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
}

Rational& Rational::add_mul(const Rational& a, const Rational& b)
{
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
    return *this;
}

Rational operator-(const Rational& a)
{
    Rational r;
    mpq_neg(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        return Rational(1) / pow(base, -exponent);
    }
    BigInt n;
    BigInt d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return {n, d};
}

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    const std::int64_t g = std::gcd(a, b);
    const __int128 l = static_cast<__int128>(a / g) * b;
    if (l > std::numeric_limits<std::int64_t>::max() || l < -std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error("lcm64: overflow");
    }
    return static_cast<std::int64_t>(l < 0 ? -l : l);
}

BigInt factorial(long n)
{
    if (n < 0) {
        throw PreconditionError("factorial of a negative number");
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(long a, long b)
{
    if (b < 0) {
        return 0;
    }
    BigInt r;
    if (a >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return r;
    }
    // C(a, b) = (-1)^b C(b - a - 1, b) for negative a.
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b - a - 1), static_cast<unsigned long>(b));
    return (b % 2 == 0) ? r : BigInt(-r);
}

Rational binomial(const Rational& a, long b)
{
    if (b < 0) {
        return 0;
    }
    Rational r(1);
    for (long k = 0; k < b; ++k) {
        r *= a - Rational(k);
    }
    return r / Rational(factorial(b));
}

} // namespace swm
