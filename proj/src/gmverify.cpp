#include "swm/gmverify.hpp"

#include <stdexcept>

#include "swm/zhupoly.hpp"

namespace swm {

namespace {

void check_m(long m)
{
    if (m < 1) {
        throw PreconditionError("m must be a positive integer, got " + std::to_string(m));
    }
}

// binom(a, b) for b = 0..n-1 (zero for b < 0 is handled by the caller)
std::vector<BigInt> binomial_row(long a, long n)
{
    std::vector<BigInt> row;
    row.reserve(n);
    for (long b = 0; b < n; ++b) {
        row.push_back(binomial(a, b));
    }
    return row;
}

VerificationReport with_m(VerificationReport r, long m)
{
    r.params = {{"m", std::to_string(m)}};
    return r;
}

} // namespace

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

Rational gm_value(long m, long t)
{
    check_m(m);
    const long p = 2 * m + 1;
    const long width = 4 * p + 4;
    const auto c_p = binomial_row(p, p + 1);
    const auto c_neg = binomial_row(-p, width);
    const auto c_a = binomial_row(2 * m - t, width);
    const auto c_t = binomial_row(t, width);
    auto at = [](const std::vector<BigInt>& row, long b) -> const BigInt& {
        static const BigInt zero(0);
        return b < 0 ? zero : row.at(b);
    };

    BigInt sum = 0;
    BigInt term;
    for (long l = 1; l <= p; ++l) {
        for (long i = 0; i <= l - 1; ++i) {
            for (long j = 0; j <= p + i - l; ++j) {
                const BigInt& t4 = at(c_t, i - j - l + p);
                if (t4 == 0) {
                    continue;
                }
                for (long k = 0; k <= l - 1 - i; ++k) {
                    term = c_p[l] * c_neg[j];
                    term *= c_neg[k];
                    term *= at(c_a, j + k + p);
                    term *= t4;
                    term *= at(c_t, l - k - 1 - i);
                    if ((j + k + l) % 2 == 0) {
                        sum += term;
                    } else {
                        sum -= term;
                    }
                }
            }
        }
    }
    return Rational(sum);
}

RatPoly gm_poly(long m)
{
    check_m(m);
    std::vector<std::pair<Rational, Rational>> pts;
    for (long t = 0; t <= 4 * m + 1; ++t) {
        pts.emplace_back(t, gm_value(m, t));
    }
    RatPoly g = interpolate<Rational>(pts);
    for (long t = 4 * m + 2; t <= 4 * m + 3; ++t) {
        if (g(Rational(t)) != gm_value(m, t)) {
            throw std::logic_error("G_m exceeds degree 4m+1 at m = " + std::to_string(m));
        }
    }
    return g;
}

RatPoly gm_conjectured(long m)
{
    check_m(m);
    const Rational c(binomial(2 * m, m));
    return (c * c) * binomial_poly(Rational(m), 4 * m + 1);
}

VerificationReport verify_gm_conjecture(long m)
{
    return with_m(timed([&] {
                      return compare_polys("gm_conjecture", gm_poly(m), gm_conjectured(m));
                  }),
                  m);
}

VerificationReport gm_mod_p(long m)
{
    check_m(m);
    const long p = 2 * m + 1;
    if (!is_prime(p)) {
        throw PreconditionError("mod-p argument requires 2m+1 prime, got " + std::to_string(p));
    }
    return with_m(timed([&] {
                      const Rational g = gm_value(m, 3 * m + 1);
                      const BigInt P(p);
                      if (BigInt(g.den() % P) == 0) {
                          throw std::logic_error("G_m(3m+1) is not p-integral");
                      }
                      BigInt inv;
                      const BigInt den = g.den();
                      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
                      BigInt res = (g.num() * inv) % P;
                      if (res < 0) {
                          res += P;
                      }
                      const Rational order(3 * m + 1);
                      if (res != 1) {
                          return make_fail("gm_mod_p", order, {order, Rational(res), 1});
                      }
                      return make_pass("gm_mod_p", order);
                  }),
                  m);
}

Rational extract_Am(long m) { return gm_value(m, 3 * m + 1); }

ReportList verify_gm_suite(long m)
{
    ReportList out;
    out.push_back(verify_gm_conjecture(m));
    out.push_back(with_m(timed([&] {
                             const Rational a = extract_Am(m);
                             const Rational c(binomial(2 * m, m));
                             const Rational order(3 * m + 1);
                             if (a != c * c) {
                                 return make_fail("gm_am", order, {order, a, c * c});
                             }
                             return make_pass("gm_am", order);
                         }),
                         m));
    if (is_prime(2 * m + 1)) {
        out.push_back(gm_mod_p(m));
    }
    return out;
}

} // namespace swm
