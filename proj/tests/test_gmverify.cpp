#include <doctest.h>

#include "swm/gmverify.hpp"
#include "swm/zhupoly.hpp"

using swm::Rational;

namespace {

// Generalized binomials through the Rational falling factorial, summed with
// no table reuse.
Rational naive_gm(long m, long t)
{
    auto C = [](long a, long b) { return swm::binomial(Rational(a), b); };
    const long p = 2 * m + 1;
    Rational s = 0;
    for (long l = 1; l <= p; ++l) {
        for (long i = 0; i <= l - 1; ++i) {
            for (long j = 0; j <= p + i - l; ++j) {
                for (long k = 0; k <= l - 1 - i; ++k) {
                    const Rational term = C(p, l) * C(-p, j) * C(-p, k) * C(2 * m - t, j + k + p) *
                                          C(t, i - j - l + p) * C(t, l - k - 1 - i);
                    s += (j + k + l) % 2 == 0 ? term : -term;
                }
            }
        }
    }
    return s;
}

} // namespace

TEST_CASE("G_m values")
{
    CHECK(swm::gm_value(1, 4) == 4);
    CHECK(swm::gm_value(1, 0) == 0);
    CHECK(swm::BigInt(swm::gm_value(1, 4).num() % 3) == 1);
    for (long m = 1; m <= 2; ++m) {
        for (long t = -m - 2; t <= 4 * m + 3; ++t) {
            CHECK(swm::gm_value(m, t) == naive_gm(m, t));
        }
    }
    for (long m = 1; m <= 6; ++m) {
        for (long t = -m; t <= 3 * m; ++t) {
            CHECK(swm::gm_value(m, t) == 0);
        }
        CHECK(swm::gm_value(m, -m - 1) != 0);
        CHECK(swm::gm_value(m, 3 * m + 1).is_integer());
    }
}

TEST_CASE("G_m polynomial")
{
    const swm::RatPoly g1 = swm::gm_poly(1);
    CHECK(g1 == Rational(4) * swm::binomial_poly(Rational(1), 5));
    for (long m = 1; m <= 8; ++m) {
        const swm::RatPoly g = swm::gm_poly(m);
        CHECK(g.degree() == 4 * m + 1);
        CHECK(g.leading() > 0);
        CHECK(g(Rational(-m)) == 0);
        CHECK(g(Rational(4 * m + 2)) == swm::gm_value(m, 4 * m + 2));
        CHECK(g(Rational(-2 * m)) == swm::gm_value(m, -2 * m));
    }
}

TEST_CASE("conjecture and A_m")
{
    CHECK(swm::extract_Am(1) == 4);
    CHECK(swm::extract_Am(2) == 36);
    CHECK(swm::extract_Am(3) == 400);
    for (long m = 1; m <= 8; ++m) {
        const auto r = swm::verify_gm_conjecture(m);
        CHECK(r.identity_id == "gm_conjecture");
        CHECK(r.passed());
    }
    // a wrong constant is caught
    const auto bad = swm::compare_polys("gm_conjecture", swm::gm_poly(2), Rational(35) * swm::binomial_poly(Rational(2), 9));
    CHECK_FALSE(bad.passed());
}

TEST_CASE("mod-p reduction")
{
    for (long m : {1L, 2L, 3L, 5L, 6L, 8L}) {
        INFO("m=" << m);
        CHECK(swm::gm_mod_p(m).passed());
    }
    CHECK_THROWS_AS(swm::gm_mod_p(4), swm::PreconditionError);
    CHECK_THROWS_AS(swm::gm_mod_p(7), swm::PreconditionError);
    CHECK(swm::is_prime(17));
    CHECK_FALSE(swm::is_prime(9));
    CHECK(swm::verify_gm_suite(4).size() == 2);
    CHECK(swm::verify_gm_suite(3).size() == 3);
}
