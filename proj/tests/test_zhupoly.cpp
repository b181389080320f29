#include <doctest.h>

#include <random>

#include "swm/characters.hpp"
#include "swm/zhupoly.hpp"

using swm::RatPoly;
using swm::Rational;

namespace {

Rational binom(long a, long b) { return Rational(swm::binomial(a, b)); }

// Lagrange basis evaluation, independent of the Newton form.
Rational lagrange_at(const std::vector<std::pair<Rational, Rational>>& pts, const Rational& x)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Rational term = pts[i].second;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j != i) {
                term *= (x - pts[j].first) / (pts[i].first - pts[j].first);
            }
        }
        sum += term;
    }
    return sum;
}

Rational naive_s(long m, long t)
{
    std::vector<std::pair<Rational, Rational>> pts;
    for (long i = 2 * m + 1; i <= 3 * m; ++i) {
        pts.emplace_back(Rational(i * (i - 2 * m), 2 * (2 * m + 1)), binom(i, 2 * m + 1));
    }
    Rational den = 1;
    for (long i = 2 * m + 1; i <= 3 * m; ++i) {
        den *= Rational((t - i) * (t - 2 * m + i));
    }
    return lagrange_at(pts, Rational(t * (t - 2 * m), 2 * (2 * m + 1))) / den;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> c;
        for (int i = 0; i < 6; ++i) {
            c.emplace_back(coef(rng), 1 + std::abs(coef(rng)));
        }
        const RatPoly p(c);
        std::vector<std::pair<Rational, Rational>> pts;
        for (long x = -3; x <= p.degree() - 3; ++x) {
            pts.emplace_back(x, p(Rational(x)));
        }
        CHECK(swm::interpolate<Rational>(pts) == p);

        const RatPoly q(std::vector<Rational>{coef(rng), coef(rng), 1});
        for (long x = -2; x <= 2; ++x) {
            CHECK(swm::compose(p, q)(Rational(x)) == p(q(Rational(x))));
            CHECK((p * q)(Rational(x)) == p(Rational(x)) * q(Rational(x)));
        }
    }
    for (long r = 0; r <= 6; ++r) {
        for (long t = -5; t <= 10; ++t) {
            CHECK(swm::binomial_poly(Rational(2), r)(Rational(t)) == binom(t + 2, r));
        }
    }
    CHECK(RatPoly().degree() == -1);
    CHECK((RatPoly::variable() - RatPoly::variable()).is_zero());
    const std::vector<std::pair<Rational, Rational>> dup{{1, 2}, {1, 3}};
    CHECK_THROWS_AS(swm::interpolate<Rational>(dup), swm::PreconditionError);
}

TEST_CASE("singlet curve")
{
    CHECK(swm::curve_constant(1) == 6);
    CHECK(swm::curve_constant(2) == Rational(125, 18));
    CHECK(swm::displayed_curve_constant(1) == 36);
    CHECK(swm::displayed_curve_constant(2) == Rational(2500, 3));

    const auto c1 = swm::singlet_curve(1);
    for (long t = 0; t <= 7; ++t) {
        const Rational x(t * (t - 2), 6);
        CHECK(c1.P(x, binom(t, 3)) == 0);
    }
    for (long m = 1; m <= 8; ++m) {
        CHECK_NOTHROW(swm::singlet_curve(m));
        CHECK(swm::curve_residual(m, swm::curve_constant(m)).is_zero());
        CHECK_FALSE(swm::curve_residual(m, swm::displayed_curve_constant(m)).is_zero());
    }
    CHECK_THROWS_AS(swm::singlet_curve(0), swm::PreconditionError);
}

TEST_CASE("f_m")
{
    const RatPoly f1 = swm::f_m_poly(1);
    const RatPoly expected =
        RatPoly::variable() * RatPoly::variable() * RatPoly::linear(1, Rational(1, 6)) * RatPoly::linear(1, Rational(-1, 2));
    CHECK(f1 == expected);
    for (long m = 1; m <= 8; ++m) {
        const RatPoly f = swm::f_m_poly(m);
        CHECK(f.degree() == 3 * m + 1);
        CHECK(f.leading() == 1);
        CHECK(f == swm::f_m_factored(m));
        CHECK(f(swm::weight_h(m, 2 * m + 1, 1)) == 0);
    }
}

TEST_CASE("phi identities")
{
    const RatPoly phi1 = swm::phi_tilde(1);
    CHECK(phi1(Rational(4)) == -2);
    CHECK(swm::A_bar(1) == Rational(-2, 5));
    CHECK(swm::B_m(1) == Rational(-9, 10));
    for (long m = 1; m <= 5; ++m) {
        const RatPoly phi = swm::phi_tilde(m);
        for (long t = -3; t <= 8 * m; ++t) {
            Rational direct = 0;
            for (long k = 0; k <= 2 * m; ++k) {
                direct += Rational(k % 2 == 0 ? 1 : -1) * binom(2 * m, k) * binom(t, 4 * m + 1 - k) *
                          binom(t, 2 * m + 1 + k);
            }
            CHECK(phi(Rational(t)) == direct);
            if (t >= 0 && t <= 2 * m) {
                CHECK(direct == 0);
            }
        }
        for (const auto& r : swm::verify_phi_identities(m)) {
            INFO(r.identity_id << " m=" << m);
            CHECK(r.passed());
        }
    }
    // a wrong constant is caught
    const RatPoly phi = swm::phi_tilde(2);
    const auto bad = swm::compare_polys("x", phi, Rational(2) * swm::B_m(2) *
                                                      swm::compose(swm::f_m_poly(2), swm::weight_param(2)));
    CHECK_FALSE(bad.passed());
}

TEST_CASE("interpolation polynomial")
{
    const auto i1 = swm::interpolation_L(1);
    CHECK(i1.L == RatPoly::constant(1));
    CHECK(i1.r_closed == RatPoly::constant(1));

    const auto i2 = swm::interpolation_L(2);
    CHECK(i2.L(swm::weight_h(2, 11, 1)) == 1);
    CHECK(i2.L(swm::weight_h(2, 13, 1)) == 6);

    for (long m = 1; m <= 10; ++m) {
        const auto ip = swm::interpolation_L(m);
        CHECK(ip.L.degree() == m - 1);
        CHECK(ip.r == ip.r_closed);
        for (long i = 0; i <= m; ++i) {
            CHECK_FALSE(ip.L(swm::weight_h(m, 2 * i + 1, 1)).is_zero());
        }
    }
}

TEST_CASE("s(t)")
{
    CHECK(swm::s_value(1, 0) == Rational(-1, 3));
    CHECK(swm::s_value(1, 1) == Rational(-1, 4));
    for (long m = 1; m <= 10; ++m) {
        CHECK(swm::s_value(m, 0) < 0);
        CHECK(swm::s_value(m, 1) < 0);
        for (long t = 0; t <= m; ++t) {
            CHECK(swm::s_value(m, t) == naive_s(m, t));
        }
        // the recursion at integer points, from independent values
        for (long t = 2; t <= m + 1; ++t) {
            const Rational lhs = naive_s(m, t) * Rational((m + t) * (2 * m + 1 - t) * (2 * m + 1 - t));
            const Rational rhs =
                Rational(2 * (m + 1 - t) * (2 * m * m + 2 * t * m - 2 - t * t + 2 * t)) * naive_s(m, t - 1) +
                Rational((t - 1) * (t - 1) * (3 * m + 2 - t)) * naive_s(m, t - 2);
            CHECK(lhs == rhs);
        }
        CHECK(swm::verify_s_properties(m).passed());
    }
    CHECK_THROWS_AS(swm::s_value(1, 3), swm::PreconditionError);
}

TEST_CASE("zhu suite")
{
    for (long m = 1; m <= 4; ++m) {
        const auto reports = swm::verify_zhu_suite(m);
        CHECK(reports.size() == 7);
        for (const auto& r : reports) {
            INFO(r.identity_id);
            CHECK(r.passed());
            CHECK(r.params.at("m") == std::to_string(m));
        }
    }
}
