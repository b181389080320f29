#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "swm/qseries.hpp"

using swm::QSeries;
using swm::Rational;

namespace {

QSeries poly(std::initializer_list<std::pair<Rational, Rational>> t, long order = 10)
{
    return QSeries::make(t, Rational(order));
}

} // namespace

TEST_CASE("make_series")
{
    const QSeries one = poly({{0, 1}});
    CHECK(one.size() == 1);
    CHECK(one.coefficient(0) == 1);
    CHECK(one.order() == 10);

    const QSeries s = QSeries::make({{Rational(1, 24), 1}, {Rational(25, 24), -1}}, 2);
    CHECK(s.denom() == 24);
    CHECK(s.coefficient(Rational(25, 24)) == -1);

    CHECK_THROWS_AS(QSeries::make({{0, 1}, {0, 1}}, 5), swm::PreconditionError);
    CHECK_THROWS_AS(QSeries::make({{6, 1}}, 5), swm::PreconditionError);

    // zero coefficients are dropped, denominators minimal
    const QSeries z = QSeries::make({{Rational(1, 2), 0}, {1, 3}}, 5);
    CHECK(z.size() == 1);
    CHECK(z.denom() == 1);
}

TEST_CASE("add and mul")
{
    const QSeries a = poly({{0, 1}, {1, 1}});
    const QSeries b = poly({{0, 1}, {1, -1}});
    const QSeries p = mul(a, b);
    CHECK(p.to_pairs() == std::vector<std::pair<Rational, Rational>>{{0, 1}, {2, -1}});

    const QSeries h = mul(QSeries::monomial(Rational(1, 2), 1, 10), QSeries::monomial(Rational(1, 3), 1, 10));
    CHECK(h.denom() == 6);
    CHECK(h.coefficient(Rational(5, 6)) == 1);

    const QSeries zero = add(a, poly({{0, -1}, {1, -1}}));
    CHECK(zero.is_zero());
}

TEST_CASE("mul truncation order")
{
    // (q^2 + ..., known to 10) * (q^{-1} + ..., known to 3): result exact to min(10 - 1, 3 + 2)
    const QSeries a = QSeries::make({{2, 1}}, 10);
    const QSeries b = QSeries::make({{-1, 1}}, 3);
    CHECK(mul(a, b).order() == 5);
    CHECK(add(a, b).order() == 3);
}

TEST_CASE("invert")
{
    const QSeries g = invert(QSeries::make({{0, 1}, {1, -1}}, 5));
    CHECK(g.to_pairs() == std::vector<std::pair<Rational, Rational>>{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});

    const QSeries m = invert(QSeries::make({{1, 1}}, 5));
    CHECK(m.to_pairs() == std::vector<std::pair<Rational, Rational>>{{-1, 1}});

    CHECK_THROWS_AS(invert(QSeries(5)), swm::PreconditionError);
}

TEST_CASE("substitute_power")
{
    const QSeries s = swm::substitute_power(poly({{0, 1}, {1, 1}}), Rational(1, 2));
    CHECK(s.coefficient(Rational(1, 2)) == 1);
    CHECK(s.order() == 5);

    const QSeries e = swm::substitute_power(QSeries::monomial(Rational(1, 24), 1, 1), 2);
    CHECK(e.coefficient(Rational(1, 12)) == 1);

    CHECK_THROWS_AS(swm::substitute_power(s, 0), swm::PreconditionError);
    CHECK_THROWS_AS(swm::substitute_power(s, -1), swm::PreconditionError);

    // eta(2 tau) against the directly expanded q^{1/12} prod (1 - q^{2n})
    const QSeries eta = swm::shift(swm::pochhammer(1, 1, -1, swm::infinite_count, 10), Rational(1, 24));
    const QSeries eta2 = swm::substitute_power(eta, 2);
    std::vector<Rational> ex;
    for (long n = 2; n <= 20; n += 2) {
        ex.emplace_back(n);
    }
    const auto direct = oracle::shift(oracle::product(ex, -1, 20), Rational(1, 12));
    CHECK(eta2.order() >= 20);
    CHECK(oracle::agrees(eta2, direct, 20));
}

TEST_CASE("pochhammer")
{
    const QSeries p = swm::pochhammer(1, 1, -1, swm::infinite_count, 12);
    CHECK(p.to_pairs() ==
          std::vector<std::pair<Rational, Rational>>{{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}});

    const QSeries h = swm::pochhammer(Rational(1, 2), 1, +1, swm::infinite_count, 3);
    std::vector<Rational> ex{Rational(1, 2), Rational(3, 2), Rational(5, 2)};
    CHECK(oracle::agrees(h, oracle::product(ex, 1, 3), 3));
    CHECK(h.to_pairs() == std::vector<std::pair<Rational, Rational>>{
                              {0, 1}, {Rational(1, 2), 1}, {Rational(3, 2), 1}, {2, 1}, {Rational(5, 2), 1}, {3, 1}});

    CHECK(swm::pochhammer(1, 1, -1, 0, 10).to_pairs() == std::vector<std::pair<Rational, Rational>>{{0, 1}});
    CHECK_THROWS_AS(swm::pochhammer(1, 0, -1, swm::infinite_count, 10), swm::PreconditionError);
    CHECK_THROWS_AS(swm::pochhammer(1, -1, -1, swm::infinite_count, 10), swm::PreconditionError);

    // finite product against the oracle
    const QSeries f = swm::pochhammer(Rational(1, 3), Rational(2, 3), +1, 5, 8);
    std::vector<Rational> fx;
    for (long n = 0; n < 5; ++n) {
        fx.push_back(Rational(1, 3) + Rational(2 * n, 3));
    }
    CHECK(oracle::agrees(f, oracle::product(fx, 1, 8), 8));

    // inverse_pochhammer agrees with invert()
    const QSeries inv = swm::inverse_pochhammer(Rational(1, 2), Rational(1, 2), -1, 7, 10);
    CHECK(compare(inv, invert(swm::pochhammer(Rational(1, 2), Rational(1, 2), -1, 7, 10)), 10).passed());
}

TEST_CASE("compare")
{
    const QSeries a = poly({{0, 1}, {1, 1}});
    CHECK(compare(a, a, 10).passed());
    const auto r = compare(a, poly({{0, 1}, {1, 2}}), 10);
    REQUIRE_FALSE(r.passed());
    REQUIRE(r.first_mismatch.has_value());
    CHECK(r.first_mismatch->exponent == 1);
    CHECK(r.first_mismatch->lhs == 1);
    CHECK(r.first_mismatch->rhs == 2);
    CHECK_THROWS_AS(compare(a, a, 11), swm::PreconditionError);
}

TEST_CASE("ring axioms on random series")
{
    std::mt19937 rng(20240611);
    const Rational order(6);
    for (int trial = 0; trial < 25; ++trial) {
        const QSeries a = oracle::random_series(rng, 2, 12, order);
        const QSeries b = oracle::random_series(rng, 3, 18, order);
        const QSeries c = oracle::random_series(rng, 6, 36, order);

        const QSeries ab = mul(a, b);
        CHECK(compare(ab, mul(b, a), ab.order()).passed());
        const QSeries l = mul(mul(a, b), c);
        const QSeries r = mul(a, mul(b, c));
        CHECK(compare(l, r, min(l.order(), r.order())).passed());
        const QSeries d1 = mul(a, add(b, c));
        const QSeries d2 = add(mul(a, b), mul(a, c));
        CHECK(compare(d1, d2, min(d1.order(), d2.order())).passed());

        // against the naive product
        CHECK(oracle::agrees(ab, oracle::mul(oracle::from_series(a), oracle::from_series(b), ab.order()),
                             ab.order()));
    }
}

TEST_CASE("invert is a two-sided inverse for units")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        QSeries a = oracle::random_series(rng, 4, 24, 6);
        if (a.is_zero()) {
            continue;
        }
        const QSeries ai = invert(a);
        const QSeries p = mul(a, ai);
        CHECK(compare(p, QSeries::one(p.order()), p.order()).passed());
    }
    // shifted unit with a fractional leading exponent
    const QSeries u = QSeries::make({{Rational(-1, 16), 2}, {Rational(7, 16), 3}, {Rational(15, 16), -1}}, 5);
    const QSeries p = mul(u, invert(u));
    CHECK(p.order() > 4);
    CHECK(compare(p, QSeries::one(p.order()), p.order()).passed());
}

TEST_CASE("substitute_power round trip")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        const QSeries a = oracle::random_series(rng, 6, 30, 5);
        for (const Rational r : {Rational(2), Rational(1, 2), Rational(3, 5)}) {
            const QSeries back = swm::substitute_power(swm::substitute_power(a, r), Rational(1) / r);
            CHECK(back.order() == a.order());
            CHECK(compare(back, a, a.order()).passed());
        }
    }
}

TEST_CASE("euler product times its inverse")
{
    const Rational n(30);
    const QSeries p = swm::pochhammer(1, 1, -1, swm::infinite_count, n);
    const QSeries one = mul(p, invert(p));
    CHECK(one.order() == n);
    CHECK(compare(one, QSeries::one(n), n).passed());
}
