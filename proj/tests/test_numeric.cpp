#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "swm/forms.hpp"
#include "swm/numeric.hpp"

using swm::Complex;
using swm::Rational;
using swm::TauPoint;

namespace {

// Independent evaluation: eta as a product, theta as a lattice sum.
Complex direct_eta(Complex tau)
{
    const Complex q = std::exp(Complex(0, 2 * std::numbers::pi_v<long double>) * tau);
    Complex p = std::exp(Complex(0, 2 * std::numbers::pi_v<long double> / 24) * tau);
    Complex qn = q;
    for (int n = 1; n < 400; ++n) {
        p *= Complex(1) - qn;
        qn *= q;
    }
    return p;
}

Complex direct_theta(long j, long double k, Complex tau)
{
    Complex s = 0;
    for (long n = -60; n <= 60; ++n) {
        const long double v = 2 * k * n + j;
        s += std::exp(Complex(0, 2 * std::numbers::pi_v<long double>) * tau * (v * v / (4 * k)));
    }
    return s;
}

} // namespace

TEST_CASE("tau points")
{
    CHECK(TauPoint::parse("0.3+1.1i") == TauPoint(0.3, 1.1));
    CHECK(TauPoint::parse("-0.4+0.9i") == TauPoint(-0.4, 0.9));
    CHECK(TauPoint::parse("i") == TauPoint(0, 1));
    CHECK(TauPoint::parse("2i") == TauPoint(0, 2));
    CHECK(TauPoint::parse("1e-1+1e+0i") == TauPoint(0.1, 1));
    CHECK_THROWS_AS(TauPoint::parse("0.3-1.1i"), swm::PreconditionError);
    CHECK_THROWS_AS(TauPoint::parse("0.5"), swm::PreconditionError);
    CHECK_THROWS_AS(TauPoint::parse("abc"), swm::PreconditionError);
    CHECK_THROWS_AS(TauPoint(0, 0), swm::PreconditionError);
    CHECK(TauPoint(0.3, 1.1).to_string() == "0.3+1.1i");
}

TEST_CASE("series evaluation")
{
    const auto one = swm::eval_series(swm::QSeries::one(50), TauPoint(0.2, 1), 1e-12L);
    CHECK(std::abs(one.value - Complex(1)) < 1e-15L);

    const swm::QSeries e = swm::eta(300);
    for (const TauPoint& t : {TauPoint(0, 1), TauPoint(0.3, 1.1), TauPoint(-0.4, 0.9), TauPoint(0, 2)}) {
        const auto a = swm::eval_series(e, t, 1e-12L);
        CHECK(std::abs(a.value - direct_eta(t.z())) < 1e-14L);
        CHECK(a.error < 1e-12L);
    }
    const auto th = swm::eval_series(swm::theta({1, Rational(3, 2)}, 300), TauPoint(0.1, 0.7), 1e-12L);
    CHECK(std::abs(th.value - direct_theta(1, 1.5L, Complex(0.1, 0.7))) < 1e-14L);

    // eta(i/2) = sqrt(2) eta(2i)
    const auto e2 = swm::eval_series(e, TauPoint(0, 2), 1e-12L);
    const auto eh = swm::eval_series(e, TauPoint(0, 0.5), 1e-12L);
    CHECK(std::abs(eh.value / e2.value - std::sqrt(2.0L)) < 1e-12L);

    CHECK_THROWS_AS(swm::eval_series(swm::QSeries::one(50), TauPoint(0.3, 1.1), 1e-30L), swm::PreconditionError);
    CHECK_THROWS_AS(swm::eval_series(e, TauPoint(0, 0.005), 1e-8L), swm::PreconditionError);
}

TEST_CASE("modular laws")
{
    const std::vector<TauPoint> taus{TauPoint(0, 1), TauPoint(0.3, 1.1), TauPoint(-0.4, 0.9)};
    const auto reports = swm::verify_s_t_laws(taus, 300, 1e-8L);
    CHECK(reports.size() > 100);
    for (const auto& r : reports) {
        INFO(r.identity_id << " " << r.params.at("tau") << " residual " << r.params.at("residual"));
        CHECK(r.passed());
    }
    const auto at_i = std::find_if(reports.begin(), reports.end(), [](const auto& r) { return r.identity_id == "eta_s_law"; });
    REQUIRE(at_i != reports.end());
    CHECK(std::stod(at_i->params.at("residual")) < 1e-15);
    CHECK_THROWS_AS(swm::verify_s_t_laws(taus, 300, 1e-40L), swm::PreconditionError);
}

TEST_CASE("theta S-law needs the full index range")
{
    // Dropping j' = 2k - 1 from the finite sum breaks the law
    const TauPoint t(0.3, 1.1);
    const long k = 3;
    Complex sum = 0;
    const Complex tau = t.z();
    for (long jp = 0; jp < 2 * k - 1; ++jp) {
        sum += std::exp(Complex(0, std::numbers::pi_v<long double> * jp / k)) * direct_theta(jp, k, tau);
    }
    const Complex lhs = direct_theta(1, k, Complex(-1) / tau);
    CHECK(std::abs(lhs - std::sqrt(Complex(0, -1) * tau / Complex(2 * k)) * sum) > 1e-3L);
}

TEST_CASE("rank of the NS space")
{
    for (long m = 1; m <= 2; ++m) {
        auto pts = swm::default_rank_points(m);
        const auto r = swm::ns_space_rank(m, pts, 120);
        CHECK(r.rank == 3 * m + 1);
        CHECK(r.min_singular_value > swm::rank_threshold * r.max_singular_value);

        std::reverse(pts.begin(), pts.end());
        CHECK(swm::ns_space_rank(m, pts, 120).rank == 3 * m + 1);

        pts.back() = pts.front();
        CHECK_THROWS_AS(swm::ns_space_rank(m, pts, 120), swm::PreconditionError);
        pts.pop_back();
        CHECK_THROWS_AS(swm::ns_space_rank(m, pts, 120), swm::PreconditionError);

        const auto rep = swm::verify_ns_rank(m, 120);
        CHECK(rep.passed());
        CHECK(rep.params.at("rank") == std::to_string(3 * m + 1));
    }
}

TEST_CASE("T ratios are finite")
{
    for (const auto& [id, z] : swm::t_ratios(1, TauPoint(0.1, 1.0), 40)) {
        INFO(id.to_string());
        CHECK(std::isfinite(static_cast<double>(std::abs(z))));
    }
}
