#pragma once

#include <complex>
#include <string>
#include <vector>

#include "swm/characters.hpp"
#include "swm/qseries.hpp"
#include "swm/report.hpp"

namespace swm {

using Complex = std::complex<long double>;

/// A point of the upper half-plane.
struct TauPoint {
    double re = 0;
    double im = 1;

    TauPoint() = default;
    TauPoint(double re_, double im_);
    explicit TauPoint(Complex z);

    [[nodiscard]] Complex z() const { return {re, im}; }
    /// |q| = exp(-2 pi im)
    [[nodiscard]] long double abs_q() const;
    [[nodiscard]] std::string to_string() const;
    /// Parses "a+bi", "a-bi", "bi", "i", "a".
    static TauPoint parse(const std::string& text);

    friend bool operator==(const TauPoint&, const TauPoint&) = default;
};

/// A value together with a bound on its error: the truncation tail (assuming
/// the omitted coefficients are no larger in modulus than the largest
/// retained one) plus accumulated rounding.
struct Approx {
    Complex value;
    long double error = 0;
};

/// sum c q^e at tau, q^e = exp(2 pi i tau e). Throws PreconditionError when
/// the error bound exceeds tol, naming the order that would be needed.
Approx eval_series(const QSeries& a, const TauPoint& tau, long double tol);

/// One report per law, point and index: eta S and T, Theta and dTheta S and
/// T^2. The S laws for half-integer k go through Theta_{j,k}(tau) =
/// Theta_{2j,2k}(tau/2). A report passes iff |lhs - rhs| + error bounds < tol;
/// the residual is recorded in the params.
ReportList verify_s_t_laws(const std::vector<TauPoint>& taus, const Rational& order, long double tol);

struct RankResult {
    long rank = 0;
    long double min_singular_value = 0;
    long double max_singular_value = 0;
};

/// Relative cutoff for the numerical rank.
inline constexpr long double rank_threshold = 1e-6L;

/// Rank of the (3m+1) x (3m+1) matrix of the 2m+1 characters and the m
/// functions tau (f/eta) dTheta_{m-i,(2m+1)/2} evaluated at the given points.
RankResult ns_space_rank(long m, const std::vector<TauPoint>& taus, const Rational& order);

/// i, 0.3+1.1i, -0.4+0.9i
std::vector<TauPoint> default_law_points();
/// 3m+1 points with Re spread over [-0.5, 0.5) and Im over [0.3, 2.8).
std::vector<TauPoint> default_rank_points(long m);
/// ns_space_rank at default_rank_points as a report ("ns_space_rank"); passes
/// iff the rank is 3m+1.
VerificationReport verify_ns_rank(long m, const Rational& order);

/// chi(tau + 1) / superchar(tau) per module (reported, not asserted).
std::vector<std::pair<SWModuleId, Complex>> t_ratios(long m, const TauPoint& tau, const Rational& order);

} // namespace swm
