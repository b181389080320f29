#pragma once

#include "swm/polynomial.hpp"
#include "swm/report.hpp"

namespace swm {

/// x(t) = t(t - 2m) / (2(2m+1)), the weight h^{t+1,1} as a polynomial in t.
RatPoly weight_param(long m);
/// y(t) = binom(t, 2m+1)
RatPoly curve_y_param(long m);

/// The constant that makes y^2 = C prod_{i=0}^{2m} (x - h^{2i+1,1}) hold on
/// the parametrization: (2(2m+1))^{2m+1} / ((2m+1)!)^2.
Rational curve_constant(long m);
/// 2^{2m+1} (2m+1)^{2m+1} / (2m+1)!, which misses a factor (2m+1)!.
Rational displayed_curve_constant(long m);
/// y(t)^2 - C prod (x(t) - h^{2i+1,1}); zero exactly for C = curve_constant(m).
RatPoly curve_residual(long m, const Rational& C);

struct SingletCurve {
    long m = 1;
    Rational Cm;
    /// prod_{i=0}^{2m} (x - h^{2i+1,1})
    RatPoly weight_poly;
    RatPoly x_param;
    RatPoly y_param;

    /// P(x, y) = y^2 - Cm weight_poly(x)
    [[nodiscard]] Rational P(const Rational& x, const Rational& y) const { return y * y - Cm * weight_poly(x); }
};

/// Throws std::logic_error if the curve relation fails on the parametrization.
SingletCurve singlet_curve(long m);

/// prod_{i=0}^{3m} (x - h^{2i+1,1})
RatPoly f_m_poly(long m);
/// (x - h^{2m+1,1}) prod_{i<m} (x - h^{2i+1,1})^2 prod_{i=2m+1}^{3m} (x - h^{2i+1,1})
RatPoly f_m_factored(long m);

/// sum_{k=0}^{2m} (-1)^k binom(2m,k) binom(t, 4m+1-k) binom(t, 2m+1+k)
RatPoly phi_tilde(long m);
/// (-1)^m binom(2m,m) / binom(4m+1,m)
Rational A_bar(long m);
/// (-1)^m binom(2m,m) (2(2m+1))^{3m+1} / (binom(4m+1,m) ((3m+1)!)^2)
Rational B_m(long m);

/// Coefficient-wise comparison of two polynomials; the first mismatch is the
/// lowest differing degree.
VerificationReport compare_polys(std::string id, const RatPoly& a, const RatPoly& b);

/// phi_tilde = A_bar binom(t,3m+1) binom(t+m,3m+1), and phi_tilde = B_m f_m(x(t)).
ReportList verify_phi_identities(long m);

struct Interpolation {
    /// Lagrange polynomial through (h^{2i+1,1}, binom(i, 2m+1)), 2m+1 <= i <= 3m.
    RatPoly L;
    /// L(x(t))
    RatPoly r;
    /// The product-times-partial-fractions closed form of r.
    RatPoly r_closed;
};

Interpolation interpolation_L(long m);

/// prod_{i=2m+1}^{3m} (t - i)(t - 2m + i)
RatPoly s_denominator(long m);
/// s(t) = r(t) / s_denominator(t) at an integer point away from the poles.
Rational s_value(long m, long t);

/// The recursion for s with denominators cleared, s(0) < 0, s(1) < 0, and
/// L(h^{2i+1,1}) != 0 for 0 <= i <= m, folded into one report.
VerificationReport verify_s_properties(long m);

/// Curve relation, f_m factorization, both phi identities, interpolation
/// closed form and degree, s properties.
ReportList verify_zhu_suite(long m);

} // namespace swm
