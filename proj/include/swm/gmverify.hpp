#pragma once

#include "swm/polynomial.hpp"
#include "swm/report.hpp"

namespace swm {

/// The quadruple binomial sum G_m(t), binomials in the falling-factorial
/// convention (so binom(-2m-1, j) is a signed integer).
Rational gm_value(long m, long t);

/// Degree <= 4m+1 interpolant of gm_value at t = 0..4m+1. Throws
/// std::logic_error if it disagrees with gm_value at t = 4m+2 or 4m+3.
RatPoly gm_poly(long m);

/// binom(2m,m)^2 binom(t+m, 4m+1) as a polynomial in t.
RatPoly gm_conjectured(long m);

VerificationReport verify_gm_conjecture(long m);

/// G_m(3m+1) = 1 mod 2m+1. Requires 2m+1 prime.
VerificationReport gm_mod_p(long m);

/// A_m = G_m(3m+1) / binom(4m+1, 4m+1).
Rational extract_Am(long m);

/// Conjecture, A_m against binom(2m,m)^2, and the mod-p check when 2m+1 is prime.
ReportList verify_gm_suite(long m);

bool is_prime(long n);

} // namespace swm
