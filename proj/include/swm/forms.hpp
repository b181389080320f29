#pragma once

#include <functional>

#include "swm/identity.hpp"
#include "swm/qseries.hpp"

namespace swm {

/// Index pair of Theta_{j,k}; k is a positive half-integer.
struct ThetaParams {
    long j = 0;
    Rational k{1};

    ThetaParams() = default;
    ThetaParams(long j_, Rational k_);
};

using SeriesSource = std::function<QSeries(const Rational& order)>;

/// q^{1/24} prod_{n>=1} (1 - q^n).
QSeries eta(const Rational& order);
/// eta(r tau) for positive rational r.
QSeries eta_scaled(const Rational& r, const Rational& order, const SeriesSource& eta_source = eta);

enum class Weber { f, f1, f2 };

QSeries weber(Weber which, const Rational& order);

/// sum_n q^{(2kn+j)^2/4k}
QSeries theta(const ThetaParams& p, const Rational& order);
/// sum_n (2kn+j) q^{(2kn+j)^2/4k}
QSeries dtheta(const ThetaParams& p, const Rational& order);

/// f / eta, the common prefactor of the characters.
QSeries f_over_eta(const Rational& order);
/// f2 / eta, the common prefactor of the supercharacters.
QSeries f2_over_eta(const Rational& order);

/// The fixed identity suite; `eta_source` replaces eta wherever it occurs.
IdentityList form_identities(const SeriesSource& eta_source = eta);
ReportList verify_form_identities(const Rational& order);

} // namespace swm
