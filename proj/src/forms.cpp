#include "swm/forms.hpp"

#include <map>
#include <string>

namespace swm {

namespace {

const Rational half(1, 2);

QSeries shifted_product(const Rational& prefactor, const Rational& start, const Rational& step, int sign,
                        const Rational& order)
{
    if (order < prefactor) {
        throw PreconditionError("requested order " + order.to_string() + " is below the leading exponent " +
                                prefactor.to_string());
    }
    return shift(pochhammer(start, step, sign, infinite_count, order - prefactor), prefactor);
}

// Theta-type sums: coefficient weight(v) at exponent v^2 / (2 K2), v = K2 n + j.
template <typename Weight>
QSeries lattice_sum(const ThetaParams& p, const Rational& order, Weight weight)
{
    const long k2 = (p.k * 2).floor_int();
    const Rational denom(2 * k2);
    std::map<Rational, Rational> acc;
    auto visit = [&](long n) {
        const long v = k2 * n + p.j;
        const Rational e = Rational(v) * Rational(v) / denom;
        if (e > order) {
            return false;
        }
        acc[e] += weight(v);
        return true;
    };
    // exponent is convex in n with its minimum near -j / K2
    const long centre = Rational(-p.j, k2).floor_int();
    for (long n = centre; visit(n) || n <= centre; ++n) {
    }
    for (long n = centre - 1; visit(n) || n >= centre - 1; --n) {
    }
    std::vector<std::pair<Rational, Rational>> terms(acc.begin(), acc.end());
    return QSeries::make(terms, order);
}

QSeries fit(const QSeries& s, const Rational& order) { return truncate(s, order); }

std::map<std::string, std::string> params_of(std::initializer_list<std::pair<const char*, std::string>> kv)
{
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : kv) {
        out.emplace(k, v);
    }
    return out;
}

} // namespace

ThetaParams::ThetaParams(long j_, Rational k_) : j(j_), k(std::move(k_))
{
    if (k.sign() <= 0 || !(k * 2).is_integer()) {
        throw PreconditionError("theta index k must be a positive half-integer, got " + k.to_string());
    }
}

QSeries eta(const Rational& order) { return shifted_product(Rational(1, 24), 1, 1, -1, order); }

QSeries eta_scaled(const Rational& r, const Rational& order, const SeriesSource& eta_source)
{
    if (r.sign() <= 0) {
        throw PreconditionError("eta_scaled: scale must be positive");
    }
    return substitute_power(eta_source(order / r), r);
}

QSeries weber(Weber which, const Rational& order)
{
    switch (which) {
    case Weber::f:
        return shifted_product(Rational(-1, 48), half, 1, +1, order);
    case Weber::f1:
        return shifted_product(Rational(-1, 48), half, 1, -1, order);
    case Weber::f2:
        return shifted_product(Rational(1, 24), 1, 1, +1, order);
    }
    throw PreconditionError("weber: unknown function");
}

QSeries theta(const ThetaParams& p, const Rational& order)
{
    return lattice_sum(p, order, [](long) { return Rational(1); });
}

QSeries dtheta(const ThetaParams& p, const Rational& order)
{
    return lattice_sum(p, order, [](long v) { return Rational(v); });
}

QSeries f_over_eta(const Rational& order)
{
    const Rational lead(-1, 16);
    const Rational n = order - lead;
    return shift(mul(pochhammer(half, 1, +1, infinite_count, n), inverse_pochhammer(1, 1, -1, infinite_count, n)),
                 lead);
}

QSeries f2_over_eta(const Rational& order)
{
    return mul(pochhammer(1, 1, +1, infinite_count, order), inverse_pochhammer(1, 1, -1, infinite_count, order));
}

IdentityList form_identities(const SeriesSource& eta_source)
{
    IdentityList out;
    const Rational pad(1);

    out.push_back({"dtheta_eta_cubed", {}, [eta_source, pad](const Rational& order) {
                       const Rational n = order + pad;
                       const QSeries rhs = power(eta_source(n), 3) * invert(power(weber(Weber::f, n), 2));
                       return std::pair{dtheta({1, Rational(3, 2)}, order), fit(rhs, order)};
                   }});

    out.push_back({"weber_f_eta_quotient", {}, [eta_source, pad](const Rational& order) {
                       const Rational n = order + pad;
                       const QSeries rhs = power(eta_source(n), 2) *
                                           invert(eta_scaled(half, n, eta_source) * eta_scaled(2, n, eta_source));
                       return std::pair{weber(Weber::f, order), fit(rhs, order)};
                   }});

    out.push_back({"basic_q", {}, [pad](const Rational& order) {
                       const Rational n = order + pad;
                       const QSeries lhs = pochhammer(half, 1, +1, infinite_count, n) *
                                           invert(pochhammer(1, 1, -1, infinite_count, n));
                       const QSeries rhs = invert(pochhammer(half, half, -1, infinite_count, n) *
                                                  pochhammer(1, 1, +1, infinite_count, n));
                       return std::pair{fit(lhs, order), fit(rhs, order)};
                   }});

    out.push_back({"inverse_eta_half", {}, [eta_source, pad](const Rational& order) {
                       const Rational n = order + pad;
                       const QSeries lhs = invert(eta_scaled(half, n, eta_source));
                       const QSeries rhs = weber(Weber::f, n) * invert(eta_source(n)) * weber(Weber::f2, n);
                       return std::pair{fit(lhs, order), fit(rhs, order)};
                   }});

    for (long m = 1; m <= 3; ++m) {
        const Rational k(2 * m + 1, 2);
        for (long j = 0; j <= 2 * m; ++j) {
            const auto params = params_of({{"m", std::to_string(m)}, {"j", std::to_string(j)}});
            out.push_back({"theta_half_argument", params, [m, j, k](const Rational& order) {
                               const QSeries lhs =
                                   substitute_power(theta({2 * j, Rational(2 * m + 1)}, order * 2), half);
                               return std::pair{lhs, theta({j, k}, order)};
                           }});
            out.push_back({"dtheta_half_argument", params, [m, j, k](const Rational& order) {
                               const QSeries lhs =
                                   substitute_power(dtheta({2 * j, Rational(2 * m + 1)}, order * 2), half);
                               return std::pair{lhs, scale(dtheta({j, k}, order), 2)};
                           }});
        }
    }

    for (const Rational& k : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(5, 2), Rational(7, 2),
                              Rational(6), Rational(10)}) {
        const long k2 = (k * 2).floor_int();
        for (long j = 0; j <= k2; ++j) {
            const auto params = params_of({{"j", std::to_string(j)}, {"k", k.to_string()}});
            out.push_back({"theta_reflection", params, [j, k](const Rational& order) {
                               return std::pair{theta({j, k}, order), theta({-j, k}, order)};
                           }});
            out.push_back({"theta_mirror", params, [j, k, k2](const Rational& order) {
                               return std::pair{theta({j, k}, order), theta({k2 - j, k}, order)};
                           }});
        }
    }
    return out;
}

ReportList verify_form_identities(const Rational& order)
{
    if (order < 10) {
        throw PreconditionError("verify_form_identities: order must be at least 10");
    }
    return verify_identities(form_identities(), order);
}

} // namespace swm
