#include "swm/characters.hpp"

#include <charconv>

#include "swm/forms.hpp"

namespace swm {

namespace {

void check_m(long m)
{
    if (m < 1) {
        throw PreconditionError("m must be a positive integer, got " + std::to_string(m));
    }
}

// Theta-form character with the theta index shifted by j_offset.
QSeries theta_form_char(const SWModuleId& id, const Rational& order, long j_offset)
{
    const long m = id.m;
    const Rational k(2 * m + 1, 2);
    const Rational lead(-1, 16);
    const Rational n = order - lead;
    const ThetaParams tp(m - id.i + j_offset, k);
    QSeries inner;
    if (id.is_lambda_top()) {
        inner = theta(tp, n);
    } else {
        const Rational a = id.kind == SWModuleId::Kind::lambda ? Rational(2 * id.i + 1, 2 * m + 1)
                                                               : Rational(2 * m - 2 * id.i, 2 * m + 1);
        const Rational b = id.kind == SWModuleId::Kind::lambda ? Rational(2, 2 * m + 1) : Rational(-2, 2 * m + 1);
        inner = scale(theta(tp, n), a) + scale(dtheta(tp, n), b);
    }
    return truncate(f_over_eta(order) * inner, order);
}

} // namespace

SWModuleId SWModuleId::lambda(long m, long i)
{
    check_m(m);
    if (i < 0 || i > m) {
        throw PreconditionError("Lambda(i+1) needs 0 <= i <= m");
    }
    return {m, Kind::lambda, i};
}

SWModuleId SWModuleId::pi(long m, long i)
{
    check_m(m);
    if (i < 0 || i > m - 1) {
        throw PreconditionError("Pi(m-i) needs 0 <= i <= m-1");
    }
    return {m, Kind::pi, i};
}

SWModuleId SWModuleId::parse(long m, std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw PreconditionError("module must look like lambda:N or pi:N, got '" + std::string(text) + "'");
    }
    const std::string_view kind = text.substr(0, colon);
    const std::string_view num = text.substr(colon + 1);
    long label = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), label);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
        throw PreconditionError("bad module index in '" + std::string(text) + "'");
    }
    if (kind == "lambda") {
        return lambda(m, label - 1);
    }
    if (kind == "pi") {
        return pi(m, m - label);
    }
    throw PreconditionError("unknown module kind '" + std::string(kind) + "'");
}

std::vector<SWModuleId> SWModuleId::all(long m)
{
    std::vector<SWModuleId> out;
    for (long i = 0; i <= m; ++i) {
        out.push_back(lambda(m, i));
    }
    for (long i = 0; i < m; ++i) {
        out.push_back(pi(m, i));
    }
    return out;
}

std::string SWModuleId::to_string() const
{
    return (kind == Kind::lambda ? "lambda:" : "pi:") + std::to_string(label());
}

Rational weight_h(long m, long r, long s)
{
    const long p = 2 * m + 1;
    const long a = s * p - r;
    return Rational(a * a - (p - 1) * (p - 1), 8 * p);
}

CentralData central_data(long m)
{
    check_m(m);
    CentralData d;
    d.m = m;
    d.c = Rational(3, 2) * (Rational(1) - Rational(8 * m * m, 2 * m + 1));
    for (long i = 0; i <= 3 * m; ++i) {
        d.weights.emplace(std::pair{2 * i + 1, 1L}, weight_h(m, 2 * i + 1, 1));
    }
    return d;
}

QSeries ns_irr_char(long m, long i, long n, const Rational& order)
{
    check_m(m);
    if (i < 0 || i > m || n < 0) {
        throw PreconditionError("ns_irr_char needs 0 <= i <= m and n >= 0");
    }
    const Rational pre(m * m, 2 * (2 * m + 1));
    const Rational h1 = weight_h(m, 2 * i + 1, 2 * n + 1);
    const Rational h2 = weight_h(m, 2 * i + 1, -2 * n - 1);
    // f/eta leads with q^{-1/16}; the monomials must be known to order + 1/16
    const Rational inner_order = max(order - pre + Rational(1, 16), max(h1, h2));
    QSeries mono = QSeries::monomial(h1, 1, inner_order) - QSeries::monomial(h2, 1, inner_order);
    return truncate(shift(f_over_eta(order - pre - min(h1, Rational(0))) * mono, pre), order);
}

QSeries sw_char(const SWModuleId& id, const Rational& order) { return theta_form_char(id, order, 0); }

QSeries sw_superchar_theta(const SWModuleId& id, const Rational& order)
{
    const long m = id.m;
    const Rational big(2 * (2 * m + 1));
    const long i = id.i;
    auto diff = [&](auto fn, long j1, long j2) { return fn({j1, big}, order) - fn({j2, big}, order); };
    QSeries inner;
    if (id.is_lambda_top()) {
        inner = diff(theta, 0, 2 * (2 * m + 1));
    } else {
        const bool lam = id.kind == SWModuleId::Kind::lambda;
        const Rational a = lam ? Rational(2 * i + 1, 2 * m + 1) : Rational(2 * m - 2 * i, 2 * m + 1);
        const Rational b = lam ? Rational(1, 2 * m + 1) : Rational(-1, 2 * m + 1);
        inner = scale(diff(theta, 2 * (m - i), 2 * (m + i + 1)), a) +
                scale(diff(dtheta, 2 * (m - i), 2 * (m + i + 1)), b);
    }
    return truncate(f2_over_eta(order) * inner, order);
}

Rational superchar_shift(const SWModuleId& id, const Rational& order)
{
    return leading_shift(sw_superchar_theta(id, order), sw_char(id, order));
}

QSeries char_by_decomposition(const SWModuleId& id, const Rational& order)
{
    if (id.kind != SWModuleId::Kind::lambda) {
        throw PreconditionError("char_by_decomposition is available for Lambda modules only");
    }
    const long m = id.m;
    const Rational base = Rational(m * m, 2 * (2 * m + 1)) - Rational(1, 16);
    QSeries total(order);
    for (long n = 0; weight_h(m, 2 * id.i + 1, 2 * n + 1) + base <= order; ++n) {
        total = total + scale(ns_irr_char(m, id.i, n, order), Rational(2 * n + 1));
    }
    return total;
}

QSeries graded_projection(const QSeries& s)
{
    std::vector<std::pair<Rational, Rational>> terms;
    for (const auto& t : s.terms()) {
        const std::int64_t f = t.coeff.floor_int();
        if (f > 0) {
            terms.emplace_back(s.exponent_of(t), Rational(f));
        }
    }
    return QSeries::make(terms, s.order());
}

IdentityList character_identities(long m, long j_offset)
{
    check_m(m);
    IdentityList out;
    for (long i = 0; i <= m; ++i) {
        const SWModuleId id = SWModuleId::lambda(m, i);
        out.push_back({"char_decomposition",
                       {{"m", std::to_string(m)}, {"module", id.to_string()}},
                       [id, j_offset](const Rational& order) {
                           return std::pair{char_by_decomposition(id, order), theta_form_char(id, order, j_offset)};
                       }});
    }
    for (long i = 0; i < m; ++i) {
        const SWModuleId lam = SWModuleId::lambda(m, i);
        const SWModuleId pi = SWModuleId::pi(m, i);
        out.push_back({"char_lambda_plus_pi",
                       {{"m", std::to_string(m)}, {"i", std::to_string(i)}},
                       [lam, pi, m, i, j_offset](const Rational& order) {
                           const QSeries lhs =
                               theta_form_char(lam, order, j_offset) + theta_form_char(pi, order, j_offset);
                           const QSeries th = theta({m - i, Rational(2 * m + 1, 2)}, order + Rational(1, 16));
                           return std::pair{lhs, truncate(f_over_eta(order) * th, order)};
                       }});
    }
    for (const SWModuleId& id : SWModuleId::all(m)) {
        out.push_back({"char_graded_dimensions",
                       {{"m", std::to_string(m)}, {"module", id.to_string()}},
                       [id, j_offset](const Rational& order) {
                           const QSeries s = theta_form_char(id, order, j_offset);
                           return std::pair{s, graded_projection(s)};
                       }});
    }
    return out;
}

ReportList verify_character_suite(long m, const Rational& order)
{
    return verify_identities(character_identities(m), order);
}

} // namespace swm
