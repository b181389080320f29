#include "swm/qseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace swm {

namespace {

// Numerator of x over denominator d; x * d must be an integer.
std::int64_t scaled_num(const Rational& x, std::int64_t d)
{
    const Rational s = x * Rational(d);
    if (!s.is_integer()) {
        throw std::logic_error("scaled_num: exponent not on lattice");
    }
    return s.floor_int();
}

std::int64_t den64(const Rational& x)
{
    const BigInt d = x.den();
    if (!d.fits_slong_p()) {
        throw std::overflow_error("exponent denominator out of range");
    }
    return d.get_si();
}

// Lowest exponent of a, or its order when a is zero (nothing below the
// order is present, and anything unknown lies above it).
Rational effective_lead(const QSeries& a)
{
    const auto lead = a.leading_exponent();
    return lead ? *lead : a.order();
}

// Dense coefficient buffer over the numerators base + k * step, k = 0..n-1.
struct DenseBuffer {
    std::int64_t base = 0;
    std::int64_t step = 1;
    std::vector<Rational> coeffs;

    std::vector<QSeries::Term> collect() const
    {
        std::vector<QSeries::Term> out;
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (!coeffs[k].is_zero()) {
                out.push_back({base + static_cast<std::int64_t>(k) * step, coeffs[k]});
            }
        }
        return out;
    }
};

} // namespace

QSeries::QSeries(Rational order) : order_(std::move(order)) {}

QSeries QSeries::make(std::span<const std::pair<Rational, Rational>> terms, Rational order)
{
    std::int64_t d = 1;
    for (const auto& [e, c] : terms) {
        if (e > order) {
            throw PreconditionError("make_series: exponent " + e.to_string() + " exceeds order " +
                                    order.to_string());
        }
        d = lcm64(d, den64(e));
    }
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const auto& [e, c] : terms) {
        out.push_back({scaled_num(e, d), c});
    }
    std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return x.num < y.num; });
    for (std::size_t k = 1; k < out.size(); ++k) {
        if (out[k].num == out[k - 1].num) {
            throw PreconditionError("make_series: duplicate exponent " + Rational(out[k].num, d).to_string());
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    return from_sorted(d, std::move(out), std::move(order));
}

QSeries QSeries::make(std::initializer_list<std::pair<Rational, Rational>> terms, Rational order)
{
    const std::vector<std::pair<Rational, Rational>> v(terms);
    return make(std::span<const std::pair<Rational, Rational>>(v), std::move(order));
}

QSeries QSeries::monomial(const Rational& exponent, const Rational& coeff, Rational order)
{
    if (exponent > order || coeff.is_zero()) {
        return QSeries(std::move(order));
    }
    const std::int64_t d = den64(exponent);
    return from_sorted(d, {{scaled_num(exponent, d), coeff}}, std::move(order));
}

QSeries QSeries::from_sorted(std::int64_t denom, std::vector<Term> terms, Rational order)
{
    QSeries s(std::move(order));
    s.denom_ = denom;
    s.terms_ = std::move(terms);
    s.canonicalize_denom();
    return s;
}

void QSeries::canonicalize_denom()
{
    std::int64_t g = denom_;
    for (const auto& t : terms_) {
        g = gcd64(g, t.num);
        if (g == 1) {
            return;
        }
    }
    if (terms_.empty()) {
        denom_ = 1;
        return;
    }
    denom_ /= g;
    for (auto& t : terms_) {
        t.num /= g;
    }
}

Rational QSeries::coefficient(const Rational& exponent) const
{
    const Rational s = exponent * Rational(denom_);
    if (!s.is_integer()) {
        return 0;
    }
    const std::int64_t n = s.floor_int();
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), n,
                                     [](const Term& t, std::int64_t v) { return t.num < v; });
    return (it != terms_.end() && it->num == n) ? it->coeff : Rational(0);
}

std::optional<Rational> QSeries::leading_exponent() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return Rational(terms_.front().num, denom_);
}

Rational QSeries::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.front().coeff; }

std::vector<std::pair<Rational, Rational>> QSeries::to_pairs() const
{
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        out.emplace_back(exponent_of(t), t.coeff);
    }
    return out;
}

QSeries QSeries::with_denom(std::int64_t d) const
{
    if (d % denom_ != 0) {
        throw std::logic_error("with_denom: not a multiple of the series denominator");
    }
    QSeries s(order_);
    s.denom_ = d;
    s.terms_ = terms_;
    const std::int64_t f = d / denom_;
    for (auto& t : s.terms_) {
        t.num *= f;
    }
    return s;
}

bool QSeries::same_terms(const QSeries& other) const
{
    return compare(*this, other, min(order_, other.order_)).passed();
}

QSeries add(const QSeries& a, const QSeries& b)
{
    const std::int64_t d = lcm64(a.denom(), b.denom());
    const Rational order = min(a.order(), b.order());
    const std::int64_t top = (order * Rational(d)).floor_int();
    const QSeries x = a.with_denom(d);
    const QSeries y = b.with_denom(d);
    std::vector<QSeries::Term> out;
    out.reserve(x.size() + y.size());
    auto i = x.terms().begin();
    auto j = y.terms().begin();
    while (i != x.terms().end() || j != y.terms().end()) {
        QSeries::Term t;
        if (j == y.terms().end() || (i != x.terms().end() && i->num < j->num)) {
            t = *i++;
        } else if (i == x.terms().end() || j->num < i->num) {
            t = *j++;
        } else {
            t = {i->num, i->coeff + j->coeff};
            ++i;
            ++j;
        }
        if (t.num > top) {
            break;
        }
        if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return QSeries::from_sorted(d, std::move(out), order);
}

QSeries neg(const QSeries& a) { return scale(a, Rational(-1)); }

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, neg(b)); }

QSeries scale(const QSeries& a, const Rational& c)
{
    if (c.is_zero()) {
        return QSeries(a.order());
    }
    std::vector<QSeries::Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out) {
        t.coeff *= c;
    }
    return QSeries::from_sorted(a.denom(), std::move(out), a.order());
}

QSeries shift(const QSeries& a, const Rational& e)
{
    const std::int64_t d = lcm64(a.denom(), den64(e));
    const std::int64_t s = scaled_num(e, d);
    const QSeries x = a.with_denom(d);
    std::vector<QSeries::Term> out(x.terms().begin(), x.terms().end());
    for (auto& t : out) {
        t.num += s;
    }
    return QSeries::from_sorted(d, std::move(out), a.order() + e);
}

QSeries mul(const QSeries& a, const QSeries& b)
{
    const Rational order = min(a.order() + effective_lead(b), b.order() + effective_lead(a));
    if (a.is_zero() || b.is_zero()) {
        return QSeries(order);
    }
    const std::int64_t d = lcm64(a.denom(), b.denom());
    const QSeries x = a.with_denom(d);
    const QSeries y = b.with_denom(d);
    const std::int64_t top = (order * Rational(d)).floor_int();
    const std::int64_t xmin = x.terms().front().num;
    const std::int64_t ymin = y.terms().front().num;
    const std::int64_t base = xmin + ymin;
    if (top < base) {
        return QSeries(order);
    }
    std::int64_t g = 0;
    for (const auto& t : x.terms()) {
        g = gcd64(g, t.num - xmin);
    }
    for (const auto& t : y.terms()) {
        g = gcd64(g, t.num - ymin);
    }
    if (g == 0) {
        g = 1;
    }
    DenseBuffer buf;
    buf.base = base;
    buf.step = g;
    buf.coeffs.resize(static_cast<std::size_t>((top - base) / g + 1));
    for (const auto& s : x.terms()) {
        for (const auto& t : y.terms()) {
            const std::int64_t e = s.num + t.num;
            if (e > top) {
                break;
            }
            buf.coeffs[static_cast<std::size_t>((e - base) / g)].add_mul(s.coeff, t.coeff);
        }
    }
    return QSeries::from_sorted(d, buf.collect(), order);
}

QSeries invert(const QSeries& a)
{
    if (a.is_zero()) {
        throw PreconditionError("invert: zero series has no inverse");
    }
    const std::int64_t d = a.denom();
    const auto terms = a.terms();
    const std::int64_t n0 = terms.front().num;
    const Rational e0(n0, d);
    const Rational c0 = terms.front().coeff;
    const Rational order = a.order() - e0 - e0;

    std::int64_t g = 0;
    for (const auto& t : terms) {
        g = gcd64(g, t.num - n0);
    }
    if (g == 0) {
        return QSeries::monomial(-e0, Rational(1) / c0, order);
    }
    // w = 1 / (1 + sum_k u_k q^{k g / d}) on the lattice (g/d) Z.
    const Rational rel_order = a.order() - e0;
    const std::int64_t top = (rel_order * Rational(d)).floor_int();
    if (top < 0) {
        return QSeries(order);
    }
    const std::size_t len = static_cast<std::size_t>(top / g + 1);
    std::vector<std::pair<std::size_t, Rational>> u;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const auto idx = static_cast<std::size_t>((terms[k].num - n0) / g);
        if (idx >= len) {
            break;
        }
        u.emplace_back(idx, terms[k].coeff / c0);
    }
    std::vector<Rational> w(len);
    w[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        Rational acc;
        for (const auto& [k, uk] : u) {
            if (k > n) {
                break;
            }
            if (!w[n - k].is_zero()) {
                acc.add_mul(uk, w[n - k]);
            }
        }
        w[n] = -acc;
    }
    const Rational inv_c0 = Rational(1) / c0;
    std::vector<QSeries::Term> out;
    for (std::size_t n = 0; n < len; ++n) {
        if (!w[n].is_zero()) {
            out.push_back({-n0 + static_cast<std::int64_t>(n) * g, w[n] * inv_c0});
        }
    }
    // Certified order may be below some collected terms when e0 > 0.
    const std::int64_t otop = (order * Rational(d)).floor_int();
    std::erase_if(out, [otop](const QSeries::Term& t) { return t.num > otop; });
    return QSeries::from_sorted(d, std::move(out), order);
}

QSeries divide(const QSeries& a, const QSeries& b) { return mul(a, invert(b)); }

QSeries power(const QSeries& a, unsigned n)
{
    if (n == 0) {
        return QSeries::one(a.order());
    }
    std::optional<QSeries> result;
    QSeries base = a;
    while (true) {
        if (n & 1U) {
            result = result ? mul(*result, base) : base;
        }
        n >>= 1U;
        if (n == 0) {
            break;
        }
        base = mul(base, base);
    }
    return *result;
}

QSeries substitute_power(const QSeries& a, const Rational& r)
{
    if (r.sign() <= 0) {
        throw PreconditionError("substitute_power: r must be positive, got " + r.to_string());
    }
    const BigInt pn = r.num();
    const BigInt qd = r.den();
    if (!pn.fits_slong_p() || !qd.fits_slong_p()) {
        throw std::overflow_error("substitute_power: ratio out of range");
    }
    const std::int64_t p = pn.get_si();
    const std::int64_t q = qd.get_si();
    std::vector<QSeries::Term> out(a.terms().begin(), a.terms().end());
    for (auto& t : out) {
        t.num *= p;
    }
    return QSeries::from_sorted(a.denom() * q, std::move(out), a.order() * r);
}

QSeries truncate(const QSeries& a, const Rational& order)
{
    if (order > a.order()) {
        throw PreconditionError("truncate: requested order " + order.to_string() + " exceeds certified order " +
                                a.order().to_string());
    }
    const std::int64_t top = (order * Rational(a.denom())).floor_int();
    std::vector<QSeries::Term> out;
    for (const auto& t : a.terms()) {
        if (t.num > top) {
            break;
        }
        out.push_back(t);
    }
    return QSeries::from_sorted(a.denom(), std::move(out), order);
}

namespace {

struct FactorLattice {
    std::int64_t denom;
    std::int64_t start;
    std::int64_t step;
    std::int64_t top;
};

FactorLattice factor_lattice(const Rational& start, const Rational& step, long count, const Rational& order)
{
    if (count < 0 && count != infinite_count) {
        throw PreconditionError("pochhammer: count must be nonnegative or infinite");
    }
    if (count == infinite_count && step.sign() <= 0) {
        throw PreconditionError("pochhammer: infinite product needs a positive step");
    }
    if (start.sign() < 0 || (count > 0 && (start + Rational(count - 1) * step).sign() < 0)) {
        throw PreconditionError("pochhammer: factor exponents must be nonnegative");
    }
    const std::int64_t d = lcm64(den64(start), den64(step));
    return {d, scaled_num(start, d), scaled_num(step, d), (order * Rational(d)).floor_int()};
}

// Calls fn(e) for every factor exponent numerator e <= top, in order.
template <typename Fn>
void for_each_factor(const FactorLattice& f, long count, Fn&& fn)
{
    for (long n = 0; count == infinite_count || n < count; ++n) {
        const std::int64_t e = f.start + n * f.step;
        if (e > f.top) {
            if (f.step > 0) {
                break;
            }
            continue;
        }
        fn(e);
    }
}

QSeries finish(const FactorLattice& f, std::vector<Rational>& c, const Rational& order)
{
    std::vector<QSeries::Term> out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) {
            out.push_back({static_cast<std::int64_t>(k), std::move(c[k])});
        }
    }
    return QSeries::from_sorted(f.denom, std::move(out), order);
}

} // namespace

QSeries pochhammer(const Rational& start, const Rational& step, int sign, long count, const Rational& order)
{
    if (sign != 1 && sign != -1) {
        throw PreconditionError("pochhammer: sign must be +1 or -1");
    }
    const FactorLattice f = factor_lattice(start, step, count, order);
    if (f.top < 0) {
        return QSeries(order);
    }
    std::vector<Rational> c(static_cast<std::size_t>(f.top + 1));
    c[0] = 1;
    const Rational s(sign);
    for_each_factor(f, count, [&](std::int64_t e) {
        if (e == 0) {
            for (auto& x : c) {
                x *= Rational(1 + sign);
            }
            return;
        }
        for (std::int64_t k = f.top; k >= e; --k) {
            if (!c[static_cast<std::size_t>(k - e)].is_zero()) {
                c[static_cast<std::size_t>(k)].add_mul(s, c[static_cast<std::size_t>(k - e)]);
            }
        }
    });
    return finish(f, c, order);
}

QSeries inverse_pochhammer(const Rational& start, const Rational& step, int sign, long count,
                           const Rational& order)
{
    if (sign != 1 && sign != -1) {
        throw PreconditionError("pochhammer: sign must be +1 or -1");
    }
    const FactorLattice f = factor_lattice(start, step, count, order);
    if (f.top < 0) {
        return QSeries(order);
    }
    std::vector<Rational> c(static_cast<std::size_t>(f.top + 1));
    c[0] = 1;
    const Rational ms(-sign);
    for_each_factor(f, count, [&](std::int64_t e) {
        if (e == 0) {
            if (sign == -1) {
                throw PreconditionError("inverse_pochhammer: factor (1 - q^0) is zero");
            }
            for (auto& x : c) {
                x /= Rational(2);
            }
            return;
        }
        for (std::int64_t k = e; k <= f.top; ++k) {
            if (!c[static_cast<std::size_t>(k - e)].is_zero()) {
                c[static_cast<std::size_t>(k)].add_mul(ms, c[static_cast<std::size_t>(k - e)]);
            }
        }
    });
    return finish(f, c, order);
}

QSeries q_pochhammer(const Rational& base, long n, const Rational& order)
{
    return pochhammer(base, base, -1, n, order);
}

VerificationReport compare(const QSeries& a, const QSeries& b, const Rational& order)
{
    if (order > a.order() || order > b.order()) {
        throw PreconditionError("compare: order " + order.to_string() + " exceeds certified orders " +
                                a.order().to_string() + ", " + b.order().to_string());
    }
    const std::int64_t d = lcm64(a.denom(), b.denom());
    const std::int64_t top = (order * Rational(d)).floor_int();
    const QSeries x = a.with_denom(d);
    const QSeries y = b.with_denom(d);
    auto i = x.terms().begin();
    auto j = y.terms().begin();
    while (i != x.terms().end() || j != y.terms().end()) {
        std::int64_t e = 0;
        Rational lhs;
        Rational rhs;
        if (j == y.terms().end() || (i != x.terms().end() && i->num < j->num)) {
            e = i->num;
            lhs = i->coeff;
            ++i;
        } else if (i == x.terms().end() || j->num < i->num) {
            e = j->num;
            rhs = j->coeff;
            ++j;
        } else {
            e = i->num;
            lhs = i->coeff;
            rhs = j->coeff;
            ++i;
            ++j;
        }
        if (e > top) {
            break;
        }
        if (lhs != rhs) {
            return make_fail("", order, {Rational(e, d), lhs, rhs});
        }
    }
    return make_pass("", order);
}

Rational leading_shift(const QSeries& a, const QSeries& b)
{
    const auto la = a.leading_exponent();
    const auto lb = b.leading_exponent();
    if (!la || !lb) {
        throw PreconditionError("leading_shift: zero series has no leading term");
    }
    return *la - *lb;
}

VerificationReport make_pass(std::string id, Rational order)
{
    VerificationReport r;
    r.identity_id = std::move(id);
    r.order = std::move(order);
    return r;
}

VerificationReport make_fail(std::string id, Rational order, Mismatch mismatch)
{
    VerificationReport r;
    r.identity_id = std::move(id);
    r.order = std::move(order);
    r.status = Status::fail;
    r.first_mismatch = std::move(mismatch);
    return r;
}

bool all_passed(const ReportList& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

} // namespace swm
