#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "swm/rational.hpp"
#include "swm/report.hpp"

namespace swm {

/// Truncated formal power series in q with exponents in (1/D)Z.
///
/// Terms are stored sparsely as (numerator, coefficient) pairs sorted by
/// numerator, over the per-series denominator D. Every stored coefficient is
/// nonzero. The truncation order N certifies that every coefficient of q^x
/// with x <= N is exact; no term above N is stored.
class QSeries {
public:
    struct Term {
        std::int64_t num;
        Rational coeff;
    };

    /// The zero series, certified up to `order`.
    explicit QSeries(Rational order = 0);

    /// Builds a canonical series from (exponent, coefficient) pairs.
    /// Throws PreconditionError on duplicate exponents or exponent > order.
    static QSeries make(std::span<const std::pair<Rational, Rational>> terms, Rational order);
    static QSeries make(std::initializer_list<std::pair<Rational, Rational>> terms, Rational order);
    static QSeries monomial(const Rational& exponent, const Rational& coeff, Rational order);
    static QSeries one(Rational order) { return monomial(0, 1, std::move(order)); }

    /// Internal constructor: terms must be sorted, nonzero and <= order.
    static QSeries from_sorted(std::int64_t denom, std::vector<Term> terms, Rational order);

    [[nodiscard]] std::int64_t denom() const { return denom_; }
    [[nodiscard]] const Rational& order() const { return order_; }
    [[nodiscard]] std::span<const Term> terms() const { return terms_; }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Rational exponent_of(const Term& t) const { return {t.num, denom_}; }
    [[nodiscard]] Rational coefficient(const Rational& exponent) const;
    [[nodiscard]] std::optional<Rational> leading_exponent() const;
    [[nodiscard]] Rational leading_coefficient() const;
    [[nodiscard]] std::vector<std::pair<Rational, Rational>> to_pairs() const;

    /// Same content re-expressed over denominator `d` (a multiple of the
    /// minimal denominator).
    [[nodiscard]] QSeries with_denom(std::int64_t d) const;

    /// Coefficient-wise equality of content up to the smaller order; orders
    /// are ignored.
    [[nodiscard]] bool same_terms(const QSeries& other) const;

private:
    std::int64_t denom_ = 1;
    std::vector<Term> terms_;
    Rational order_;

    void canonicalize_denom();
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries scale(const QSeries& a, const Rational& c);
/// Multiplies by q^e; the order shifts with it.
QSeries shift(const QSeries& a, const Rational& e);
QSeries mul(const QSeries& a, const QSeries& b);
/// Multiplicative inverse; throws PreconditionError for the zero series.
QSeries invert(const QSeries& a);
QSeries divide(const QSeries& a, const QSeries& b);
QSeries power(const QSeries& a, unsigned n);
/// q -> q^r (tau -> r tau); r must be positive.
QSeries substitute_power(const QSeries& a, const Rational& r);
/// Drops terms above `order` and lowers the certified order to it.
QSeries truncate(const QSeries& a, const Rational& order);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator*(const Rational& c, const QSeries& a) { return scale(a, c); }
inline QSeries operator/(const QSeries& a, const QSeries& b) { return divide(a, b); }

/// Count used to request an infinite product in pochhammer().
inline constexpr long infinite_count = -1;

/// prod_{n=0}^{count-1} (1 + sign * q^{start + n step}), exact up to `order`.
/// count == infinite_count multiplies every factor whose exponent is <= order.
QSeries pochhammer(const Rational& start, const Rational& step, int sign, long count, const Rational& order);
/// The reciprocal of pochhammer() with the same arguments, computed factor by
/// factor as geometric series.
QSeries inverse_pochhammer(const Rational& start, const Rational& step, int sign, long count, const Rational& order);

/// (q^a; q^a)_n = prod_{k=1}^{n} (1 - q^{a k}).
QSeries q_pochhammer(const Rational& base, long n, const Rational& order);

/// Checks a == b coefficient-wise for exponents <= order. Refuses (throws
/// PreconditionError) when order exceeds either certified order.
VerificationReport compare(const QSeries& a, const QSeries& b, const Rational& order);

/// Exponent e with lead(a) = lead(b) + e. Throws when either is zero.
Rational leading_shift(const QSeries& a, const QSeries& b);

} // namespace swm
