#pragma once

#include <span>
#include <utility>
#include <vector>

#include "swm/rational.hpp"

namespace swm {

/// Dense univariate polynomial, coefficients lowest degree first. The stored
/// sequence never ends in a zero coefficient.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Scalar& a) { return Polynomial(std::vector<Scalar>{a}); }
    /// The identity polynomial t.
    static Polynomial variable() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
    /// a t + b
    static Polynomial linear(const Scalar& a, const Scalar& b) { return Polynomial(std::vector<Scalar>{b, a}); }
    /// prod (t - r) over the given roots
    static Polynomial from_roots(std::span<const Scalar> roots)
    {
        Polynomial p = constant(Scalar(1));
        for (const Scalar& r : roots) {
            p = p * linear(Scalar(1), -r);
        }
        return p;
    }

    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return c_; }
    [[nodiscard]] Scalar operator[](long i) const
    {
        return i >= 0 && i < static_cast<long>(c_.size()) ? c_[i] : Scalar(0);
    }
    [[nodiscard]] Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

    template <typename T>
    [[nodiscard]] T operator()(const T& x) const
    {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x + T(*it);
        }
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            r[i] += a.c_[i];
        }
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            r[i] += b.c_[i];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a) { return Scalar(-1) * a; }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Scalar& s, const Polynomial& a)
    {
        std::vector<Scalar> r = a.c_;
        for (Scalar& x : r) {
            x *= s;
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(r));
    }

private:
    std::vector<Scalar> c_;

    void trim()
    {
        while (!c_.empty() && c_.back() == Scalar(0)) {
            c_.pop_back();
        }
    }
};

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned n)
{
    Polynomial<Scalar> r = Polynomial<Scalar>::constant(Scalar(1));
    for (unsigned i = 0; i < n; ++i) {
        r = r * p;
    }
    return r;
}

/// p(q(t))
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q)
{
    Polynomial<Scalar> acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * q + Polynomial<Scalar>::constant(*it);
    }
    return acc;
}

/// binom(t + a, r) = (t + a)(t + a - 1) ... (t + a - r + 1) / r!
template <typename Scalar>
Polynomial<Scalar> binomial_poly(const Scalar& a, long r)
{
    Polynomial<Scalar> p = Polynomial<Scalar>::constant(Scalar(1));
    Scalar fact(1);
    for (long k = 0; k < r; ++k) {
        p = p * Polynomial<Scalar>::linear(Scalar(1), a - Scalar(k));
        fact *= Scalar(k + 1);
    }
    return (Scalar(1) / fact) * p;
}

/// Unique polynomial of degree < n through n points with distinct abscissae
/// (Newton divided differences).
template <typename Scalar>
Polynomial<Scalar> interpolate(std::span<const std::pair<Scalar, Scalar>> points)
{
    const std::size_t n = points.size();
    std::vector<Scalar> dd;
    dd.reserve(n);
    for (const auto& pt : points) {
        dd.push_back(pt.second);
    }
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Scalar dx = points[i].first - points[i - level].first;
            if (dx == Scalar(0)) {
                throw PreconditionError("interpolate: repeated abscissa");
            }
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    }
    Polynomial<Scalar> p;
    for (std::size_t i = n; i-- > 0;) {
        p = p * Polynomial<Scalar>::linear(Scalar(1), -points[i].first) + Polynomial<Scalar>::constant(dd[i]);
    }
    return p;
}

using RatPoly = Polynomial<Rational>;

} // namespace swm
