#include "swm/zhupoly.hpp"

#include <stdexcept>

#include "swm/characters.hpp"

namespace swm {

namespace {

void check_m(long m)
{
    if (m < 1) {
        throw PreconditionError("m must be a positive integer, got " + std::to_string(m));
    }
}

RatPoly x_minus(const Rational& root) { return RatPoly::linear(1, -root); }

Rational h(long m, long i) { return weight_h(m, 2 * i + 1, 1); }

RatPoly shifted(const RatPoly& p, long by) { return compose(p, RatPoly::linear(1, Rational(-by))); }

VerificationReport with_m(VerificationReport r, long m)
{
    r.params = {{"m", std::to_string(m)}};
    return r;
}

} // namespace

RatPoly weight_param(long m)
{
    check_m(m);
    return Rational(1, 2 * (2 * m + 1)) * RatPoly(std::vector<Rational>{0, Rational(-2 * m), 1});
}

RatPoly curve_y_param(long m)
{
    check_m(m);
    return binomial_poly(Rational(0), 2 * m + 1);
}

Rational curve_constant(long m)
{
    check_m(m);
    const Rational f(factorial(2 * m + 1));
    return pow(Rational(2 * (2 * m + 1)), 2 * m + 1) / (f * f);
}

Rational displayed_curve_constant(long m)
{
    check_m(m);
    return pow(Rational(2), 2 * m + 1) * pow(Rational(2 * m + 1), 2 * m + 1) / Rational(factorial(2 * m + 1));
}

RatPoly curve_residual(long m, const Rational& C)
{
    const RatPoly y = curve_y_param(m);
    RatPoly prod = RatPoly::constant(1);
    const RatPoly x = weight_param(m);
    for (long i = 0; i <= 2 * m; ++i) {
        prod = prod * (x - RatPoly::constant(h(m, i)));
    }
    return y * y - C * prod;
}

SingletCurve singlet_curve(long m)
{
    SingletCurve c;
    c.m = m;
    c.Cm = curve_constant(m);
    c.x_param = weight_param(m);
    c.y_param = curve_y_param(m);
    c.weight_poly = RatPoly::constant(1);
    for (long i = 0; i <= 2 * m; ++i) {
        c.weight_poly = c.weight_poly * x_minus(h(m, i));
    }
    if (!(c.y_param * c.y_param - c.Cm * compose(c.weight_poly, c.x_param)).is_zero()) {
        throw std::logic_error("curve relation fails on the parametrization");
    }
    return c;
}

RatPoly f_m_poly(long m)
{
    check_m(m);
    RatPoly p = RatPoly::constant(1);
    for (long i = 0; i <= 3 * m; ++i) {
        p = p * x_minus(h(m, i));
    }
    return p;
}

RatPoly f_m_factored(long m)
{
    check_m(m);
    RatPoly p = x_minus(h(m, m));
    for (long i = 0; i < m; ++i) {
        p = p * pow(x_minus(h(m, i)), 2);
    }
    for (long i = 2 * m + 1; i <= 3 * m; ++i) {
        p = p * x_minus(h(m, i));
    }
    return p;
}

RatPoly phi_tilde(long m)
{
    check_m(m);
    RatPoly sum;
    for (long k = 0; k <= 2 * m; ++k) {
        const Rational c = Rational(binomial(2 * m, k)) * Rational(k % 2 == 0 ? 1 : -1);
        sum = sum + c * (binomial_poly(Rational(0), 4 * m + 1 - k) * binomial_poly(Rational(0), 2 * m + 1 + k));
    }
    return sum;
}

Rational A_bar(long m)
{
    check_m(m);
    return Rational(m % 2 == 0 ? 1 : -1) * Rational(binomial(2 * m, m)) / Rational(binomial(4 * m + 1, m));
}

Rational B_m(long m)
{
    check_m(m);
    const Rational f(factorial(3 * m + 1));
    return A_bar(m) * pow(Rational(2 * (2 * m + 1)), 3 * m + 1) / (f * f);
}

VerificationReport compare_polys(std::string id, const RatPoly& a, const RatPoly& b)
{
    const long deg = std::max(a.degree(), b.degree());
    for (long i = 0; i <= deg; ++i) {
        if (a[i] != b[i]) {
            return make_fail(std::move(id), Rational(deg), {Rational(i), a[i], b[i]});
        }
    }
    return make_pass(std::move(id), Rational(std::max(deg, 0L)));
}

ReportList verify_phi_identities(long m)
{
    const RatPoly phi = phi_tilde(m);
    ReportList out;
    out.push_back(with_m(timed([&] {
                             const RatPoly rhs = A_bar(m) * (binomial_poly(Rational(0), 3 * m + 1) *
                                                            binomial_poly(Rational(m), 3 * m + 1));
                             return compare_polys("phi_abar_product", phi, rhs);
                         }),
                         m));
    out.push_back(with_m(timed([&] {
                             return compare_polys("phi_b_f_composition", phi,
                                                  B_m(m) * compose(f_m_poly(m), weight_param(m)));
                         }),
                         m));
    return out;
}

Interpolation interpolation_L(long m)
{
    check_m(m);
    std::vector<std::pair<Rational, Rational>> pts;
    for (long i = 2 * m + 1; i <= 3 * m; ++i) {
        pts.emplace_back(h(m, i), Rational(binomial(i, 2 * m + 1)));
    }
    Interpolation out;
    out.L = interpolate<Rational>(pts);
    out.r = compose(out.L, weight_param(m));

    // prod/(2m+1)! * sum_i c_i (1/(t - i) - 1/(t - 2m + i))
    std::vector<Rational> roots;
    for (long i = 2 * m + 1; i <= 3 * m; ++i) {
        roots.emplace_back(i);
        roots.emplace_back(2 * m - i);
    }
    auto without = [&](const Rational& root) {
        RatPoly p = RatPoly::constant(1);
        for (const Rational& r : roots) {
            if (r != root) {
                p = p * x_minus(r);
            }
        }
        return p;
    };
    RatPoly sum;
    for (long i = 2 * m + 1; i <= 3 * m; ++i) {
        const Rational fi(factorial(i));
        const Rational fd(factorial(i - 2 * m - 1));
        const Rational c = Rational((i + m) % 2 == 0 ? 1 : -1) * fi * fi /
                           (fd * fd * Rational(factorial(3 * m - i)) * Rational(factorial(i + m)));
        sum = sum + c * (without(Rational(i)) - without(Rational(2 * m - i)));
    }
    out.r_closed = (Rational(1) / Rational(factorial(2 * m + 1))) * sum;
    return out;
}

RatPoly s_denominator(long m)
{
    check_m(m);
    RatPoly d = RatPoly::constant(1);
    for (long i = 2 * m + 1; i <= 3 * m; ++i) {
        d = d * x_minus(Rational(i)) * x_minus(Rational(2 * m - i));
    }
    return d;
}

Rational s_value(long m, long t)
{
    const Rational den = s_denominator(m)(Rational(t));
    if (den.is_zero()) {
        throw PreconditionError("s(t) has a pole at t = " + std::to_string(t));
    }
    return interpolation_L(m).r(Rational(t)) / den;
}

VerificationReport verify_s_properties(long m)
{
    return with_m(timed([&] {
                      const std::string id = "s_properties";
                      const Interpolation ip = interpolation_L(m);
                      const RatPoly D = s_denominator(m);
                      const RatPoly t = RatPoly::variable();
                      auto c = [](long v) { return RatPoly::constant(Rational(v)); };
                      const RatPoly mm = c(m);
                      const RatPoly lhs =
                          ip.r * (mm + t) * pow(c(2 * m + 1) - t, 2) * shifted(D, 1) * shifted(D, 2);
                      const RatPoly k1 = c(2) * (c(m + 1) - t) *
                                         (c(2 * m * m - 2) + c(2 * m) * t - t * t + c(2) * t);
                      const RatPoly rhs = k1 * shifted(ip.r, 1) * D * shifted(D, 2) +
                                          pow(t - c(1), 2) * (c(3 * m + 2) - t) * shifted(ip.r, 2) * D * shifted(D, 1);
                      VerificationReport rec = compare_polys(id, lhs, rhs);
                      if (!rec.passed()) {
                          return rec;
                      }
                      for (long tv = 0; tv <= 1; ++tv) {
                          const Rational s = ip.r(Rational(tv)) / D(Rational(tv));
                          if (s.sign() >= 0) {
                              return make_fail(id, rec.order, {Rational(tv), s, 0});
                          }
                      }
                      for (long i = 0; i <= m; ++i) {
                          const Rational v = ip.L(h(m, i));
                          if (v.is_zero()) {
                              return make_fail(id, rec.order, {Rational(i), v, 0});
                          }
                      }
                      return rec;
                  }),
                  m);
}

ReportList verify_zhu_suite(long m)
{
    ReportList out;
    out.push_back(with_m(timed([&] { return compare_polys("curve_relation", curve_residual(m, curve_constant(m)), {}); }),
                         m));
    out.push_back(with_m(timed([&] { return compare_polys("fm_factorization", f_m_poly(m), f_m_factored(m)); }), m));
    for (auto& r : verify_phi_identities(m)) {
        out.push_back(std::move(r));
    }
    const Interpolation ip = interpolation_L(m);
    out.push_back(with_m(timed([&] { return compare_polys("interpolation_closed_form", ip.r, ip.r_closed); }), m));
    out.push_back(with_m(timed([&] {
                             if (ip.L.degree() != m - 1) {
                                 return make_fail("interpolation_degree", 0,
                                                  {0, Rational(ip.L.degree()), Rational(m - 1)});
                             }
                             return make_pass("interpolation_degree", 0);
                         }),
                         m));
    out.push_back(verify_s_properties(m));
    return out;
}

} // namespace swm
