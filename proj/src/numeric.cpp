#include "swm/numeric.hpp"

#include <Eigen/Dense>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "swm/forms.hpp"

namespace swm {

namespace {

constexpr long double two_pi = 2 * std::numbers::pi_v<long double>;
const Complex I(0, 1);

Complex cis(long double phase) { return std::polar(1.0L, phase); }

TauPoint at(Complex z) { return TauPoint(z); }

long double to_ld(const Rational& r) { return static_cast<long double>(r.to_double()); }

std::string sci(long double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3Le", x);
    return buf;
}

struct Law {
    Approx lhs;
    Complex rhs;
    long double rhs_error = 0;
};

VerificationReport judge(std::string id, std::map<std::string, std::string> params, const Rational& order,
                         const Law& law, long double tol)
{
    const long double residual = std::abs(law.lhs.value - law.rhs);
    const long double bound = residual + law.lhs.error + law.rhs_error;
    params["residual"] = sci(residual);
    params["error_bound"] = sci(law.lhs.error + law.rhs_error);
    VerificationReport r = bound < tol ? make_pass(std::move(id), order)
                                       : make_fail(std::move(id), order,
                                                   {0, Rational::from_double(static_cast<double>(bound)),
                                                    Rational::from_double(static_cast<double>(tol))});
    r.params = std::move(params);
    return r;
}

// Sum of c_j * f_j with the error bounds scaled accordingly.
struct Accum {
    Complex value = 0;
    long double error = 0;

    void add(const Complex& c, const Approx& a)
    {
        value += c * a.value;
        error += std::abs(c) * a.error;
    }
};

} // namespace

TauPoint::TauPoint(double re_, double im_) : re(re_), im(im_)
{
    if (!(im > 0) || !std::isfinite(re) || !std::isfinite(im)) {
        throw PreconditionError("tau must lie in the upper half-plane");
    }
}

TauPoint::TauPoint(Complex z) : TauPoint(static_cast<double>(z.real()), static_cast<double>(z.imag())) {}

long double TauPoint::abs_q() const { return std::exp(-two_pi * im); }

std::string TauPoint::to_string() const
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g%+gi", re, im);
    return buf;
}

TauPoint TauPoint::parse(const std::string& text)
{
    std::string s;
    for (char c : text) {
        if (c != ' ') {
            s += c;
        }
    }
    auto fail = [&]() -> TauPoint { throw PreconditionError("cannot parse tau '" + text + "'"); };
    if (s.empty()) {
        return fail();
    }
    try {
        if (s.back() != 'i') {
            return {std::stod(s), 0};
        }
        s.pop_back();
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size(); k-- > 1;) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        const std::string re = split == std::string::npos ? "" : s.substr(0, split);
        std::string im = split == std::string::npos ? s : s.substr(split);
        if (im.empty() || im == "+") {
            im = "1";
        } else if (im == "-") {
            im = "-1";
        }
        std::size_t used = 0;
        const double imv = std::stod(im, &used);
        if (used != im.size()) {
            return fail();
        }
        double rev = 0;
        if (!re.empty()) {
            rev = std::stod(re, &used);
            if (used != re.size()) {
                return fail();
            }
        }
        return {rev, imv};
    } catch (const PreconditionError&) {
        throw;
    } catch (const std::logic_error&) {
        return fail();
    }
}

Approx eval_series(const QSeries& a, const TauPoint& tau, long double tol)
{
    const long double aq = tau.abs_q();
    Complex sum = 0;
    long double abs_sum = 0;
    long double max_coeff = 0;
    for (const auto& t : a.terms()) {
        const long double e = to_ld(a.exponent_of(t));
        const long double c = to_ld(t.coeff);
        const Complex term = c * std::exp(-two_pi * tau.im * e) * cis(two_pi * tau.re * e);
        sum += term;
        abs_sum += std::abs(term);
        max_coeff = std::max(max_coeff, std::abs(c));
    }
    max_coeff = std::max(max_coeff, 1.0L);
    const long double d = static_cast<long double>(a.denom());
    const long double first_missing = std::floor(to_ld(a.order()) * d + 1) / d;
    const long double ratio = std::pow(aq, 1 / d);
    const long double tail = max_coeff * std::pow(aq, first_missing) / (1 - ratio);
    const long double rounding =
        abs_sum * (DBL_EPSILON + 8 * static_cast<long double>(a.size() + 1) * LDBL_EPSILON);
    if (rounding > tol) {
        throw PreconditionError("tolerance " + sci(tol) + " is below the rounding level " + sci(rounding));
    }
    if (tail + rounding > tol) {
        const long double need = std::log((tol - rounding) * (1 - ratio) / max_coeff) / std::log(aq);
        throw PreconditionError("truncation tail " + sci(tail) + " exceeds tolerance " + sci(tol) +
                                "; order of at least " + std::to_string(static_cast<long>(std::ceil(need))) +
                                " is needed");
    }
    return {sum, tail + rounding};
}

ReportList verify_s_t_laws(const std::vector<TauPoint>& taus, const Rational& order, long double tol)
{
    if (order <= 0) {
        throw PreconditionError("order must be positive");
    }
    const QSeries eta_s = eta(order);
    const std::vector<Rational> ks{1, Rational(3, 2), Rational(5, 2), 3, 6, 10};

    // theta and dtheta series by (j, k), built once
    std::map<std::pair<long, Rational>, std::pair<QSeries, QSeries>> cache;
    auto series = [&](long j, const Rational& k) -> const std::pair<QSeries, QSeries>& {
        auto it = cache.find({j, k});
        if (it == cache.end()) {
            it = cache.emplace(std::pair{j, k}, std::pair{theta({j, k}, order), dtheta({j, k}, order)}).first;
        }
        return it->second;
    };

    ReportList out;
    for (const TauPoint& tp : taus) {
        const Complex tau = tp.z();
        const std::string ts = tp.to_string();
        const TauPoint s_tau = at(Complex(-1) / tau);
        const TauPoint t1 = at(tau + Complex(1));
        const TauPoint t2 = at(tau + Complex(2));
        const TauPoint dbl = at(Complex(2) * tau);
        auto ev = [&](const QSeries& s, const TauPoint& p) { return eval_series(s, p, tol / 64); };

        const Approx e_tau = ev(eta_s, tp);
        {
            const Complex pre = std::sqrt(-I * tau);
            Law law{ev(eta_s, s_tau), pre * e_tau.value, std::abs(pre) * e_tau.error};
            out.push_back(judge("eta_s_law", {{"tau", ts}}, order, law, tol));
        }
        {
            const Complex pre = cis(std::numbers::pi_v<long double> / 12);
            Law law{ev(eta_s, t1), pre * e_tau.value, e_tau.error};
            out.push_back(judge("eta_t_law", {{"tau", ts}}, order, law, tol));
        }

        for (const Rational& k : ks) {
            const long double kd = to_ld(k);
            const bool integral = k.is_integer();
            const long two_k = (k * 2).floor_int();
            // S-law data: level, evaluation point and number of indices
            const Rational level = integral ? k : k * 2;
            const TauPoint& s_point = integral ? tp : dbl;
            const long count = integral ? two_k : 2 * two_k;
            const Complex pre = std::sqrt(-I * tau / (2 * kd));

            for (long j = 0; j < two_k; ++j) {
                const std::map<std::string, std::string> params{{"tau", ts}, {"j", std::to_string(j)}, {"k", k.to_string()}};
                const auto& [th, dth] = series(j, k);
                const Complex t2_phase = cis(std::numbers::pi_v<long double> * j * j / kd);

                const Approx th_tau = ev(th, tp);
                const Approx dth_tau = ev(dth, tp);
                out.push_back(judge("theta_t2_law", params, order,
                                    {ev(th, t2), t2_phase * th_tau.value, th_tau.error}, tol));
                out.push_back(judge("dtheta_t2_law", params, order,
                                    {ev(dth, t2), t2_phase * dth_tau.value, dth_tau.error}, tol));

                Accum th_sum;
                Accum dth_sum;
                for (long jp = 0; jp < count; ++jp) {
                    const Complex phase = cis(std::numbers::pi_v<long double> * j * jp / kd);
                    const auto& [a, b] = series(jp, level);
                    th_sum.add(phase, ev(a, s_point));
                    if (jp >= 1) {
                        dth_sum.add(phase, ev(b, s_point));
                    }
                }
                out.push_back(judge("theta_s_law", params, order,
                                    {ev(th, s_tau), pre * th_sum.value, std::abs(pre) * th_sum.error}, tol));
                const Complex dpre = -tau * pre;
                out.push_back(judge("dtheta_s_law", params, order,
                                    {ev(dth, s_tau), dpre * dth_sum.value, std::abs(dpre) * dth_sum.error}, tol));
            }
        }
    }
    return out;
}

RankResult ns_space_rank(long m, const std::vector<TauPoint>& taus, const Rational& order)
{
    const long n = 3 * m + 1;
    if (static_cast<long>(taus.size()) != n) {
        throw PreconditionError("ns_space_rank needs exactly 3m+1 = " + std::to_string(n) + " points");
    }
    std::set<std::pair<double, double>> seen;
    for (const TauPoint& t : taus) {
        if (!seen.emplace(t.re, t.im).second) {
            throw PreconditionError("ns_space_rank: repeated point " + t.to_string());
        }
    }
    std::vector<QSeries> fns;
    for (const SWModuleId& id : SWModuleId::all(m)) {
        fns.push_back(sw_char(id, order));
    }
    const QSeries fe = f_over_eta(order);
    for (long i = 0; i < m; ++i) {
        fns.push_back(truncate(fe * dtheta({m - i, Rational(2 * m + 1, 2)}, order + Rational(1, 16)), order));
    }
    Eigen::MatrixXcd M(n, n);
    const long double tol = 1e-9L;
    for (long a = 0; a < n; ++a) {
        for (long b = 0; b < n; ++b) {
            Complex v = eval_series(fns[b], taus[a], tol).value;
            if (b >= 2 * m + 1) {
                v *= taus[a].z();
            }
            M(a, b) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
        }
    }
    // unit columns: the rank is unchanged and the functions' very different
    // sizes no longer dominate the singular values
    for (long b = 0; b < n; ++b) {
        M.col(b).normalize();
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(M).singularValues();
    RankResult r;
    r.max_singular_value = sv(0);
    r.min_singular_value = sv(n - 1);
    for (long i = 0; i < n; ++i) {
        if (sv(i) > rank_threshold * sv(0)) {
            ++r.rank;
        }
    }
    return r;
}

std::vector<TauPoint> default_law_points() { return {{0, 1}, {0.3, 1.1}, {-0.4, 0.9}}; }

std::vector<TauPoint> default_rank_points(long m)
{
    const long n = 3 * m + 1;
    std::vector<TauPoint> t;
    for (long a = 0; a < n; ++a) {
        t.emplace_back(-0.5 + static_cast<double>(a) / n, 0.3 + 2.5 * static_cast<double>((3 * a) % n) / n);
    }
    return t;
}

VerificationReport verify_ns_rank(long m, const Rational& order)
{
    RankResult rr;
    VerificationReport r = timed([&] {
        rr = ns_space_rank(m, default_rank_points(m), order);
        const long want = 3 * m + 1;
        return rr.rank == want ? make_pass("ns_space_rank", order)
                               : make_fail("ns_space_rank", order, {0, Rational(rr.rank), Rational(want)});
    });
    r.params = {{"m", std::to_string(m)},
                {"rank", std::to_string(rr.rank)},
                {"min_singular_value", sci(rr.min_singular_value)},
                {"max_singular_value", sci(rr.max_singular_value)},
                {"threshold", sci(rank_threshold)}};
    return r;
}

std::vector<std::pair<SWModuleId, Complex>> t_ratios(long m, const TauPoint& tau, const Rational& order)
{
    std::vector<std::pair<SWModuleId, Complex>> out;
    const TauPoint t1 = at(tau.z() + Complex(1));
    for (const SWModuleId& id : SWModuleId::all(m)) {
        const Complex num = eval_series(sw_char(id, order), t1, 1e-9L).value;
        const Complex den = eval_series(sw_superchar_theta(id, order), tau, 1e-9L).value;
        out.emplace_back(id, num / den);
    }
    return out;
}

} // namespace swm
