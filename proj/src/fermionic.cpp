#include "swm/fermionic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "swm/forms.hpp"
#include "swm/parallel.hpp"

namespace swm {

namespace {

const Rational half(1, 2);

// Lower bound of n^T Q n + L.n over the reals once the first d coordinates
// are fixed: y^T M y + l.y + k (Schur complement of the free block).
struct Level {
    Eigen::MatrixXd M;
    Eigen::VectorXd l;
    double k = 0;

    [[nodiscard]] double bound(const std::vector<long>& n) const
    {
        const auto d = M.rows();
        double s = k;
        for (Eigen::Index a = 0; a < d; ++a) {
            const double na = static_cast<double>(n[a]);
            double row = l(a);
            for (Eigen::Index b = 0; b < d; ++b) {
                row += M(a, b) * static_cast<double>(n[b]);
            }
            s += na * row;
        }
        return s;
    }
};

std::vector<Level> schur_levels(const MultiSum& sum)
{
    const Eigen::MatrixXd Q = to_double(sum.Q);
    const Eigen::VectorXd L = to_double(sum.L);
    const Eigen::Index p = Q.rows();
    std::vector<Level> levels(p + 1);
    for (Eigen::Index d = 0; d <= p; ++d) {
        Level& lv = levels[d];
        if (d == p) {
            lv.M = Q;
            lv.l = L;
            continue;
        }
        const Eigen::Index f = p - d;
        const Eigen::LLT<Eigen::MatrixXd> llt(Q.bottomRightCorner(f, f));
        if (llt.info() != Eigen::Success) {
            throw PreconditionError("multi-sum quadratic form is not positive definite");
        }
        const Eigen::MatrixXd C = Q.bottomLeftCorner(f, d);
        const Eigen::VectorXd Lx = L.tail(f);
        const Eigen::MatrixXd AinvC = llt.solve(C);
        const Eigen::VectorXd AinvL = llt.solve(Lx);
        lv.M = Q.topLeftCorner(d, d) - C.transpose() * AinvC;
        lv.l = L.head(d) - C.transpose() * AinvL;
        lv.k = -0.25 * Lx.dot(AinvL);
    }
    return levels;
}

std::vector<std::vector<long>> pruned_tuples(const MultiSum& sum, const Rational& order)
{
    const std::vector<Level> levels = schur_levels(sum);
    const Eigen::Index p = sum.dim();
    const double lim = (order - sum.c).to_double();
    const double slack = 1e-9 * (1.0 + std::abs(lim));
    std::vector<std::vector<long>> out;
    if (levels[0].k > lim + slack) {
        return out;
    }
    std::vector<long> n(p, 0);
    std::function<void(Eigen::Index)> descend = [&](Eigen::Index d) {
        if (d == p) {
            if (sum.parity_ok(n) && sum.exponent(n) <= order) {
                out.push_back(n);
            }
            return;
        }
        double prev = std::numeric_limits<double>::infinity();
        for (long v = 0;; ++v) {
            n[d] = v;
            std::fill(n.begin() + d + 1, n.end(), 0);
            const double b = levels[d + 1].bound(n);
            if (b <= lim + slack) {
                descend(d + 1);
            } else if (v > 0 && b >= prev) {
                break;
            }
            prev = b;
        }
        n[d] = 0;
    };
    descend(0);
    return out;
}

std::vector<std::vector<long>> box_tuples(const MultiSum& sum, const Rational& order)
{
    const Eigen::Index p = sum.dim();
    const Eigen::MatrixXd Q = to_double(sum.Q);
    const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Q, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (lmin <= 0) {
        throw PreconditionError("multi-sum quadratic form is not positive definite");
    }
    const double lnorm = to_double(sum.L).norm();
    const double lim = (order - sum.c).to_double();
    const double disc = lnorm * lnorm + 4 * lmin * lim;
    std::vector<std::vector<long>> out;
    if (disc < 0) {
        return out;
    }
    const long r = static_cast<long>(std::floor((lnorm + std::sqrt(disc)) / (2 * lmin))) + 1;
    std::vector<long> n(p, 0);
    while (true) {
        if (sum.parity_ok(n) && sum.exponent(n) <= order) {
            out.push_back(n);
        }
        Eigen::Index d = p - 1;
        while (d >= 0 && n[d] == r) {
            n[d] = 0;
            --d;
        }
        if (d < 0) {
            break;
        }
        ++n[d];
    }
    return out;
}

using WeightKey = std::vector<std::pair<Eigen::Index, long>>;

WeightKey weight_key(const MultiSum& sum, const std::vector<long>& n)
{
    WeightKey key;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] > 0) {
            key.emplace_back(sum.symmetric_weights ? 0 : static_cast<Eigen::Index>(i), n[i]);
        }
    }
    if (sum.symmetric_weights) {
        std::sort(key.begin(), key.end());
    }
    return key;
}

std::string str(long v) { return std::to_string(v); }

} // namespace

RationalMatrix cartan_D(long p)
{
    if (p < 3) {
        throw PreconditionError("D_p needs p >= 3");
    }
    RationalMatrix A = RationalMatrix::Zero(p, p);
    for (long i = 0; i < p; ++i) {
        A(i, i) = 2;
    }
    for (long i = 0; i + 1 <= p - 3; ++i) {
        A(i, i + 1) = A(i + 1, i) = -1;
    }
    A(p - 3, p - 2) = A(p - 2, p - 3) = -1;
    A(p - 3, p - 1) = A(p - 1, p - 3) = -1;
    return A;
}

CartanData inverse_cartan_D(long p)
{
    CartanData d;
    d.p = p;
    d.A = cartan_D(p);
    d.B = exact_inverse(d.A);
    return d;
}

Rational MultiSum::exponent(const std::vector<long>& n) const
{
    Rational e = c;
    const Eigen::Index d = dim();
    for (Eigen::Index a = 0; a < d; ++a) {
        if (n[a] == 0) {
            continue;
        }
        Rational row = L(a);
        for (Eigen::Index b = 0; b < d; ++b) {
            if (n[b] != 0) {
                row.add_mul(Q(a, b), Rational(n[b]));
            }
        }
        e.add_mul(row, Rational(n[a]));
    }
    return e;
}

bool MultiSum::parity_ok(const std::vector<long>& n) const
{
    if (parity < 0) {
        return true;
    }
    long s = 0;
    for (const Eigen::Index i : parity_indices) {
        s += n[i];
    }
    return s % 2 == parity;
}

std::vector<std::vector<long>> contributing_tuples(const MultiSum& sum, const Rational& order, Enumerator how)
{
    if (sum.Q.rows() != sum.Q.cols() || sum.L.size() != sum.Q.rows()) {
        throw PreconditionError("multi-sum: inconsistent dimensions");
    }
    return how == Enumerator::pruned ? pruned_tuples(sum, order) : box_tuples(sum, order);
}

QSeries evaluate(const MultiSum& sum, const Rational& order, Enumerator how)
{
    if (static_cast<Eigen::Index>(sum.weights.size()) != sum.dim()) {
        throw PreconditionError("multi-sum: one weight per coordinate required");
    }
    std::map<WeightKey, std::map<Rational, Rational>> buckets;
    Rational lo = 0;
    for (const auto& n : contributing_tuples(sum, order, how)) {
        const Rational e = sum.exponent(n);
        buckets[weight_key(sum, n)][e] += 1;
        lo = min(lo, e);
    }
    const Rational wo = order - lo;

    std::map<std::pair<Eigen::Index, long>, QSeries> single;
    std::map<WeightKey, QSeries> products;
    products.emplace(WeightKey{}, QSeries::one(wo));
    std::function<const QSeries&(const WeightKey&)> product = [&](const WeightKey& key) -> const QSeries& {
        auto it = products.find(key);
        if (it != products.end()) {
            return it->second;
        }
        const WeightKey prefix(key.begin(), key.end() - 1);
        auto [w, fresh] = single.try_emplace(key.back());
        if (fresh) {
            w->second = truncate(sum.weights[key.back().first](key.back().second, wo), wo);
        }
        QSeries value = truncate(product(prefix) * w->second, wo);
        return products.emplace(key, std::move(value)).first->second;
    };

    QSeries total(order);
    for (const auto& [key, exps] : buckets) {
        std::vector<std::pair<Rational, Rational>> terms(exps.begin(), exps.end());
        const QSeries mono = QSeries::make(terms, order);
        total = total + truncate(product(key) * mono, order);
    }
    return total;
}

QSeries inverse_q_pochhammer(long n, const Rational& order) { return inverse_pochhammer(1, 1, -1, n, order); }

MultiSum warnaar_sum(const FermionicSumSpec& spec, const RationalMatrix& B)
{
    const long p = spec.p;
    if (p < 3 || spec.lambda < 0 || spec.lambda > p || (spec.sigma != 0 && spec.sigma != 1) ||
        (spec.variant != 1 && spec.variant != 2) || (spec.parity != 0 && spec.parity != 1)) {
        throw PreconditionError("invalid fermionic sum parameters");
    }
    if (B.rows() != p || B.cols() != p) {
        throw PreconditionError("quadratic form has the wrong size");
    }
    MultiSum s;
    s.Q = B;
    s.L = RationalVector::Zero(p);
    const Rational lam2(spec.lambda, 2);
    s.L(p - 2) = lam2;
    s.L(p - 1) = spec.variant == 1 ? -lam2 : lam2;
    if (spec.variant == 2) {
        for (long i = std::max(1L, p - spec.lambda); i <= p - 2; ++i) {
            s.L(i - 1) += Rational(i - p + spec.lambda + 1);
        }
    }
    s.c = lam2 * Rational(spec.sigma) - Rational(spec.sigma * p, 4);
    s.parity_indices = {p - 2, p - 1};
    s.parity = spec.parity;
    s.weights.assign(p, inverse_q_pochhammer);
    s.symmetric_weights = true;
    return s;
}

QSeries warnaar_lhs(const FermionicSumSpec& spec, const Rational& order, const RationalMatrix& B)
{
    return evaluate(warnaar_sum(spec, B), order);
}

QSeries warnaar_lhs(const FermionicSumSpec& spec, const Rational& order)
{
    return warnaar_lhs(spec, order, inverse_cartan_D(spec.p).B);
}

QSeries warnaar_rhs(const FermionicSumSpec& spec, const Rational& order)
{
    const long p = spec.p;
    const long b = spec.lambda - spec.sigma * p;
    std::map<Rational, Rational> acc;
    auto visit = [&](long n) {
        const Rational e(p * n * n + b * n);
        if (e > order) {
            return false;
        }
        acc[e] += spec.variant == 1 ? Rational(1) : Rational(2 * n - spec.sigma + 1);
        return true;
    };
    for (long n = 0; visit(n) || n <= 0; ++n) {
    }
    for (long n = -1; visit(n) || n >= -1; --n) {
    }
    std::vector<std::pair<Rational, Rational>> terms(acc.begin(), acc.end());
    return truncate(QSeries::make(terms, order) * inverse_q_pochhammer(infinite_count, order), order);
}

IdentityList warnaar_identities(long p, const RationalMatrix& B)
{
    IdentityList out;
    for (int variant = 1; variant <= 2; ++variant) {
        for (long lambda = 0; lambda <= p; ++lambda) {
            for (int sigma = 0; sigma <= 1; ++sigma) {
                const FermionicSumSpec spec{p, lambda, sigma, variant, sigma};
                out.push_back({"warnaar_variant" + str(variant),
                               {{"p", str(p)}, {"lambda", str(lambda)}, {"sigma", str(sigma)}},
                               [spec, B](const Rational& order) {
                                   return std::pair{warnaar_lhs(spec, order, B), warnaar_rhs(spec, order)};
                               }});
            }
        }
    }
    return out;
}

ReportList verify_warnaar(long p, const Rational& order)
{
    return verify_identities(warnaar_identities(p, inverse_cartan_D(p).B), order);
}

QSeries adm_sum(long m, long lambda, int sigma, int parity, const Rational& order)
{
    const long p = 2 * m + 1;
    const Rational c = Rational(lambda * sigma, 2) - Rational(sigma * p, 4);
    const Rational n = order - min(c / 2, Rational(0));
    const QSeries w = warnaar_lhs({p, lambda, sigma, 2, parity}, n * 2);
    return truncate(substitute_power(w, half) * inverse_pochhammer(1, 1, +1, infinite_count, n), order);
}

FermionicChar fermionic_sw_char(const SWModuleId& id, const Rational& order)
{
    const long m = id.m;
    const bool lam = id.kind == SWModuleId::Kind::lambda;
    FermionicChar out;
    out.series = lam ? adm_sum(m, 2 * m - 2 * id.i, 0, 0, order) : adm_sum(m, 2 * id.i + 1, 1, 1, order);
    const auto d = central_data(m);
    const long r = lam ? 2 * id.i + 1 : 2 * (2 * m + 1 + id.i) + 1;
    const Rational expected_lead = d.h(r, 1) - d.c / 24;
    const Rational s0 = out.series.leading_exponent().value_or(order);
    const QSeries ch = sw_char(id, max(order + expected_lead - s0, expected_lead));
    out.shift = leading_shift(ch, out.series);
    return out;
}

ReportList verify_fermionic_chars(long m, const Rational& order)
{
    const auto ids = SWModuleId::all(m);
    return parallel_map(ids.size(), [&](std::size_t k) {
        const SWModuleId& id = ids[k];
        Rational sh;
        VerificationReport r = timed([&] {
            const FermionicChar fc = fermionic_sw_char(id, order);
            sh = fc.shift;
            const QSeries rhs = shift(sw_char(id, order + fc.shift), -fc.shift);
            return compare(fc.series, rhs, order);
        });
        r.identity_id = "fermionic_character";
        r.params = {{"m", str(m)}, {"module", id.to_string()}, {"shift", sh.to_string()}};
        return r;
    });
}

IdentityList aux_identities()
{
    IdentityList out;
    auto neg_half = [](long n, const Rational& order) { return pochhammer(half, half, +1, n, order); };

    for (long k = 0; k <= 3; ++k) {
        auto durfee = [k](bool second, const Rational& order) {
            QSeries total(order);
            for (long n = 0; Rational(n * n + k * n, 2) <= order; ++n) {
                const QSeries mono = QSeries::monomial(Rational(n * n + k * n, 2), 1, order);
                QSeries w = second ? pochhammer(half, half, +1, n, order) * pochhammer(half, half, +1, n + k, order) *
                                         inverse_q_pochhammer(n, order) * inverse_q_pochhammer(n + k, order)
                                   : inverse_pochhammer(half, half, -1, n, order) *
                                         inverse_pochhammer(half, half, -1, n + k, order);
                total = total + truncate(mono * w, order);
            }
            return total;
        };
        out.push_back({"durfee_k" + str(k), {}, [durfee](const Rational& order) {
                           return std::pair{inverse_pochhammer(half, half, -1, infinite_count, order),
                                            durfee(false, order)};
                       }});
        out.push_back({"durfee_k" + str(k) + "_pochhammer", {}, [durfee](const Rational& order) {
                           return std::pair{inverse_pochhammer(half, half, -1, infinite_count, order),
                                            durfee(true, order)};
                       }});
    }

    out.push_back({"euler", {}, [](const Rational& order) {
                       const Rational pre(1, 24);
                       const Rational n = order - pre;
                       QSeries total(n);
                       for (long k = 0; k * (k + 1) / 2 <= n; ++k) {
                           const QSeries mono = QSeries::monomial(Rational(k * (k + 1), 2), k % 2 == 0 ? 1 : -1, n);
                           total = total + truncate(mono * inverse_q_pochhammer(k, n), n);
                       }
                       return std::pair{eta(order), shift(total, pre)};
                   }});

    auto modify_lhs = [](const Rational& order) {
        return truncate(f_over_eta(order) * dtheta({1, Rational(3, 2)}, order + Rational(1, 16)), order);
    };
    const Rational pre(5, 48);
    out.push_back({"modify_char_eta", {}, [modify_lhs](const Rational& order) {
                       return std::pair{modify_lhs(order),
                                        truncate(eta_scaled(2, order) * eta_scaled(half, order), order)};
                   }});
    out.push_back({"modify_char_product", {}, [modify_lhs, pre](const Rational& order) {
                       const Rational n = order - pre;
                       const QSeries prod = pochhammer(2, 2, -1, infinite_count, n) *
                                            pochhammer(half, half, -1, infinite_count, n);
                       return std::pair{modify_lhs(order), shift(prod, pre)};
                   }});
    out.push_back({"modify_char_double_sum", {}, [modify_lhs, pre, neg_half](const Rational& order) {
                       MultiSum s;
                       s.Q = RationalMatrix::Zero(2, 2);
                       s.Q(0, 0) = 1;
                       s.Q(1, 1) = Rational(1, 4);
                       s.L = RationalVector::Zero(2);
                       s.L(0) = 1;
                       s.L(1) = Rational(1, 4);
                       s.c = pre;
                       s.weights = {[](long n, const Rational& o) {
                                        return scale(inverse_pochhammer(2, 2, -1, n, o), n % 2 == 0 ? 1 : -1);
                                    },
                                    [neg_half](long n, const Rational& o) {
                                        return scale(neg_half(n, o) * inverse_q_pochhammer(n, o), n % 2 == 0 ? 1 : -1);
                                    }};
                       return std::pair{modify_lhs(order), evaluate(s, order)};
                   }});

    out.push_back({"form_1_2_2", {}, [pre, neg_half](const Rational& order) {
                       MultiSum s;
                       s.Q = RationalMatrix::Zero(2, 2);
                       s.Q(0, 0) = s.Q(1, 1) = Rational(3, 8);
                       s.Q(0, 1) = s.Q(1, 0) = Rational(-1, 8);
                       s.L = RationalVector::Zero(2);
                       s.L(0) = half;
                       s.L(1) = -half;
                       s.c = pre;
                       s.parity_indices = {0, 1};
                       s.parity = 0;
                       const WeightFn w = [neg_half](long n, const Rational& o) {
                           return neg_half(n, o) * inverse_q_pochhammer(n, o);
                       };
                       s.weights = {w, w};
                       s.symmetric_weights = true;
                       const Rational n = order + 1;
                       const QSeries rhs = evaluate(s, n) * inverse_pochhammer(1, 1, +1, infinite_count, n);
                       const QSeries lhs =
                           f_over_eta(order) * theta({1, Rational(3, 2)}, order + Rational(1, 16));
                       return std::pair{truncate(lhs, order), truncate(rhs, order)};
                   }});
    return out;
}

ReportList verify_aux_identities(const Rational& order)
{
    if (order < 10) {
        throw PreconditionError("verify_aux_identities: order must be at least 10");
    }
    return verify_identities(aux_identities(), order);
}

} // namespace swm
