// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "swm/characters.hpp"
#include "swm/fermionic.hpp"
#include "swm/forms.hpp"
#include "swm/gmverify.hpp"
#include "swm/numeric.hpp"
#include "swm/zhupoly.hpp"

using namespace swm;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok) {
                detail << "; failed:";
            }
            ok = false;
            detail << ' ' << what;
        }
    }
    void require(const VerificationReport& r)
    {
        std::string what = r.identity_id;
        for (const auto& [k, v] : r.params) {
            if (k != "residual" && k != "error_bound") {
                what += ' ' + k + '=' + v;
            }
        }
        if (r.first_mismatch) {
            what += " @q^" + r.first_mismatch->exponent.to_string() + " lhs=" + r.first_mismatch->lhs.to_string() +
                    " rhs=" + r.first_mismatch->rhs.to_string();
        }
        require(r.passed(), "[" + what + "]");
    }
    void require(const ReportList& rs)
    {
        for (const auto& r : rs) {
            require(r);
        }
    }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Outcome&)>& body, double limit_s = 0)
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0) {
        o.require(secs < limit_s, "runtime over " + std::to_string(static_cast<int>(limit_s)) + " s");
    }
    failures += o.ok ? 0 : 1;
    std::printf("[%s] %2d %s (%.2f s)%s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), secs, o.detail.str().c_str());
    std::fflush(stdout);
}

} // namespace

int main()
{
    criterion(
        1, "G_m(t) = binom(2m,m)^2 binom(t+m,4m+1) for m=1..8",
        [](Outcome& o) {
            for (long m = 1; m <= 8; ++m) {
                o.require(verify_gm_conjecture(m));
            }
        },
        180);

    criterion(2, "G_m(3m+1) = 1 mod 2m+1 for m in {1,2,3,5,6,8}", [](Outcome& o) {
        for (long m : {1L, 2L, 3L, 5L, 6L, 8L}) {
            o.require(gm_mod_p(m));
        }
    });

    criterion(
        3, "Warnaar identities, p=3,5, all lambda, sigma, both variants, order 25",
        [](Outcome& o) {
            for (long p : {3L, 5L}) {
                const ReportList rs = verify_warnaar(p, 25);
                o.require(static_cast<long>(rs.size()) == 4 * (p + 1), "report count for p=" + std::to_string(p));
                o.require(rs);
            }
        },
        120);

    criterion(4, "fermionic = q^-shift bosonic characters, m=1,2, order 20; shift(Lambda(m+1)) = 1/16 at m=1",
              [](Outcome& o) {
                  for (long m = 1; m <= 2; ++m) {
                      const ReportList rs = verify_fermionic_chars(m, 20);
                      o.require(static_cast<long>(rs.size()) == 2 * m + 1, "module count");
                      o.require(rs);
                      o.detail << " m=" << m << " shifts:";
                      for (const auto& r : rs) {
                          o.detail << ' ' << r.params.at("module") << '=' << r.params.at("shift");
                      }
                      o.detail << (m == 1 ? ";" : "");
                  }
                  const Rational top = fermionic_sw_char(SWModuleId::lambda(1, 1), 20).shift;
                  o.require(top == Rational(1, 16), "shift(Lambda(2)) is " + top.to_string() + ", expected 1/16");
              });

    criterion(5, "decomposition = theta form (m=1..3, order 15); Lambda + Pi sums (m=1..3, order 20)", [](Outcome& o) {
        for (long m = 1; m <= 3; ++m) {
            for (long i = 0; i <= m; ++i) {
                const SWModuleId id = SWModuleId::lambda(m, i);
                VerificationReport r = compare(char_by_decomposition(id, 15), sw_char(id, 15), 15);
                r.identity_id = "decomposition " + id.to_string() + " m=" + std::to_string(m);
                o.require(r);
            }
            const QSeries pre = f_over_eta(21);
            for (long i = 0; i < m; ++i) {
                const QSeries lhs = sw_char(SWModuleId::lambda(m, i), 20) + sw_char(SWModuleId::pi(m, i), 20);
                const QSeries rhs = pre * theta({m - i, Rational(2 * m + 1, 2)}, 21);
                VerificationReport r = compare(lhs, rhs, 20);
                r.identity_id = "lambda+pi m=" + std::to_string(m) + " i=" + std::to_string(i);
                o.require(r);
            }
        }
    });

    criterion(6, "modular form identity suite, order 100", [](Outcome& o) {
        const ReportList rs = verify_form_identities(100);
        o.require(!rs.empty(), "empty suite");
        o.require(rs);
        o.detail << ' ' << rs.size() << " identities";
    });

    criterion(7, "auxiliary identities, order 40; leading term q^{5/48} of (f/eta) dTheta_{1,3/2}", [](Outcome& o) {
        const ReportList rs = verify_aux_identities(40);
        o.require(rs);
        o.detail << ' ' << rs.size() << " identities";
        const QSeries s = f_over_eta(40) * dtheta({1, Rational(3, 2)}, 40);
        const auto lead = s.leading_exponent();
        o.require(lead && *lead == Rational(5, 48), "leading exponent");
        o.require(s.leading_coefficient() == 1, "leading coefficient");
    });

    criterion(8, "phi identities (m=1..5); curve relation and f_m factorization (m=1..8)", [](Outcome& o) {
        for (long m = 1; m <= 5; ++m) {
            o.require(verify_phi_identities(m));
        }
        for (long m = 1; m <= 8; ++m) {
            o.require(compare_polys("curve_relation m=" + std::to_string(m), curve_residual(m, curve_constant(m)), {}));
            o.require(compare_polys("fm_factorization m=" + std::to_string(m), f_m_poly(m), f_m_factored(m)));
        }
        o.detail << " C_1=" << curve_constant(1).to_string() << " C_2=" << curve_constant(2).to_string();
    });

    criterion(9, "interpolation and s(t) properties, m=1..10", [](Outcome& o) {
        for (long m = 1; m <= 10; ++m) {
            const Interpolation ip = interpolation_L(m);
            o.require(ip.L.degree() == m - 1, "deg L m=" + std::to_string(m));
            for (long i = 0; i <= m; ++i) {
                o.require(!ip.L(weight_h(m, 2 * i + 1, 1)).is_zero(), "L(h) = 0");
            }
            o.require(s_value(m, 0) < 0 && s_value(m, 1) < 0, "sign of s m=" + std::to_string(m));
            o.require(verify_s_properties(m));
        }
    });

    criterion(10, "eta, Theta, dTheta S and T laws at i, 0.3+1.1i, -0.4+0.9i, order 300, tol 1e-8", [](Outcome& o) {
        const ReportList rs = verify_s_t_laws(default_law_points(), 300, 1e-8L);
        o.require(rs);
        long double worst = 0;
        for (const auto& r : rs) {
            worst = std::max(worst, std::stold(r.params.at("residual")) + std::stold(r.params.at("error_bound")));
        }
        o.detail << ' ' << rs.size() << " checks, worst residual+bound " << static_cast<double>(worst);
    });

    criterion(11, "numerical rank of the NS space is 3m+1, m=1,2", [](Outcome& o) {
        for (long m = 1; m <= 2; ++m) {
            const RankResult r = ns_space_rank(m, default_rank_points(m), 120);
            o.require(r.rank == 3 * m + 1, "rank " + std::to_string(r.rank) + " at m=" + std::to_string(m));
            o.require(r.min_singular_value > rank_threshold * r.max_singular_value, "smallest singular value");
            o.detail << " m=" << m << " rank " << r.rank << " sv ratio "
                     << static_cast<double>(r.min_singular_value / r.max_singular_value) << (m == 1 ? ";" : "");
        }
    });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
