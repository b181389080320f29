#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swm/identity.hpp"
#include "swm/qseries.hpp"

namespace swm {

/// An irreducible SW(m)-module: Lambda(i+1) for 0 <= i <= m, or Pi(m-i) for
/// 0 <= i <= m-1.
struct SWModuleId {
    enum class Kind { lambda, pi };

    long m = 1;
    Kind kind = Kind::lambda;
    long i = 0;

    static SWModuleId lambda(long m, long i);
    static SWModuleId pi(long m, long i);
    /// "lambda:N" names Lambda(N), "pi:N" names Pi(N).
    static SWModuleId parse(long m, std::string_view text);
    /// All 2m+1 modules: Lambda(1..m+1), then Pi(m..1).
    static std::vector<SWModuleId> all(long m);

    /// The label used in parse(): Lambda(i+1) or Pi(m-i).
    [[nodiscard]] long label() const { return kind == Kind::lambda ? i + 1 : m - i; }
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool is_lambda_top() const { return kind == Kind::lambda && i == m; }

    friend bool operator==(const SWModuleId&, const SWModuleId&) = default;
};

/// h^{r,s} for c_{2m+1,1}.
Rational weight_h(long m, long r, long s);

struct CentralData {
    long m = 1;
    Rational c;
    /// h^{2i+1,1} for 0 <= i <= 3m, keyed by (r, s).
    std::map<std::pair<long, long>, Rational> weights;

    [[nodiscard]] Rational h(long r, long s) const { return weight_h(m, r, s); }
};

CentralData central_data(long m);

/// Irreducible Neveu-Schwarz character of lowest weight h^{2i+1,2n+1}.
QSeries ns_irr_char(long m, long i, long n, const Rational& order);

/// Theta-form character.
QSeries sw_char(const SWModuleId& id, const Rational& order);
/// Theta-form supercharacter exactly as displayed (f2/eta prefactor).
QSeries sw_superchar_theta(const SWModuleId& id, const Rational& order);
/// Monomial shift e with lead(supercharacter) = lead(character) + e.
Rational superchar_shift(const SWModuleId& id, const Rational& order);

/// sum_{n>=0} (2n+1) ns_irr_char(m, i, n); Lambda modules only.
QSeries char_by_decomposition(const SWModuleId& id, const Rational& order);

/// Suite items: decomposition vs theta form, the Lambda + Pi sum identity,
/// and coefficient positivity/integrality. `j_offset` perturbs the theta
/// index of the theta-form characters (zero for the genuine suite).
IdentityList character_identities(long m, long j_offset = 0);
ReportList verify_character_suite(long m, const Rational& order);

/// Each coefficient replaced by max(0, floor(c)): equal to `s` iff every
/// coefficient is a nonnegative integer.
QSeries graded_projection(const QSeries& s);

} // namespace swm
