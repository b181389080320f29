#pragma once

#include <functional>
#include <vector>

#include "swm/characters.hpp"
#include "swm/identity.hpp"
#include "swm/linalg.hpp"
#include "swm/qseries.hpp"

namespace swm {

/// D_p Cartan matrix A and its exact inverse B. Nodes 1..p-2 form the chain,
/// p-1 and p are the fork (0-based: p-3 joins p-2 and p-1).
struct CartanData {
    long p = 3;
    RationalMatrix A;
    RationalMatrix B;
};

RationalMatrix cartan_D(long p);
CartanData inverse_cartan_D(long p);

/// Per-coordinate factor w(n) of a multi-sum, a series 1 + O(q) (up to sign).
using WeightFn = std::function<QSeries(long n, const Rational& order)>;

/// sum over n in Z_{>=0}^d of q^{n^T Q n + L.n + c} prod_i w_i(n_i), where Q is
/// positive definite and, optionally, the entries listed in parity_indices
/// sum to `parity` mod 2.
struct MultiSum {
    RationalMatrix Q;
    RationalVector L;
    Rational c;
    std::vector<Eigen::Index> parity_indices;
    int parity = -1;
    std::vector<WeightFn> weights;
    /// All weights are the same function, so tuples that are permutations of
    /// each other share a weight product.
    bool symmetric_weights = false;

    [[nodiscard]] Eigen::Index dim() const { return Q.rows(); }
    [[nodiscard]] Rational exponent(const std::vector<long>& n) const;
    [[nodiscard]] bool parity_ok(const std::vector<long>& n) const;
};

enum class Enumerator { pruned, box };

/// Every tuple whose exponent is <= order (and satisfies the parity), in
/// lexicographic order.
std::vector<std::vector<long>> contributing_tuples(const MultiSum& sum, const Rational& order,
                                                   Enumerator how = Enumerator::pruned);
QSeries evaluate(const MultiSum& sum, const Rational& order, Enumerator how = Enumerator::pruned);

/// 1 / (q; q)_n
QSeries inverse_q_pochhammer(long n, const Rational& order);

struct FermionicSumSpec {
    long p = 3;
    long lambda = 0;
    int sigma = 0;
    int variant = 1;
    /// Required parity of n_{p-1} + n_p.
    int parity = 0;
};

MultiSum warnaar_sum(const FermionicSumSpec& spec, const RationalMatrix& B);
QSeries warnaar_lhs(const FermionicSumSpec& spec, const Rational& order);
QSeries warnaar_lhs(const FermionicSumSpec& spec, const Rational& order, const RationalMatrix& B);
QSeries warnaar_rhs(const FermionicSumSpec& spec, const Rational& order);

/// Both variants, lambda = 0..p, sigma = 0, 1, with parity = sigma.
IdentityList warnaar_identities(long p, const RationalMatrix& B);
ReportList verify_warnaar(long p, const Rational& order);

/// The variant-2 sum for p = 2m+1 with q -> q^{1/2}, divided by (-q; q)_inf.
QSeries adm_sum(long m, long lambda, int sigma, int parity, const Rational& order);

struct FermionicChar {
    QSeries series;
    /// series = q^{-shift} sw_char
    Rational shift;
};

FermionicChar fermionic_sw_char(const SWModuleId& id, const Rational& order);
/// One report per module comparing the multi-sum with q^{-shift} sw_char;
/// the shift is recorded in the params.
ReportList verify_fermionic_chars(long m, const Rational& order);

/// Durfee rectangles (k = 0..3, both forms), Euler's eta sum, and the two
/// m = 1 double sums.
IdentityList aux_identities();
ReportList verify_aux_identities(const Rational& order);

} // namespace swm
