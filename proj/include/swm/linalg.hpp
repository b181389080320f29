#pragma once

#include <Eigen/Dense>

#include "swm/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<swm::Rational> : GenericNumTraits<swm::Rational> {
    using Real = swm::Rational;
    using NonInteger = swm::Rational;
    using Nested = swm::Rational;
    using Literal = swm::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 20,
        MulCost = 40
    };

    static Real epsilon() { return 0; }
    static Real dummy_precision() { return 0; }
    static int digits10() { return 0; }
};

} // namespace Eigen

namespace swm {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

/// Exact inverse by Gauss-Jordan elimination with nonzero pivoting. Meant for
/// exact scalars; throws PreconditionError when the matrix is singular.
template <typename Derived>
Matrix<typename Derived::Scalar> exact_inverse(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = m.rows();
    if (m.cols() != n) {
        throw PreconditionError("exact_inverse: matrix is not square");
    }
    Matrix<Scalar> a = m;
    Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = col;
        while (piv < n && a(piv, col) == Scalar(0)) {
            ++piv;
        }
        if (piv == n) {
            throw PreconditionError("exact_inverse: matrix is singular");
        }
        a.row(col).swap(a.row(piv));
        inv.row(col).swap(inv.row(piv));
        const Scalar p = a(col, col);
        a.row(col) /= p;
        inv.row(col) /= p;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r != col && a(r, col) != Scalar(0)) {
                const Scalar f = a(r, col);
                a.row(r) -= f * a.row(col);
                inv.row(r) -= f * inv.row(col);
            }
        }
    }
    return inv;
}

/// Entry-wise conversion to double.
template <typename Derived>
Eigen::MatrixXd to_double(const Eigen::MatrixBase<Derived>& m)
{
    return m.unaryExpr([](const auto& x) { return x.to_double(); });
}

} // namespace swm
