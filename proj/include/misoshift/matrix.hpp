#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "misoshift/errors.hpp"

namespace misoshift {

using cx = std::complex<double>;

namespace tol {
// Relative conjugate-symmetry tolerance (scaled by Frobenius norm).
inline constexpr double herm_rel = 1e-10;
// Eigendecomposition residual tolerance.
inline constexpr double eig = 1e-11;
// Relative residual for the principal square root.
inline constexpr double sqrt_rel = 1e-9;
// Invertibility cliff: min |eigenvalue| below this fraction of the max
// counts as singular.
inline constexpr double inv_ratio = 1e-12;
// Coefficientwise tolerance for polynomial identities.
inline constexpr double poly_rel = 1e-8;
// Relative beta-block tolerance for the isometry verdict.
inline constexpr double iso_rel = 1e-8;
} // namespace tol

/// Dense complex square matrix, row-major storage.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
        if (dim <= 0) throw InvalidMatrix("matrix dimension must be positive");
    }
    SquareMatrix(int dim, std::vector<cx> entries) : dim_(dim), a_(std::move(entries)) {
        if (dim <= 0) throw InvalidMatrix("matrix dimension must be positive");
        if (a_.size() != static_cast<size_t>(dim) * dim)
            throw InvalidMatrix("entry count does not match dim*dim");
    }
    /// Row-major initializer, e.g. SquareMatrix::of(2, {1, 2, 3, 4}).
    static SquareMatrix of(int dim, std::initializer_list<cx> entries) {
        return SquareMatrix(dim, std::vector<cx>(entries));
    }

    static SquareMatrix identity(int dim);
    static SquareMatrix diagonal(const std::vector<cx>& d);

    int dim() const { return dim_; }
    cx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<cx>& entries() const { return a_; }

    SquareMatrix adjoint() const;
    SquareMatrix transpose() const;

    SquareMatrix& operator+=(const SquareMatrix& o);
    SquareMatrix& operator-=(const SquareMatrix& o);
    SquareMatrix& operator*=(cx s);

    double frobenius() const;
    double max_abs() const;
    bool all_finite() const;

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
    friend SquareMatrix operator*(SquareMatrix a, cx s) { return a *= s; }
    friend SquareMatrix operator*(cx s, SquareMatrix a) { return a *= s; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);

private:
    int dim_ = 0;
    std::vector<cx> a_;
};

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b, const char* where);

/// Complex matrix carrying conjugate-symmetry as an invariant.  The checked
/// constructor rejects inputs whose asymmetry exceeds herm_rel * ||M||_F and
/// stores the symmetrized part.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const SquareMatrix& m);

    /// Symmetrize without the asymmetry check (for results that are Hermitian
    /// by construction up to roundoff).
    static HermitianMatrix symmetrize(const SquareMatrix& m);

    static HermitianMatrix identity(int dim) { return symmetrize(SquareMatrix::identity(dim)); }
    static HermitianMatrix real_diagonal(const std::vector<double>& d);

    int dim() const { return m_.dim(); }
    const SquareMatrix& mat() const { return m_; }
    operator const SquareMatrix&() const { return m_; }
    cx operator()(int i, int j) const { return m_(i, j); }

private:
    SquareMatrix m_;
};

/// Frobenius distance of M from its adjoint.
double hermitian_defect(const SquareMatrix& m);

} // namespace misoshift
