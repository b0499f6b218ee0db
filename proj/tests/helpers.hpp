#pragma once

#include <random>
#include <vector>

#include "misoshift/matcore.hpp"
#include "misoshift/oppoly.hpp"

namespace testutil {

using misoshift::cx;
using misoshift::HermitianMatrix;
using misoshift::MatrixPolynomial;
using misoshift::SquareMatrix;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline SquareMatrix random_matrix(int dim, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = cx(u(rng()), u(rng()));
    return m;
}

inline HermitianMatrix random_hermitian(int dim, double scale = 1.0) {
    return HermitianMatrix::symmetrize(random_matrix(dim, scale));
}

/// A A* + eps I: Hermitian and positive definite.
inline HermitianMatrix random_pd(int dim, double eps = 0.1) {
    const SquareMatrix a = random_matrix(dim);
    SquareMatrix g = a * a.adjoint();
    g += SquareMatrix::identity(dim) * cx(eps);
    return HermitianMatrix::symmetrize(g);
}

/// A A*: Hermitian positive semidefinite.
inline HermitianMatrix random_psd(int dim) {
    const SquareMatrix a = random_matrix(dim);
    return HermitianMatrix::symmetrize(a * a.adjoint());
}

/// Random invertible matrix (resampled until well conditioned).
inline SquareMatrix random_invertible(int dim) {
    for (;;) {
        SquareMatrix a = random_matrix(dim);
        const HermitianMatrix g = HermitianMatrix::symmetrize(a.adjoint() * a);
        const auto eig = misoshift::eig_hermitian(g);
        if (eig.eigenvalues.front() > 1e-3 * eig.eigenvalues.back() &&
            eig.eigenvalues.front() > 1e-6)
            return a;
    }
}

/// Unitary eigenvector frame of a random Hermitian matrix.
inline SquareMatrix random_unitary(int dim) {
    return misoshift::eig_hermitian(random_hermitian(dim)).eigenvectors;
}

/// p(z) = [[1, z], [z, z^2 + 1]]; invertible in degree 2 with constant
/// spectral-radius ratio (3 + sqrt 5)/2.
inline MatrixPolynomial poly_2x2() {
    return MatrixPolynomial(2, {SquareMatrix::identity(2),
                                SquareMatrix::of(2, {0, 1, 1, 0}),
                                SquareMatrix::of(2, {0, 0, 0, 1})});
}

/// q(z) = [[z^2 + 1, -z], [-z, 1]]: the two-sided inverse of poly_2x2.
inline MatrixPolynomial poly_2x2_inverse() {
    return MatrixPolynomial(2, {SquareMatrix::identity(2),
                                SquareMatrix::of(2, {0, -1, -1, 0}),
                                SquareMatrix::of(2, {1, 0, 0, 0})});
}

/// The 3x3 polynomial with divergent spectral-radius ratios:
/// [[z^3 + 16z + 1, z^2/2, 2z], [z^2/2, z/4 + 1, 0], [2z, 0, 1]].
inline MatrixPolynomial poly_3x3() {
    return MatrixPolynomial(
        3, {SquareMatrix::identity(3),
            SquareMatrix::of(3, {16, 0, 2, 0, 0.25, 0, 2, 0, 0}),
            SquareMatrix::of(3, {0, 0.5, 0, 0.5, 0, 0, 0, 0, 0}),
            SquareMatrix::of(3, {1, 0, 0, 0, 0, 0, 0, 0, 0})});
}

inline double frob_diff(const SquareMatrix& a, const SquareMatrix& b) {
    return (a - b).frobenius();
}

} // namespace testutil
