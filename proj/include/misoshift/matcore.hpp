#pragma once

#include <vector>

#include "misoshift/matrix.hpp"

namespace misoshift {

/// Result of a Hermitian eigendecomposition M = V diag(eigenvalues) V*.
/// Eigenvalues ascending, eigenvector columns unitary.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    SquareMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
EigenDecomposition eig_hermitian(const HermitianMatrix& m);

/// True iff the smallest eigenvalue exceeds tol.
bool is_positive_definite(const HermitianMatrix& m, double tol = 0.0);

/// Principal square root of a positive semidefinite matrix.  Eigenvalues in
/// [-tol, 0) are clamped to zero; smaller ones raise NegativeEigenvalue.
HermitianMatrix psd_sqrt(const HermitianMatrix& m, double tol = 1e-10);

/// Inverse square root of a positive definite matrix.
HermitianMatrix pd_inverse_sqrt(const HermitianMatrix& m);

/// General matrix inverse.  Cofactor formulas for dim <= 3, Gaussian
/// elimination with partial pivoting otherwise.
SquareMatrix inverse(const SquareMatrix& m);

/// max |lambda| over eigenvalues of M.  Hermitian matrices go through the
/// Jacobi solver; non-Hermitian ones use characteristic-polynomial roots for
/// dim <= 3 and power iteration (char-poly fallback) above.
double spectral_radius(const SquareMatrix& m);

/// r(numer * denom^{-1}) for Hermitian numer and Hermitian PD denom, computed
/// through the similarity denom^{-1/2} numer denom^{-1/2}.
double spectral_radius_ratio(const HermitianMatrix& numer, const HermitianMatrix& denom);

/// ||AB - BA||_F.
double commutator_norm(const SquareMatrix& a, const SquareMatrix& b);

cx trace(const SquareMatrix& m);

/// Largest singular value (via the Hermitian eigenproblem for M*M).
double operator_norm(const SquareMatrix& m);

/// Throws Singular when min |eigenvalue of |M|| < inv_ratio * max.
void require_invertible(const SquareMatrix& m, const char* what);

} // namespace misoshift
