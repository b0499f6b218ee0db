#pragma once

#include <optional>
#include <string>
#include <vector>

#include "misoshift/matcore.hpp"

namespace misoshift {

/// Degree-bounded polynomial with square-matrix coefficients; coeff(j)
/// multiplies z^j.  The stored length is a degree bound, not the exact degree.
class MatrixPolynomial {
public:
    MatrixPolynomial() = default;
    MatrixPolynomial(int dim, std::vector<SquareMatrix> coeffs);

    static MatrixPolynomial constant(const SquareMatrix& c) { return MatrixPolynomial(c.dim(), {c}); }
    /// Scalar polynomial embedded at dim 1; c[j] multiplies z^j.
    static MatrixPolynomial scalar(const std::vector<double>& c);
    /// Diagonal polynomial built from per-entry scalar polynomials
    /// (outer index = matrix entry, inner = power of z).
    static MatrixPolynomial diagonal(const std::vector<std::vector<double>>& entry_polys);

    int dim() const { return dim_; }
    int degree_bound() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Exact degree after trimming trailing zero coefficients (-1 for zero).
    int degree() const;
    const SquareMatrix& coeff(int j) const { return coeffs_[static_cast<size_t>(j)]; }
    const std::vector<SquareMatrix>& coeffs() const { return coeffs_; }

    /// Horner evaluation sum_j A_j t^j.
    SquareMatrix eval(double t) const;

    /// Trim trailing zero coefficient matrices (keeps at least the constant).
    MatrixPolynomial normalized() const;
    double max_coeff_norm() const;

private:
    int dim_ = 0;
    std::vector<SquareMatrix> coeffs_;
};

/// Coefficient convolution; matrix products keep the left-right order of p, q.
MatrixPolynomial multiply(const MatrixPolynomial& p, const MatrixPolynomial& q);

/// Unique degree <= d interpolant through values at the integer nodes
/// 0, 1, ..., d.  The node weights are computed exactly from the Lagrange
/// basis, so Hermitian inputs give Hermitian coefficients.
MatrixPolynomial fit_from_values(const std::vector<SquareMatrix>& values);

/// Scalar interpolation weights: weight(j, c) = coefficient of z^c in the
/// Lagrange basis polynomial for node j over nodes 0..d.
std::vector<std::vector<double>> vandermonde_weights(int d);

/// Two-sided inverse of p inside the algebra of matrix polynomials of degree
/// <= degree_bound, when it exists; nullopt otherwise (reason in *why).
std::optional<MatrixPolynomial> invert_in_degree(const MatrixPolynomial& p, int degree_bound,
                                                 std::string* why = nullptr);

enum class Side { unilateral, bilateral };

/// What check_preconditions saw on the node range.
struct PreconditionReport {
    Side side = Side::unilateral;
    long horizon = 0;
    double p0_residual = 0.0;   ///< ||p(0) - I||_F
    bool p0_ok = false;
    double min_eigenvalue = 0.0;
    long min_eigenvalue_node = 0;
    bool all_positive = false;
    double capacity = 0.0;      ///< max over checked n of r(p(n+1) p(n)^{-1})
    bool divergence_suspected = false;
    std::vector<double> ratios; ///< spectral-radius ratios, node-ascending

    bool ok() const { return p0_ok && all_positive; }
};

/// Evaluates the construction preconditions of p on 0..horizon (unilateral)
/// or -horizon..horizon (bilateral).  Never throws on failed items; the
/// report carries them.
PreconditionReport check_preconditions(const MatrixPolynomial& p, long horizon, Side side);

} // namespace misoshift
