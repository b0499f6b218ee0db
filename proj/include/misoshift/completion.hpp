#pragma once

#include "misoshift/oppoly.hpp"
#include "misoshift/shiftcore.hpp"

namespace misoshift {

/// Real scalar polynomial, c[j] multiplies z^j.
struct ScalarPoly {
    std::vector<double> c;
    double operator()(double z) const {
        double acc = 0.0;
        for (size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
        return acc;
    }
};

/// Lagrange basis over the integer nodes 0..m; coefficients are exact
/// rationals over the node structure.
std::vector<ScalarPoly> lagrange_basis(int m);

struct CompletionPolynomial {
    MatrixPolynomial q; ///< alpha z(z-1)...(z-m) I + Lagrange interpolant
    double alpha = 0.0;
    double sup_bound = 0.0; ///< the scanned supremum alpha must exceed
};

/// Degree-(m+1) polynomial interpolating I and the gram products of the
/// prefix at 0..m, with the leading falling-factorial term large enough to
/// keep q(n) positive definite for all n >= m+1.
CompletionPolynomial completion_polynomial(const std::vector<SquareMatrix>& prefix);

struct CompletionResult {
    MatrixPolynomial q;
    double alpha = 0.0;
    WeightSequence weights;
    IsometryReport report; ///< the (m+2)-isometry check
};

/// Extends the prefix A_1..A_m verbatim to the weights of an
/// (m+2)-isometric unilateral shift on the given horizon.
CompletionResult complete_weights(const std::vector<SquareMatrix>& prefix, long horizon = 32);

/// A_1 starts a 2-isometric unilateral shift iff A_1* A_1 >= I.
bool can_start_2isometry(const SquareMatrix& a1, double tol = 1e-10);

} // namespace misoshift
