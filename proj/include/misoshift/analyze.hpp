#pragma once

#include <optional>
#include <string>

#include "misoshift/construct.hpp"

namespace misoshift {

struct CommutativityCheck {
    bool commute = false;
    double max_commutator = 0.0;
    double tolerance = 0.0;
};

/// True iff all pairwise weight commutators vanish within tol times the
/// bilinear norm scale.
CommutativityCheck weights_commute(const WeightSequence& w, double tol = 1e-9);

/// Same test over the nonconstant coefficients of p.
CommutativityCheck coefficients_commute(const MatrixPolynomial& p, double tol = 1e-9);

enum class TriVerdict { yes, no, indeterminate };

/// The three equivalent commutativity conditions, evaluated side by side on
/// the constructed shift: all weights, the first m-1 weights, and the
/// polynomial coefficients.
struct CommutativityEquivalenceReport {
    TriVerdict all_weights = TriVerdict::indeterminate;
    TriVerdict first_weights = TriVerdict::indeterminate;
    TriVerdict coefficients = TriVerdict::indeterminate;
    double max_commutator_weights = 0.0;
    double max_commutator_first = 0.0;
    double max_commutator_coeffs = 0.0;
    bool agree = false; ///< the three verdicts coincide (or some are indeterminate)
};

CommutativityEquivalenceReport commutativity_equivalence_check(const MatrixPolynomial& p, int m,
                                                               long horizon = 32);

/// Adjoint criterion for the bilateral shift built from p: the adjoint is
/// m-isometric iff p is invertible in the degree-(m-1) polynomial algebra.
/// On success carries the adjoint's characterization polynomial
/// p_hat(z) = p_tilde(-z).
struct AdjointReport {
    bool adjoint_is_m_isometric = false;
    std::optional<MatrixPolynomial> inverse_polynomial;      ///< p_tilde
    std::optional<MatrixPolynomial> adjoint_characterization; ///< p_hat
    std::string reason; ///< failure reason when the verdict is false
};

AdjointReport adjoint_is_m_isometric(const MatrixPolynomial& p, int m);

/// Verifies that each coefficient of p is the real Vandermonde combination of
/// I, |S_1|^2, ..., |S_{m-1}...S_1|^2 and is Hermitian.
struct CoefficientStructureReport {
    std::vector<double> combination_residuals; ///< per coefficient
    std::vector<double> hermitian_defects;
    double max_residual = 0.0;
    double max_hermitian_defect = 0.0;
};

CoefficientStructureReport coefficient_structure_check(const MatrixPolynomial& p,
                                                       const WeightSequence& w);

} // namespace misoshift
