#pragma once

#include "misoshift/oppoly.hpp"
#include "misoshift/shiftcore.hpp"

namespace misoshift {

struct ConstructionResult {
    WeightSequence weights;
    MatrixPolynomial polynomial;
    double capacity_estimate = 0.0; ///< max checked r(p(n+1) p(n)^{-1})
    PreconditionReport preconditions;
    IsometryReport report;
};

/// Builds the positive weights S_1..S_horizon of an m-isometric unilateral
/// shift whose gram products interpolate p at the naturals.  Requires
/// p(0) = I, p(n) positive definite on the checked range and deg p <= m-1.
ConstructionResult construct_unilateral(const MatrixPolynomial& p, int m, long horizon = 64);

/// Bilateral counterpart: weights indexed -horizon+1..horizon with
/// p(-n) = |S_{-n+1}* ... S_0*|^{-2} on the negative branch.
ConstructionResult construct_bilateral(const MatrixPolynomial& p, int m, long horizon = 32);

} // namespace misoshift
