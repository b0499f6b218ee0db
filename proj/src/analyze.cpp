#include "misoshift/analyze.hpp"

#include <cmath>

namespace misoshift {

namespace {

// Commutator residuals scale bilinearly in the operand norms.
CommutativityCheck pairwise_commute(const std::vector<const SquareMatrix*>& ops, double tol) {
    CommutativityCheck out;
    double scale = 0.0;
    for (const auto* a : ops) scale = std::max(scale, a->frobenius());
    out.tolerance = tol * std::max(scale * scale, 1.0);
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j)
            out.max_commutator = std::max(out.max_commutator, commutator_norm(*ops[i], *ops[j]));
    out.commute = out.max_commutator <= out.tolerance;
    return out;
}

TriVerdict classify(const CommutativityCheck& c) {
    if (c.max_commutator <= c.tolerance) return TriVerdict::yes;
    // Numerical disagreement within 10x tolerance is not evidence against an
    // exact theorem.
    if (c.max_commutator <= 10.0 * c.tolerance) return TriVerdict::indeterminate;
    return TriVerdict::no;
}

} // namespace

CommutativityCheck weights_commute(const WeightSequence& w, double tol) {
    std::vector<const SquareMatrix*> ops;
    for (const auto& s : w.weights()) ops.push_back(&s);
    return pairwise_commute(ops, tol);
}

CommutativityCheck coefficients_commute(const MatrixPolynomial& p, double tol) {
    std::vector<const SquareMatrix*> ops;
    for (int j = 1; j <= p.degree_bound(); ++j) ops.push_back(&p.coeff(j));
    if (ops.size() < 2) {
        CommutativityCheck out;
        out.commute = true;
        out.tolerance = tol;
        return out;
    }
    return pairwise_commute(ops, tol);
}

CommutativityEquivalenceReport commutativity_equivalence_check(const MatrixPolynomial& p, int m,
                                                               long horizon) {
    const ConstructionResult built = construct_unilateral(p, m, horizon);

    const CommutativityCheck all = weights_commute(built.weights);
    CommutativityCheck first;
    {
        std::vector<const SquareMatrix*> ops;
        for (long j = 1; j <= std::min<long>(m - 1, built.weights.last_index()); ++j)
            ops.push_back(&built.weights.weight(j));
        first = ops.size() >= 2 ? pairwise_commute(ops, 1e-9)
                                : CommutativityCheck{true, 0.0, 1e-9};
    }
    const CommutativityCheck coeffs = coefficients_commute(p);

    CommutativityEquivalenceReport rep;
    rep.all_weights = classify(all);
    rep.first_weights = classify(first);
    rep.coefficients = classify(coeffs);
    rep.max_commutator_weights = all.max_commutator;
    rep.max_commutator_first = first.max_commutator;
    rep.max_commutator_coeffs = coeffs.max_commutator;

    auto decided_equal = [](TriVerdict a, TriVerdict b) {
        return a == TriVerdict::indeterminate || b == TriVerdict::indeterminate || a == b;
    };
    rep.agree = decided_equal(rep.all_weights, rep.first_weights) &&
                decided_equal(rep.all_weights, rep.coefficients) &&
                decided_equal(rep.first_weights, rep.coefficients);
    return rep;
}

AdjointReport adjoint_is_m_isometric(const MatrixPolynomial& p, int m) {
    AdjointReport rep;
    std::string why;
    auto inv = invert_in_degree(p, m - 1, &why);
    if (!inv) {
        rep.adjoint_is_m_isometric = false;
        rep.reason = why;
        return rep;
    }
    rep.adjoint_is_m_isometric = true;
    rep.inverse_polynomial = *inv;
    // p_hat(z) = p_tilde(-z): flip the sign of odd coefficients.
    std::vector<SquareMatrix> hat;
    for (int j = 0; j <= inv->degree_bound(); ++j)
        hat.push_back((j % 2 == 0) ? inv->coeff(j) : inv->coeff(j) * cx(-1.0));
    rep.adjoint_characterization = MatrixPolynomial(p.dim(), std::move(hat));
    return rep;
}

CoefficientStructureReport coefficient_structure_check(const MatrixPolynomial& p,
                                                       const WeightSequence& w) {
    const int m = p.degree_bound() + 1;
    std::vector<SquareMatrix> grams;
    for (int l = 0; l < m; ++l) grams.push_back(gram(w, 0, l).mat());
    const MatrixPolynomial refit = fit_from_values(grams);

    CoefficientStructureReport rep;
    for (int j = 0; j < m; ++j) {
        const double resid = (p.coeff(j) - refit.coeff(j)).frobenius();
        const double defect = hermitian_defect(p.coeff(j));
        rep.combination_residuals.push_back(resid);
        rep.hermitian_defects.push_back(defect);
        rep.max_residual = std::max(rep.max_residual, resid);
        rep.max_hermitian_defect = std::max(rep.max_hermitian_defect, defect);
    }
    return rep;
}

} // namespace misoshift
