#include "misoshift/construct.hpp"

#include <cmath>

namespace misoshift {

namespace {

void require_construction_preconditions(const MatrixPolynomial& p, int m,
                                        const PreconditionReport& pre) {
    if (p.degree() > m - 1)
        throw PreconditionFailed("deg p = " + std::to_string(p.degree()) +
                                 " exceeds m-1 = " + std::to_string(m - 1));
    if (!pre.p0_ok)
        throw PreconditionFailed("p(0) != I (residual " + std::to_string(pre.p0_residual) + ")");
    if (!pre.all_positive)
        throw PreconditionFailed("p(n) fails positive definiteness near node " +
                                 std::to_string(pre.min_eigenvalue_node) + " (min eigenvalue " +
                                 std::to_string(pre.min_eigenvalue) + ")");
}

// Guard the inductive square root against a conditioning cliff.
HermitianMatrix guarded_sqrt(const SquareMatrix& candidate, long step) {
    const HermitianMatrix h = HermitianMatrix::symmetrize(candidate);
    const auto eig = eig_hermitian(h);
    if (eig.eigenvalues.front() < 1e-12 * std::abs(eig.eigenvalues.back()))
        throw SqrtFailure("intermediate at step " + std::to_string(step) +
                          " is numerically indefinite (min eig " +
                          std::to_string(eig.eigenvalues.front()) + ")");
    return psd_sqrt(h);
}

// Weights S_1..S_horizon from the recursion S_{k+1}^2 = Q_k p(k+1) Q_k* with
// Q_k = S_k^{-1} ... S_1^{-1}, maintained incrementally.
std::vector<SquareMatrix> positive_branch(const MatrixPolynomial& p, long horizon) {
    std::vector<SquareMatrix> weights;
    weights.reserve(static_cast<size_t>(horizon));
    const HermitianMatrix s1 = guarded_sqrt(p.eval(1.0), 1);
    weights.push_back(s1.mat());
    SquareMatrix q = inverse(s1.mat());
    for (long k = 1; k < horizon; ++k) {
        const SquareMatrix candidate = q * p.eval(static_cast<double>(k + 1)) * q.adjoint();
        const HermitianMatrix s = guarded_sqrt(candidate, k + 1);
        weights.push_back(s.mat());
        q = inverse(s.mat()) * q;
    }
    return weights;
}

} // namespace

ConstructionResult construct_unilateral(const MatrixPolynomial& p, int m, long horizon) {
    if (horizon < m + 1) throw HorizonTooShort("horizon must be at least m+1");
    PreconditionReport pre = check_preconditions(p, horizon + m, Side::unilateral);
    require_construction_preconditions(p, m, pre);

    WeightSequence w = WeightSequence::unilateral(positive_branch(p, horizon));
    ConstructionResult res{std::move(w), p, pre.capacity, std::move(pre), {}};
    res.report = verify_m_isometry(res.weights, m);
    return res;
}

ConstructionResult construct_bilateral(const MatrixPolynomial& p, int m, long horizon) {
    if (horizon < m + 1) throw HorizonTooShort("horizon must be at least m+1");
    PreconditionReport pre = check_preconditions(p, horizon + m, Side::bilateral);
    require_construction_preconditions(p, m, pre);

    // Positive branch S_1..S_H as in the unilateral case.
    std::vector<SquareMatrix> pos = positive_branch(p, horizon);

    // Negative branch: S_0 = p(-1)^{-1/2} and then S_{-k} chosen so that
    // (S_0^{-1} ... S_{-k}^{-1}) times its adjoint equals p(-k-1), i.e.
    // S_{-k}^{-2} = G_k p(-k-1) G_k* with G_k = S_{-k+1} ... S_0.
    std::vector<SquareMatrix> neg; // S_0, S_{-1}, ..., S_{-H+1}
    const HermitianMatrix s0 = pd_inverse_sqrt(HermitianMatrix::symmetrize(p.eval(-1.0)));
    neg.push_back(s0.mat());
    SquareMatrix g = s0.mat();
    for (long k = 1; k < horizon; ++k) {
        const SquareMatrix candidate = g * p.eval(static_cast<double>(-k - 1)) * g.adjoint();
        const HermitianMatrix h = HermitianMatrix::symmetrize(candidate);
        const auto eig = eig_hermitian(h);
        if (eig.eigenvalues.front() < 1e-12 * std::abs(eig.eigenvalues.back()))
            throw SqrtFailure("negative-branch intermediate at step " + std::to_string(-k) +
                              " is numerically indefinite");
        const HermitianMatrix s = pd_inverse_sqrt(h);
        neg.push_back(s.mat());
        g = s.mat() * g;
    }

    std::vector<SquareMatrix> all;
    all.reserve(2 * static_cast<size_t>(horizon));
    for (auto it = neg.rbegin(); it != neg.rend(); ++it) all.push_back(*it); // -H+1..0
    for (auto& s : pos) all.push_back(std::move(s));                        // 1..H

    WeightSequence w = WeightSequence::bilateral(std::move(all));
    ConstructionResult res{std::move(w), p, pre.capacity, std::move(pre), {}};
    res.report = verify_m_isometry(res.weights, m);
    return res;
}

} // namespace misoshift
