#include "misoshift/completion.hpp"

#include <cmath>
#include <limits>

namespace misoshift {

std::vector<ScalarPoly> lagrange_basis(int m) {
    if (m < 1) throw InvalidMatrix("lagrange_basis: m must be >= 1");
    const auto weights = vandermonde_weights(m);
    std::vector<ScalarPoly> basis;
    basis.reserve(weights.size());
    for (const auto& row : weights) basis.push_back(ScalarPoly{row});
    return basis;
}

namespace {

// Gram products of the prefix: I, |A_1|^2, |A_2 A_1|^2, ..., |A_m...A_1|^2.
std::vector<SquareMatrix> prefix_grams(const std::vector<SquareMatrix>& prefix) {
    if (prefix.empty()) throw InvalidMatrix("completion: empty prefix");
    const int dim = prefix.front().dim();
    std::vector<SquareMatrix> grams{SquareMatrix::identity(dim)};
    SquareMatrix prod = SquareMatrix::identity(dim);
    for (const auto& a : prefix) {
        if (a.dim() != dim) throw DimMismatch("completion: prefix dims differ");
        require_invertible(a, "completion prefix");
        prod = a * prod;
        grams.push_back(prod.adjoint() * prod);
    }
    return grams;
}

double falling_factorial(double n, int m) {
    double acc = 1.0;
    for (int k = 0; k <= m; ++k) acc *= n - k;
    return acc;
}

// sup_{n >= m+1} max_j ||A~_j|| * sum_j |l_j(n)| / (n(n-1)...(n-m)); the ratio
// tends to 0, so the scan stops once it has decreased 3(m+1) times in a row.
double alpha_sup(const std::vector<ScalarPoly>& basis, double max_gram_norm, int m) {
    double sup = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    int decreasing_run = 0;
    for (long n = m + 1; n <= 10000; ++n) {
        double abs_sum = 0.0;
        for (const auto& l : basis) abs_sum += std::abs(l(static_cast<double>(n)));
        const double val = max_gram_norm * abs_sum / falling_factorial(static_cast<double>(n), m);
        sup = std::max(sup, val);
        decreasing_run = (val < prev) ? decreasing_run + 1 : 0;
        prev = val;
        if (decreasing_run >= 3 * (m + 1)) return sup;
    }
    throw NoConvergence("completion: alpha scan did not settle by n = 10^4");
}

// Coefficients of z(z-1)...(z-m) as exact integers.
std::vector<double> falling_factorial_coeffs(int m) {
    std::vector<long long> c{0, 1}; // z
    for (int k = 1; k <= m; ++k) {
        std::vector<long long> next(c.size() + 1, 0);
        for (size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= c[j] * k;
        }
        c = std::move(next);
    }
    return std::vector<double>(c.begin(), c.end());
}

} // namespace

CompletionPolynomial completion_polynomial(const std::vector<SquareMatrix>& prefix) {
    const int m = static_cast<int>(prefix.size());
    const int dim = prefix.front().dim();
    const auto grams = prefix_grams(prefix);
    const auto basis = lagrange_basis(m);

    double max_gram_norm = 0.0;
    for (const auto& g : grams)
        max_gram_norm = std::max(max_gram_norm, operator_norm(g));

    CompletionPolynomial out;
    out.sup_bound = alpha_sup(basis, max_gram_norm, m);
    // Any strict excess works; 10% keeps q(m+1) away from singularity.
    out.alpha = 1.1 * out.sup_bound;

    std::vector<SquareMatrix> coeffs(static_cast<size_t>(m) + 2, SquareMatrix(dim));
    for (int j = 0; j <= m; ++j)
        for (size_t c = 0; c < basis[static_cast<size_t>(j)].c.size(); ++c) {
            const double w = basis[static_cast<size_t>(j)].c[c];
            if (w != 0.0) coeffs[c] += grams[static_cast<size_t>(j)] * cx(w);
        }
    const auto ff = falling_factorial_coeffs(m);
    for (size_t c = 0; c < ff.size(); ++c)
        coeffs[c] += SquareMatrix::identity(dim) * cx(out.alpha * ff[c]);
    out.q = MatrixPolynomial(dim, std::move(coeffs));
    return out;
}

CompletionResult complete_weights(const std::vector<SquareMatrix>& prefix, long horizon) {
    const int m = static_cast<int>(prefix.size());
    if (horizon < m + 3) throw HorizonTooShort("completion horizon must be at least m+3");
    CompletionPolynomial cp = completion_polynomial(prefix);

    // Prefix weights verbatim, then the construction recursion against q:
    // S_{n+1}^2 = Y_n* q(n+1) Y_n with Y_n = S_1^{-1} ... S_n^{-1}.
    std::vector<SquareMatrix> weights = prefix;
    SquareMatrix y = SquareMatrix::identity(prefix.front().dim());
    for (const auto& a : prefix) y = y * inverse(a);
    for (long n = m; n < horizon; ++n) {
        const SquareMatrix candidate =
            y.adjoint() * cp.q.eval(static_cast<double>(n + 1)) * y;
        const HermitianMatrix h = HermitianMatrix::symmetrize(candidate);
        const auto eig = eig_hermitian(h);
        if (eig.eigenvalues.front() < 1e-12 * std::abs(eig.eigenvalues.back()))
            throw SqrtFailure("completion intermediate at step " + std::to_string(n + 1) +
                              " is numerically indefinite");
        const HermitianMatrix s = psd_sqrt(h);
        weights.push_back(s.mat());
        y = y * inverse(s.mat());
    }

    CompletionResult res{std::move(cp.q), cp.alpha, WeightSequence::unilateral(std::move(weights)), {}};
    res.report = verify_m_isometry(res.weights, m + 2);
    return res;
}

bool can_start_2isometry(const SquareMatrix& a1, double tol) {
    const HermitianMatrix g = HermitianMatrix::symmetrize(a1.adjoint() * a1);
    const auto eig = eig_hermitian(g);
    return eig.eigenvalues.front() >= 1.0 - tol;
}

} // namespace misoshift
