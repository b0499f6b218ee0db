#include "misoshift/oppoly.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace misoshift {

MatrixPolynomial::MatrixPolynomial(int dim, std::vector<SquareMatrix> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidMatrix("polynomial needs at least one coefficient");
    for (const auto& c : coeffs_) {
        if (c.dim() != dim_) throw DimMismatch("polynomial coefficients disagree on dim");
        if (!c.all_finite()) throw InvalidMatrix("polynomial coefficient has non-finite entries");
    }
}

MatrixPolynomial MatrixPolynomial::scalar(const std::vector<double>& c) {
    std::vector<SquareMatrix> coeffs;
    for (double v : c) coeffs.push_back(SquareMatrix::of(1, {v}));
    return MatrixPolynomial(1, std::move(coeffs));
}

MatrixPolynomial MatrixPolynomial::diagonal(const std::vector<std::vector<double>>& entry_polys) {
    const int dim = static_cast<int>(entry_polys.size());
    size_t len = 1;
    for (const auto& p : entry_polys) len = std::max(len, p.size());
    std::vector<SquareMatrix> coeffs(len, SquareMatrix(dim));
    for (int i = 0; i < dim; ++i)
        for (size_t j = 0; j < entry_polys[static_cast<size_t>(i)].size(); ++j)
            coeffs[j](i, i) = entry_polys[static_cast<size_t>(i)][j];
    return MatrixPolynomial(dim, std::move(coeffs));
}

int MatrixPolynomial::degree() const {
    for (int j = degree_bound(); j >= 0; --j)
        if (coeffs_[static_cast<size_t>(j)].max_abs() > 0.0) return j;
    return -1;
}

SquareMatrix MatrixPolynomial::eval(double t) const {
    SquareMatrix acc = coeffs_.back();
    for (int j = degree_bound() - 1; j >= 0; --j) {
        acc *= cx(t);
        acc += coeffs_[static_cast<size_t>(j)];
    }
    return acc;
}

MatrixPolynomial MatrixPolynomial::normalized() const {
    int d = std::max(degree(), 0);
    std::vector<SquareMatrix> c(coeffs_.begin(), coeffs_.begin() + d + 1);
    return MatrixPolynomial(dim_, std::move(c));
}

double MatrixPolynomial::max_coeff_norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s = std::max(s, c.frobenius());
    return s;
}

MatrixPolynomial multiply(const MatrixPolynomial& p, const MatrixPolynomial& q) {
    if (p.dim() != q.dim()) throw DimMismatch("multiply: polynomial dims differ");
    const int dp = p.degree_bound();
    const int dq = q.degree_bound();
    std::vector<SquareMatrix> out(static_cast<size_t>(dp + dq) + 1, SquareMatrix(p.dim()));
    for (int i = 0; i <= dp; ++i)
        for (int j = 0; j <= dq; ++j) out[static_cast<size_t>(i + j)] += p.coeff(i) * q.coeff(j);
    return MatrixPolynomial(p.dim(), std::move(out));
}

std::vector<std::vector<double>> vandermonde_weights(int d) {
    if (d < 0 || d > 32) throw InvalidMatrix("vandermonde_weights: unsupported degree");
    std::vector<std::vector<double>> w(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        // Integer expansion of prod_{k != j} (z - k); coefficients stay well
        // inside int64 for the supported degrees.
        std::vector<std::int64_t> numer{1};
        std::int64_t denom = 1;
        for (int k = 0; k <= d; ++k) {
            if (k == j) continue;
            denom *= static_cast<std::int64_t>(j - k);
            std::vector<std::int64_t> next(numer.size() + 1, 0);
            for (size_t c = 0; c < numer.size(); ++c) {
                next[c + 1] += numer[c];
                next[c] -= numer[c] * k;
            }
            numer = std::move(next);
        }
        std::vector<double> row(static_cast<size_t>(d) + 1, 0.0);
        for (size_t c = 0; c < numer.size() && c <= static_cast<size_t>(d); ++c)
            row[c] = static_cast<double>(numer[c]) / static_cast<double>(denom);
        w[static_cast<size_t>(j)] = std::move(row);
    }
    return w;
}

MatrixPolynomial fit_from_values(const std::vector<SquareMatrix>& values) {
    if (values.empty()) throw InvalidMatrix("fit_from_values: no values");
    const int d = static_cast<int>(values.size()) - 1;
    const int dim = values.front().dim();
    for (const auto& v : values)
        if (v.dim() != dim) throw DimMismatch("fit_from_values: values disagree on dim");
    const auto w = vandermonde_weights(d);
    std::vector<SquareMatrix> coeffs(static_cast<size_t>(d) + 1, SquareMatrix(dim));
    for (int j = 0; j <= d; ++j)
        for (int c = 0; c <= d; ++c) {
            const double wj = w[static_cast<size_t>(j)][static_cast<size_t>(c)];
            if (wj != 0.0) coeffs[static_cast<size_t>(c)] += values[static_cast<size_t>(j)] * cx(wj);
        }
    return MatrixPolynomial(dim, std::move(coeffs));
}

std::optional<MatrixPolynomial> invert_in_degree(const MatrixPolynomial& p, int degree_bound,
                                                 std::string* why) {
    auto fail = [&](const std::string& reason) -> std::optional<MatrixPolynomial> {
        if (why) *why = reason;
        return std::nullopt;
    };
    if (p.degree() > degree_bound) return fail("degree of p exceeds the bound");

    std::vector<SquareMatrix> inv_values;
    for (int n = 0; n <= degree_bound; ++n) {
        try {
            require_invertible(p.eval(static_cast<double>(n)), "invert_in_degree");
            inv_values.push_back(inverse(p.eval(static_cast<double>(n))));
        } catch (const Singular&) {
            return fail("p(" + std::to_string(n) + ") is singular");
        }
    }
    const MatrixPolynomial q = fit_from_values(inv_values);

    // A two-sided inverse of degree <= bound must agree with this interpolant;
    // coefficientwise equality of both products with I certifies the identity
    // for all z.
    const double tol_abs = tol::poly_rel * (1.0 + p.max_coeff_norm());
    const SquareMatrix eye = SquareMatrix::identity(p.dim());
    for (const MatrixPolynomial& prod : {multiply(p, q), multiply(q, p)}) {
        for (int j = 0; j <= prod.degree_bound(); ++j) {
            const SquareMatrix target = (j == 0) ? eye : SquareMatrix(p.dim());
            if ((prod.coeff(j) - target).frobenius() > tol_abs)
                return fail("interpolated candidate is not a two-sided inverse");
        }
    }
    if (why) why->clear();
    return q;
}

PreconditionReport check_preconditions(const MatrixPolynomial& p, long horizon, Side side) {
    PreconditionReport rep;
    rep.side = side;
    rep.horizon = horizon;
    const long lo = (side == Side::bilateral) ? -horizon : 0;
    const long hi = horizon;

    const SquareMatrix p0 = p.eval(0.0);
    rep.p0_residual = (p0 - SquareMatrix::identity(p.dim())).frobenius();
    rep.p0_ok = rep.p0_residual <= tol::poly_rel * (1.0 + p.max_coeff_norm());

    rep.all_positive = true;
    rep.min_eigenvalue = std::numeric_limits<double>::infinity();
    std::vector<bool> positive(static_cast<size_t>(hi - lo) + 1, false);
    std::vector<EigenDecomposition> cache;
    for (long n = lo; n <= hi; ++n) {
        const SquareMatrix pn = p.eval(static_cast<double>(n));
        if (hermitian_defect(pn) > tol::herm_rel * (1.0 + pn.frobenius())) {
            rep.all_positive = false;
            continue;
        }
        const auto eig = eig_hermitian(HermitianMatrix::symmetrize(pn));
        const double lam = eig.eigenvalues.front();
        if (lam < rep.min_eigenvalue) {
            rep.min_eigenvalue = lam;
            rep.min_eigenvalue_node = n;
        }
        const bool pd = lam > tol::inv_ratio * std::abs(eig.eigenvalues.back());
        positive[static_cast<size_t>(n - lo)] = pd;
        if (!pd) rep.all_positive = false;
    }

    rep.capacity = 0.0;
    for (long n = lo; n < hi; ++n) {
        if (!positive[static_cast<size_t>(n - lo)] || !positive[static_cast<size_t>(n + 1 - lo)])
            continue;
        const double r = spectral_radius_ratio(
            HermitianMatrix::symmetrize(p.eval(static_cast<double>(n + 1))),
            HermitianMatrix::symmetrize(p.eval(static_cast<double>(n))));
        rep.ratios.push_back(r);
        rep.capacity = std::max(rep.capacity, r);
    }

    // Divergence heuristic: the last-quarter window of ratios is strictly
    // increasing and ends above 1.  Sup over infinite n is undecidable from
    // samples, so this is "divergence suspected", not a verdict.
    const size_t len = rep.ratios.size();
    if (len >= 16) {
        const size_t start = len - len / 4;
        bool increasing = true;
        for (size_t i = start; i + 1 < len; ++i)
            if (!(rep.ratios[i + 1] > rep.ratios[i] * (1.0 + 1e-10))) {
                increasing = false;
                break;
            }
        rep.divergence_suspected = increasing && rep.ratios.back() > 1.0;
    }
    return rep;
}

} // namespace misoshift
