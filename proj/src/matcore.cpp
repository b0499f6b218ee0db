#include "misoshift/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace misoshift {

namespace {

// One complex Jacobi rotation annihilating A(p,q).  A is updated in place and
// the rotation is accumulated into V.
void jacobi_rotate(SquareMatrix& a, SquareMatrix& v, int p, int q) {
    const cx apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0) return;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const cx phase = apq / abs_apq; // e^{i phi}

    // Real Jacobi angle for [[app, |apq|], [|apq|, aqq]].
    const double tau = (aqq - app) / (2.0 * abs_apq);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Unitary U restricted to (p,q): U(p,p)=c, U(p,q)=s, U(q,p)=-s*conj(phase),
    // U(q,q)=c*conj(phase).  Apply A <- U* A U, V <- V U.
    const cx up_q = s;
    const cx uq_p = -s * std::conj(phase);
    const cx uq_q = c * std::conj(phase);
    const int n = a.dim();

    for (int k = 0; k < n; ++k) { // columns: A <- A U
        const cx akp = a(k, p);
        const cx akq = a(k, q);
        a(k, p) = akp * c + akq * uq_p;
        a(k, q) = akp * up_q + akq * uq_q;
    }
    for (int k = 0; k < n; ++k) { // rows: A <- U* A
        const cx apk = a(p, k);
        const cx aqk = a(q, k);
        a(p, k) = c * apk + std::conj(uq_p) * aqk;
        a(q, k) = std::conj(up_q) * apk + std::conj(uq_q) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cx(a(p, p).real(), 0.0);
    a(q, q) = cx(a(q, q).real(), 0.0);
    for (int k = 0; k < n; ++k) {
        const cx vkp = v(k, p);
        const cx vkq = v(k, q);
        v(k, p) = vkp * c + vkq * uq_p;
        v(k, q) = vkp * up_q + vkq * uq_q;
    }
}

double offdiag_norm(const SquareMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// Coefficients of det(zI - M), highest degree first, for any dim
// (Faddeev-LeVerrier; adequate at desk scale).
std::vector<cx> characteristic_polynomial(const SquareMatrix& m) {
    const int n = m.dim();
    std::vector<cx> coeff(static_cast<size_t>(n) + 1);
    coeff[0] = 1.0;
    SquareMatrix mk = SquareMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        cx ck = -trace(mk) / static_cast<double>(k);
        coeff[static_cast<size_t>(k)] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return coeff;
}

// Durand-Kerner simultaneous root iteration; returns all roots.
std::vector<cx> polynomial_roots(std::vector<cx> coeff) {
    const int deg = static_cast<int>(coeff.size()) - 1;
    for (auto& c : coeff) c /= coeff[0];
    double radius = 0.0;
    for (int k = 1; k <= deg; ++k)
        radius = std::max(radius, std::pow(std::abs(coeff[static_cast<size_t>(k)]), 1.0 / k));
    radius = 1.0 + radius;
    std::vector<cx> roots(static_cast<size_t>(deg));
    const cx seed(0.4, 0.9);
    cx w = radius;
    for (auto& r : roots) {
        r = w;
        w *= seed;
    }
    auto eval = [&](cx z) {
        cx acc = coeff[0];
        for (int k = 1; k <= deg; ++k) acc = acc * z + coeff[static_cast<size_t>(k)];
        return acc;
    };
    for (int it = 0; it < 500; ++it) {
        double shift = 0.0;
        for (int i = 0; i < deg; ++i) {
            cx denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            if (denom == cx{}) denom = 1e-300;
            const cx delta = eval(roots[static_cast<size_t>(i)]) / denom;
            roots[static_cast<size_t>(i)] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14 * radius) return roots;
    }
    throw NoConvergence("polynomial root iteration did not converge");
}

} // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix& m) {
    const int n = m.dim();
    SquareMatrix a = m.mat();
    SquareMatrix v = SquareMatrix::identity(n);
    const double scale = a.frobenius();
    const double target = 1e-14 * (scale > 0.0 ? scale : 1.0);

    const int max_sweeps = 60;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a) <= target) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > target / (n * n)) jacobi_rotate(a, v, p, q);
    }
    if (sweep == max_sweeps && offdiag_norm(a) > 1e-10 * (scale > 0.0 ? scale : 1.0))
        throw NoConvergence("Jacobi sweep budget exhausted");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = SquareMatrix(n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[static_cast<size_t>(j)] = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]).real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[static_cast<size_t>(j)]);
    }
    return out;
}

bool is_positive_definite(const HermitianMatrix& m, double tol) {
    const auto eig = eig_hermitian(m);
    return eig.eigenvalues.front() > tol;
}

namespace {

HermitianMatrix spectral_map(const HermitianMatrix& m, double (*f)(double)) {
    const auto eig = eig_hermitian(m);
    const int n = m.dim();
    const SquareMatrix& v = eig.eigenvectors;
    SquareMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cx acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += v(i, k) * f(eig.eigenvalues[static_cast<size_t>(k)]) * std::conj(v(j, k));
            r(i, j) = acc;
        }
    return HermitianMatrix::symmetrize(r);
}

} // namespace

HermitianMatrix psd_sqrt(const HermitianMatrix& m, double tol) {
    auto eig = eig_hermitian(m);
    const double scale = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    const double cut = tol * (1.0 + scale);
    if (eig.eigenvalues.front() < -cut)
        throw NegativeEigenvalue("psd_sqrt: eigenvalue " + std::to_string(eig.eigenvalues.front()));
    const int n = m.dim();
    const SquareMatrix& v = eig.eigenvectors;
    SquareMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cx acc = 0.0;
            for (int k = 0; k < n; ++k) {
                const double lam = std::max(eig.eigenvalues[static_cast<size_t>(k)], 0.0);
                acc += v(i, k) * std::sqrt(lam) * std::conj(v(j, k));
            }
            r(i, j) = acc;
        }
    return HermitianMatrix::symmetrize(r);
}

HermitianMatrix pd_inverse_sqrt(const HermitianMatrix& m) {
    const auto eig = eig_hermitian(m);
    if (eig.eigenvalues.front() <= tol::inv_ratio * std::abs(eig.eigenvalues.back()))
        throw Singular("pd_inverse_sqrt: matrix not positive definite");
    return spectral_map(m, [](double x) { return 1.0 / std::sqrt(x); });
}

namespace {

// Hadamard bound |det| <= prod_i ||row_i||; the ratio det/bound is a
// scale-invariant conditioning measure.
double hadamard_bound(const SquareMatrix& m) {
    double prod = 1.0;
    for (int i = 0; i < m.dim(); ++i) {
        double row = 0.0;
        for (int j = 0; j < m.dim(); ++j) row += std::norm(m(i, j));
        prod *= std::sqrt(row);
    }
    return prod;
}

SquareMatrix inverse_small(const SquareMatrix& m) {
    const int n = m.dim();
    SquareMatrix r(n);
    if (n == 1) {
        const cx d = m(0, 0);
        if (std::abs(d) == 0.0) throw Singular("inverse: zero 1x1 matrix");
        r(0, 0) = 1.0 / d;
        return r;
    }
    if (n == 2) {
        const cx d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        if (std::abs(d) <= tol::inv_ratio * hadamard_bound(m))
            throw Singular("inverse: 2x2 determinant too small");
        r(0, 0) = m(1, 1) / d;
        r(0, 1) = -m(0, 1) / d;
        r(1, 0) = -m(1, 0) / d;
        r(1, 1) = m(0, 0) / d;
        return r;
    }
    // n == 3: adjugate.
    const cx c00 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const cx c01 = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    const cx c02 = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    const cx d = m(0, 0) * c00 + m(0, 1) * c01 + m(0, 2) * c02;
    if (std::abs(d) <= tol::inv_ratio * hadamard_bound(m))
        throw Singular("inverse: 3x3 determinant too small");
    r(0, 0) = c00 / d;
    r(1, 0) = c01 / d;
    r(2, 0) = c02 / d;
    r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
    r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
    r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
    r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
    r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
    r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
    return r;
}

} // namespace

SquareMatrix inverse(const SquareMatrix& m) {
    if (!m.all_finite()) throw InvalidMatrix("inverse: non-finite entries");
    const int n = m.dim();
    if (n <= 3) return inverse_small(m);

    // Gauss-Jordan with partial pivoting on [M | I].
    SquareMatrix a = m;
    SquareMatrix r = SquareMatrix::identity(n);
    const double scale = m.max_abs();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
        if (std::abs(a(piv, col)) <= tol::inv_ratio * (scale > 0.0 ? scale : 1.0))
            throw Singular("inverse: pivot too small at column " + std::to_string(col));
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(r(piv, j), r(col, j));
            }
        const cx inv_piv = 1.0 / a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) *= inv_piv;
            r(col, j) *= inv_piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const cx f = a(i, col);
            if (f == cx{}) continue;
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                r(i, j) -= f * r(col, j);
            }
        }
    }
    return r;
}

double spectral_radius(const SquareMatrix& m) {
    const int n = m.dim();
    if (n == 1) return std::abs(m(0, 0));
    const double scale = m.frobenius();
    if (scale == 0.0) return 0.0;
    if (hermitian_defect(m) <= 1e-12 * scale) {
        const auto eig = eig_hermitian(HermitianMatrix::symmetrize(m));
        return std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
    }
    if (n <= 3) {
        double r = 0.0;
        for (const cx& root : polynomial_roots(characteristic_polynomial(m)))
            r = std::max(r, std::abs(root));
        return r;
    }

    // Power iteration with a Rayleigh-quotient estimate.
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<cx> v(static_cast<size_t>(n));
    for (auto& x : v) x = cx(uni(rng), uni(rng));
    double prev = 0.0;
    for (int it = 0; it < 20000; ++it) {
        std::vector<cx> w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            cx acc = 0.0;
            for (int j = 0; j < n; ++j) acc += m(i, j) * v[static_cast<size_t>(j)];
            w[static_cast<size_t>(i)] = acc;
        }
        double nw = 0.0;
        for (const auto& x : w) nw += std::norm(x);
        nw = std::sqrt(nw);
        if (nw == 0.0) return 0.0;
        cx rq = 0.0;
        for (int i = 0; i < n; ++i) rq += std::conj(v[static_cast<size_t>(i)]) * w[static_cast<size_t>(i)];
        const double est = std::abs(rq);
        for (auto& x : w) x /= nw;
        v = std::move(w);
        if (it > 8 && std::abs(est - prev) <= 1e-13 * std::max(est, 1.0)) return est;
        prev = est;
    }
    // Rotating dominant pair or slow separation: fall back to char-poly roots
    // for modest dims.
    if (n <= 12) {
        double r = 0.0;
        for (const cx& root : polynomial_roots(characteristic_polynomial(m)))
            r = std::max(r, std::abs(root));
        return r;
    }
    throw NoConvergence("spectral_radius: power iteration stalled");
}

double spectral_radius_ratio(const HermitianMatrix& numer, const HermitianMatrix& denom) {
    require_same_dim(numer, denom, "spectral_radius_ratio");
    const HermitianMatrix root = pd_inverse_sqrt(denom);
    const SquareMatrix sim = root.mat() * numer.mat() * root.mat();
    const auto eig = eig_hermitian(HermitianMatrix::symmetrize(sim));
    return std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
}

double commutator_norm(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b, "commutator_norm");
    return (a * b - b * a).frobenius();
}

cx trace(const SquareMatrix& m) {
    cx s = 0.0;
    for (int i = 0; i < m.dim(); ++i) s += m(i, i);
    return s;
}

double operator_norm(const SquareMatrix& m) {
    const auto eig = eig_hermitian(HermitianMatrix::symmetrize(m.adjoint() * m));
    return std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
}

void require_invertible(const SquareMatrix& m, const char* what) {
    const auto eig = eig_hermitian(HermitianMatrix::symmetrize(m.adjoint() * m));
    const double lo = eig.eigenvalues.front();
    const double hi = eig.eigenvalues.back();
    if (lo <= tol::inv_ratio * tol::inv_ratio * hi || hi == 0.0)
        throw Singular(std::string(what) + ": matrix numerically singular");
}

} // namespace misoshift
