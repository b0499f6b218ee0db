#include "misoshift/matrix.hpp"

#include <cmath>

namespace misoshift {

SquareMatrix SquareMatrix::identity(int dim) {
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SquareMatrix SquareMatrix::diagonal(const std::vector<cx>& d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

SquareMatrix SquareMatrix::adjoint() const {
    SquareMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
    require_same_dim(*this, o, "operator+");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o) {
    require_same_dim(*this, o, "operator-");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

SquareMatrix& SquareMatrix::operator*=(cx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b, "operator*");
    const int n = a.dim();
    SquareMatrix r(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cx aik = a(i, k);
            if (aik == cx{}) continue;
            for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

double SquareMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double SquareMatrix::max_abs() const {
    double s = 0.0;
    for (const auto& v : a_) s = std::max(s, std::abs(v));
    return s;
}

bool SquareMatrix::all_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b, const char* where) {
    if (a.dim() != b.dim())
        throw DimMismatch(std::string(where) + ": dims " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
}

double hermitian_defect(const SquareMatrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j) - std::conj(m(j, i)));
    return std::sqrt(s);
}

HermitianMatrix::HermitianMatrix(const SquareMatrix& m) {
    if (!m.all_finite()) throw InvalidMatrix("non-finite entries");
    const double defect = hermitian_defect(m);
    const double scale = m.frobenius();
    if (defect > tol::herm_rel * (scale > 0.0 ? scale : 1.0))
        throw NonHermitianInput("conjugate-symmetry defect " + std::to_string(defect) +
                                " exceeds tolerance");
    *this = symmetrize(m);
}

HermitianMatrix HermitianMatrix::symmetrize(const SquareMatrix& m) {
    HermitianMatrix h;
    SquareMatrix r(m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j <= i; ++j) {
            const cx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            r(i, j) = v;
            r(j, i) = std::conj(v);
        }
        r(i, i) = cx(r(i, i).real(), 0.0);
    }
    h.m_ = std::move(r);
    return h;
}

HermitianMatrix HermitianMatrix::real_diagonal(const std::vector<double>& d) {
    std::vector<cx> dc(d.begin(), d.end());
    return symmetrize(SquareMatrix::diagonal(dc));
}

} // namespace misoshift
