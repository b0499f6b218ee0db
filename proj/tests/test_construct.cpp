#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "misoshift/construct.hpp"

using namespace misoshift;
using namespace testutil;

TEST_CASE("identity polynomial gives identity weights") {
    const MatrixPolynomial p = MatrixPolynomial::constant(SquareMatrix::identity(2));
    for (int m : {1, 2, 3}) {
        const auto res = construct_unilateral(p, m, 12);
        CHECK(res.report.verdict);
        for (long j = 1; j <= res.weights.last_index(); ++j)
            CHECK(frob_diff(res.weights.weight(j), SquareMatrix::identity(2)) < 1e-12);
    }
}

TEST_CASE("scalar p(z) = 1 + z gives the Dirichlet shift") {
    const auto res = construct_unilateral(MatrixPolynomial::scalar({1.0, 1.0}), 2, 32);
    CHECK(res.report.verdict);
    CHECK(res.weights.weight(1)(0, 0).real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    for (long n = 1; n <= 32; ++n)
        CHECK(res.weights.weight(n)(0, 0).real() ==
              doctest::Approx(std::sqrt((n + 1.0) / n)).epsilon(1e-10));
}

TEST_CASE("diagonal p decouples into scalar recursions") {
    const MatrixPolynomial p = MatrixPolynomial::diagonal({{1.0, 1.0}, {1.0, 2.0}});
    const auto res = construct_unilateral(p, 2, 24);
    CHECK(res.report.verdict);
    for (long n = 1; n <= 24; ++n) {
        CHECK(res.weights.weight(n)(0, 0).real() ==
              doctest::Approx(std::sqrt((n + 1.0) / n)).epsilon(1e-9));
        CHECK(res.weights.weight(n)(1, 1).real() ==
              doctest::Approx(std::sqrt((2.0 * n + 1.0) / (2.0 * n - 1.0))).epsilon(1e-9));
        CHECK(std::abs(res.weights.weight(n)(0, 1)) < 1e-10);
    }
}

TEST_CASE("grams interpolate p at the naturals") {
    const auto res = construct_unilateral(poly_2x2(), 3, 24);
    for (long n = 0; n <= 24; ++n) {
        const double scale = 1.0 + poly_2x2().eval(n).frobenius();
        CHECK(frob_diff(gram(res.weights, 0, n).mat(), poly_2x2().eval(n)) < 1e-9 * scale);
    }
}

TEST_CASE("constructed weights are Hermitian positive definite") {
    const auto res = construct_unilateral(poly_2x2(), 3, 16);
    for (long n = 1; n <= 16; ++n) {
        const SquareMatrix& s = res.weights.weight(n);
        CHECK(hermitian_defect(s) < 1e-10);
        CHECK(is_positive_definite(HermitianMatrix::symmetrize(s)));
    }
}

TEST_CASE("fit of grams at 0..m-1 recovers p") {
    const auto res = construct_unilateral(poly_2x2(), 3, 16);
    std::vector<SquareMatrix> values;
    for (int n = 0; n < 3; ++n) values.push_back(gram(res.weights, 0, n).mat());
    const MatrixPolynomial fit = fit_from_values(values);
    for (int j = 0; j <= 2; ++j)
        CHECK(frob_diff(fit.coeff(j), poly_2x2().coeff(j)) < 1e-9);
}

TEST_CASE("spectra of S_n^2 match the similarity form") {
    const auto res = construct_unilateral(poly_2x2(), 3, 20);
    const MatrixPolynomial p = poly_2x2();
    for (long n = 1; n <= 20; ++n) {
        const SquareMatrix& s = res.weights.weight(n);
        const auto left = eig_hermitian(HermitianMatrix::symmetrize(s * s));
        const HermitianMatrix prev(p.eval(n - 1.0));
        const HermitianMatrix inv_sqrt = pd_inverse_sqrt(prev);
        const auto right = eig_hermitian(
            HermitianMatrix::symmetrize(inv_sqrt.mat() * p.eval(n) * inv_sqrt.mat()));
        for (size_t k = 0; k < left.eigenvalues.size(); ++k)
            CHECK(left.eigenvalues[k] == doctest::Approx(right.eigenvalues[k]).epsilon(1e-8));
    }
}

TEST_CASE("weight norms stay below the capacity estimate") {
    const auto res = construct_unilateral(poly_2x2(), 3, 32);
    const double norm = shift_norm(res.weights);
    CHECK(norm * norm <= res.capacity_estimate + 1e-8);
}

TEST_CASE("precondition failures throw with the offending item") {
    // degree too large for m
    CHECK_THROWS_AS(construct_unilateral(poly_2x2(), 2, 12), PreconditionFailed);
    // p(0) != I
    const MatrixPolynomial bad0(2, {SquareMatrix::of(2, {2, 0, 0, 1})});
    CHECK_THROWS_AS(construct_unilateral(bad0, 1, 12), PreconditionFailed);
}

TEST_CASE("bilateral identity polynomial gives the unitary shift") {
    const MatrixPolynomial p = MatrixPolynomial::constant(SquareMatrix::identity(2));
    const auto res = construct_bilateral(p, 1, 8);
    CHECK(res.report.verdict);
    for (long j = res.weights.first_index(); j <= res.weights.last_index(); ++j)
        CHECK(frob_diff(res.weights.weight(j), SquareMatrix::identity(2)) < 1e-12);
}

TEST_CASE("bilateral 1 + z fails positivity at n = -1") {
    CHECK_THROWS_AS(construct_bilateral(MatrixPolynomial::scalar({1.0, 1.0}), 2, 8),
                    PreconditionFailed);
}

TEST_CASE("bilateral 2x2 example is 3-isometric along with its adjoint") {
    const auto res = construct_bilateral(poly_2x2(), 3, 16);
    CHECK(res.report.verdict);
    CHECK(verify_m_isometry(adjoint_flip(res.weights), 3).verdict);
}

TEST_CASE("bilateral negative branch interpolates p at negative integers") {
    const auto res = construct_bilateral(poly_2x2(), 3, 12);
    const MatrixPolynomial p = poly_2x2();
    for (long n = 1; n <= 11; ++n) {
        // p(-n) = |S_{-n+1}* ... S_0*|^{-2}
        SquareMatrix prod = SquareMatrix::identity(2);
        for (long j = 0; j >= -n + 1; --j) prod = res.weights.weight(j).adjoint() * prod;
        const SquareMatrix gram_inv = inverse(prod.adjoint() * prod);
        const double scale = 1.0 + p.eval(-static_cast<double>(n)).frobenius();
        CHECK(frob_diff(gram_inv, p.eval(-static_cast<double>(n))) < 1e-8 * scale);
    }
}

TEST_CASE("bilateral grams on the positive branch match p") {
    const auto res = construct_bilateral(poly_2x2(), 3, 12);
    for (long n = 0; n <= 12; ++n) {
        const double scale = 1.0 + poly_2x2().eval(n).frobenius();
        CHECK(frob_diff(gram(res.weights, 0, n).mat(), poly_2x2().eval(n)) < 1e-9 * scale);
    }
}

TEST_CASE("construction rejects too-short horizons") {
    CHECK_THROWS_AS(
        construct_unilateral(MatrixPolynomial::constant(SquareMatrix::identity(2)), 4, 3),
        HorizonTooShort);
}
