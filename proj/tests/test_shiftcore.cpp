#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "misoshift/construct.hpp"

using namespace misoshift;
using namespace testutil;

namespace {

WeightSequence identity_weights(int dim, int count) {
    return WeightSequence::unilateral(
        std::vector<SquareMatrix>(static_cast<size_t>(count), SquareMatrix::identity(dim)));
}

/// Scalar Dirichlet-type shift: S_n = sqrt((n+1)/n), so |S_n...S_1|^2 = n+1.
WeightSequence dirichlet_weights(int count) {
    std::vector<SquareMatrix> w;
    for (int n = 1; n <= count; ++n)
        w.push_back(SquareMatrix::diagonal({std::sqrt((n + 1.0) / n)}));
    return WeightSequence::unilateral(std::move(w));
}

} // namespace

TEST_CASE("gram of identity weights") {
    const WeightSequence w = identity_weights(2, 6);
    for (long j : {0L, 2L})
        for (long n : {0L, 1L, 3L})
            CHECK(frob_diff(gram(w, j, n).mat(), SquareMatrix::identity(2)) < 1e-15);
}

TEST_CASE("gram of Dirichlet weights telescopes to n+1") {
    const WeightSequence w = dirichlet_weights(12);
    for (long n = 0; n <= 12; ++n)
        CHECK(gram(w, 0, n)(0, 0).real() == doctest::Approx(n + 1.0).epsilon(1e-13));
}

TEST_CASE("gram matches direct product accumulation on random weights") {
    std::vector<SquareMatrix> ws;
    for (int i = 0; i < 6; ++i) ws.push_back(random_invertible(3));
    const WeightSequence w = WeightSequence::unilateral(ws);
    for (long j = 0; j <= 3; ++j)
        for (long n = 0; j + n <= 6; ++n) {
            SquareMatrix prod = SquareMatrix::identity(3);
            for (long k = j + 1; k <= j + n; ++k) prod = w.weight(k) * prod;
            CHECK(frob_diff(gram(w, j, n).mat(), prod.adjoint() * prod) < 1e-10);
        }
}

TEST_CASE("gram rejects out-of-horizon indices") {
    const WeightSequence w = identity_weights(2, 4);
    CHECK_THROWS_AS(gram(w, 2, 3), IndexOutOfHorizon);
}

TEST_CASE("beta blocks") {
    const WeightSequence id = identity_weights(2, 6);
    for (int m : {1, 2, 3}) CHECK(beta_block(id, m, 0).mat().frobenius() < 1e-14);

    const WeightSequence d = dirichlet_weights(10);
    for (long j = 0; j <= 6; ++j) CHECK(beta_block(d, 2, j).mat().frobenius() < 1e-12);
    CHECK(beta_block(d, 1, 0)(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("verify_m_isometry verdicts") {
    CHECK(verify_m_isometry(identity_weights(2, 6), 1).verdict);
    const WeightSequence d = dirichlet_weights(16);
    CHECK(verify_m_isometry(d, 2).verdict);
    CHECK_FALSE(verify_m_isometry(d, 1).verdict);
}

TEST_CASE("verify_m_isometry needs enough blocks") {
    CHECK_THROWS_AS(verify_m_isometry(identity_weights(2, 2), 4), HorizonTooShort);
}

TEST_CASE("m-isometry hierarchy: beta_{m+1} residual bounded by twice beta_m") {
    const auto res = construct_unilateral(poly_2x2(), 3, 24);
    const IsometryReport r3 = verify_m_isometry(res.weights, 3);
    const IsometryReport r4 = verify_m_isometry(res.weights, 4);
    CHECK(r3.verdict);
    CHECK(r4.verdict);
    CHECK(r4.max_residual <= 2.0 * r3.max_residual + 1e-14);
}

TEST_CASE("shift_norm") {
    CHECK(shift_norm(identity_weights(3, 5)) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(shift_norm(dirichlet_weights(12)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    const auto res = construct_bilateral(poly_2x2(), 3, 16);
    CHECK(shift_norm(res.weights) ==
          doctest::Approx(std::sqrt((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-9));
}

TEST_CASE("adjoint_flip") {
    const WeightSequence id = WeightSequence::bilateral(
        std::vector<SquareMatrix>(8, SquareMatrix::identity(2)));
    const WeightSequence flipped = adjoint_flip(id);
    CHECK(flipped.kind() == ShiftKind::bilateral);
    for (long j = flipped.first_index(); j <= flipped.last_index(); ++j)
        CHECK(frob_diff(flipped.weight(j), SquareMatrix::identity(2)) < 1e-15);

    // involution on the common range
    std::vector<SquareMatrix> ws;
    for (int i = 0; i < 8; ++i) ws.push_back(random_invertible(2));
    const WeightSequence w = WeightSequence::bilateral(ws);
    const WeightSequence twice = adjoint_flip(adjoint_flip(w));
    for (long j = twice.first_index(); j <= twice.last_index(); ++j)
        CHECK(frob_diff(twice.weight(j), w.weight(j)) < 1e-15);

    // index bookkeeping: weight a_0 = 2 lands at index 1 after the flip
    const WeightSequence scalar = WeightSequence::bilateral(
        {SquareMatrix::diagonal({2.0}), SquareMatrix::diagonal({3.0})});
    CHECK(adjoint_flip(scalar).weight(1)(0, 0).real() == doctest::Approx(2.0));
    CHECK(adjoint_flip(scalar).weight(0)(0, 0).real() == doctest::Approx(3.0));
}

TEST_CASE("adjoint_flip requires a bilateral sequence") {
    CHECK_THROWS_AS(adjoint_flip(identity_weights(2, 4)), WrongKind);
}

TEST_CASE("scalar_compression") {
    const std::vector<cx> e0{1.0, 0.0};
    for (double a : scalar_compression(identity_weights(2, 6), e0))
        CHECK(a == doctest::Approx(1.0).epsilon(1e-13));

    const auto alphas = scalar_compression(dirichlet_weights(10), {1.0});
    for (size_t j = 1; j <= alphas.size(); ++j)
        CHECK(alphas[j - 1] ==
              doctest::Approx(std::sqrt((j + 1.0) / j)).epsilon(1e-12));

    CHECK_THROWS_AS(scalar_compression(identity_weights(2, 4), {0.0, 0.0}), ZeroVector);
}

TEST_CASE("compression products give the quadratic form of p(n)") {
    const auto res = construct_unilateral(poly_2x2(), 3, 20);
    const std::vector<cx> x{cx(0.6, 0.3), cx(-0.2, 0.7)};
    const auto alphas = scalar_compression(res.weights, x);
    double prod = 1.0;
    for (long n = 1; n <= 20; ++n) {
        prod *= alphas[static_cast<size_t>(n - 1)] * alphas[static_cast<size_t>(n - 1)];
        const SquareMatrix pn = poly_2x2().eval(static_cast<double>(n));
        cx form = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) form += std::conj(x[i]) * pn(i, j) * x[j];
        CHECK(prod == doctest::Approx(form.real()).epsilon(1e-8));
    }
}

TEST_CASE("quadratic form of constructed grams is polynomial in n") {
    // characterization: n -> <p(n)x,x> has degree <= m-1
    const auto res = construct_unilateral(poly_2x2(), 3, 20);
    const std::vector<cx> x{cx(1.0, 0.0), cx(0.5, -0.5)};
    std::vector<double> vals;
    for (long n = 0; n <= 10; ++n) {
        const HermitianMatrix g = gram(res.weights, 0, n);
        cx form = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) form += std::conj(x[i]) * g(i, j) * x[j];
        vals.push_back(form.real());
    }
    // third differences of a degree-2 sequence vanish
    for (size_t n = 0; n + 3 < vals.size(); ++n) {
        const double d3 = vals[n + 3] - 3 * vals[n + 2] + 3 * vals[n + 1] - vals[n];
        CHECK(std::abs(d3) < 1e-8 * (1.0 + std::abs(vals[n + 3])));
    }
}

TEST_CASE("binomial coefficients are exact") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(30, 15) == 155117520LL);
}

TEST_CASE("weight sequences require invertible weights") {
    CHECK_THROWS_AS(WeightSequence::unilateral({SquareMatrix::of(2, {1, 1, 1, 1})}), Singular);
}
