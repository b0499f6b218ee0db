#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "misoshift/analyze.hpp"
#include "misoshift/completion.hpp"

using namespace misoshift;
using namespace testutil;

TEST_CASE("lagrange basis for m = 1") {
    const auto basis = lagrange_basis(1);
    REQUIRE(basis.size() == 2);
    // l0 = 1 - z, l1 = z
    CHECK(basis[0].c[0] == doctest::Approx(1.0));
    CHECK(basis[0].c[1] == doctest::Approx(-1.0));
    CHECK(basis[1].c[0] == doctest::Approx(0.0));
    CHECK(basis[1].c[1] == doctest::Approx(1.0));
}

TEST_CASE("lagrange basis node evaluation for m = 2") {
    const auto basis = lagrange_basis(2);
    for (int j = 0; j <= 2; ++j)
        for (int node = 0; node <= 2; ++node)
            CHECK(basis[static_cast<size_t>(j)](node) ==
                  doctest::Approx(j == node ? 1.0 : 0.0).epsilon(1e-13));
    // l1 = z(2 - z)
    CHECK(basis[1](0.5) == doctest::Approx(0.5 * 1.5).epsilon(1e-13));
}

TEST_CASE("lagrange basis is a partition of unity up to m = 8") {
    for (int m = 1; m <= 8; ++m) {
        const auto basis = lagrange_basis(m);
        for (double z : {-1.5, 0.3, 2.7, 5.5, 9.0}) {
            double total = 0.0;
            for (const auto& l : basis) total += l(z);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        }
    }
}

TEST_CASE("completion polynomial for the scalar prefix (2)") {
    const auto cp = completion_polynomial({SquareMatrix::diagonal({2.0})});
    // p(z) = 1 + 3z interpolates 1 and |2|^2 = 4; the sup bound
    // 4 (2n - 1) / (n (n - 1)) is attained at n = 2 with value 6.
    CHECK(cp.sup_bound == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(cp.alpha == doctest::Approx(6.6).epsilon(1e-12));
    CHECK(cp.q.eval(0.0)(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cp.q.eval(1.0)(0, 0).real() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("completion polynomial for the identity prefix") {
    const auto cp = completion_polynomial({SquareMatrix::identity(2)});
    CHECK(frob_diff(cp.q.eval(0.0), SquareMatrix::identity(2)) < 1e-12);
    CHECK(frob_diff(cp.q.eval(1.0), SquareMatrix::identity(2)) < 1e-12);
}

TEST_CASE("completion polynomial interpolates random prefix grams") {
    for (int trial = 0; trial < 5; ++trial) {
        const SquareMatrix a1 = random_invertible(2);
        const SquareMatrix a2 = random_invertible(2);
        const auto cp = completion_polynomial({a1, a2});
        const SquareMatrix g1 = a1.adjoint() * a1;
        const SquareMatrix prod = a2 * a1;
        const SquareMatrix g2 = prod.adjoint() * prod;
        CHECK(frob_diff(cp.q.eval(1.0), g1) < 1e-10 * (1.0 + g1.frobenius()));
        CHECK(frob_diff(cp.q.eval(2.0), g2) < 1e-10 * (1.0 + g2.frobenius()));
    }
}

TEST_CASE("completion polynomial stays positive definite past the prefix") {
    const auto cp = completion_polynomial(
        {random_invertible(3), random_invertible(3), random_invertible(3)});
    for (int n = 4; n <= 40; ++n)
        CHECK(is_positive_definite(HermitianMatrix::symmetrize(cp.q.eval(n))));
}

TEST_CASE("scalar completion of (2) follows the q-ratio recursion") {
    const auto res = complete_weights({SquareMatrix::diagonal({2.0})}, 16);
    CHECK(res.report.verdict);
    CHECK(res.report.m == 3);
    CHECK(res.weights.weight(1)(0, 0).real() == doctest::Approx(2.0));
    for (long n = 2; n <= 16; ++n) {
        const double qn = res.q.eval(static_cast<double>(n))(0, 0).real();
        const double qprev = res.q.eval(static_cast<double>(n - 1))(0, 0).real();
        const double lam = res.weights.weight(n)(0, 0).real();
        CHECK(lam * lam == doctest::Approx(qn / qprev).epsilon(1e-10));
    }
}

TEST_CASE("non-Hermitian prefix weight is kept verbatim") {
    const SquareMatrix a1 = SquareMatrix::of(2, {1, 1, 0, 1});
    const auto res = complete_weights({a1}, 12);
    CHECK(res.report.verdict);
    CHECK(frob_diff(res.weights.weight(1), a1) == 0.0);
    for (long n = 2; n <= 12; ++n) {
        const SquareMatrix& s = res.weights.weight(n);
        CHECK(hermitian_defect(s) < 1e-10);
        CHECK(is_positive_definite(HermitianMatrix::symmetrize(s)));
    }
}

TEST_CASE("non-commuting PD prefix completes to a 4-isometry with non-commuting weights") {
    const SquareMatrix a1 = SquareMatrix::of(2, {2, 0, 0, 1});
    const SquareMatrix a2 = SquareMatrix::of(2, {2, 1, 1, 1});
    const auto res = complete_weights({a1, a2}, 16);
    CHECK(res.report.verdict);
    CHECK(res.report.m == 4);
    CHECK_FALSE(weights_commute(res.weights).commute);
}

TEST_CASE("prefix preservation is bit-identical") {
    std::vector<SquareMatrix> prefix{random_invertible(3), random_invertible(3)};
    const auto res = complete_weights(prefix, 12);
    for (size_t j = 0; j < prefix.size(); ++j)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(res.weights.weight(static_cast<long>(j) + 1)(r, c) == prefix[j](r, c));
}

TEST_CASE("completed weight norms respect the uniform bound") {
    const auto res = complete_weights({SquareMatrix::diagonal({2.0})}, 24);
    const int m = 1;
    double prefix_norms = 0.0;
    for (long j = 1; j <= m + 1; ++j)
        prefix_norms = std::max(prefix_norms, operator_norm(res.weights.weight(j)));
    double cap = 0.0;
    for (long n = m + 1; n <= 24; ++n)
        cap = std::max(cap, spectral_radius_ratio(
                                HermitianMatrix::symmetrize(res.q.eval(static_cast<double>(n))),
                                HermitianMatrix::symmetrize(res.q.eval(static_cast<double>(n - 1)))));
    const double bound = std::max(std::sqrt(cap), prefix_norms);
    CHECK(shift_norm(res.weights) <= bound + 1e-8);
}

TEST_CASE("completion rejects singular prefixes and short horizons") {
    CHECK_THROWS_AS(complete_weights({SquareMatrix::of(2, {1, 1, 1, 1})}, 12), Singular);
    CHECK_THROWS_AS(complete_weights({SquareMatrix::identity(2)}, 3), HorizonTooShort);
}

TEST_CASE("2-isometry starting predicate") {
    CHECK(can_start_2isometry(SquareMatrix::diagonal({2.0})));
    CHECK(can_start_2isometry(SquareMatrix::identity(3)));
    CHECK_FALSE(can_start_2isometry(SquareMatrix::diagonal({0.5})));
}
