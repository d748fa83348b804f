#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mexp/taylor_schemes.hpp"
#include "support/frozen_coefficients.hpp"
#include "support/test_support.hpp"

using namespace mexp;
using testsup::abs_diff;
using testsup::random_with_norm;
using testsup::rel_diff;
using testsup::ulp_distance;

namespace {

constexpr double kU = 0x1p-53;

double scalar_taylor(double x, int n) {
    double term = 1.0, sum = 1.0;
    for (int i = 1; i <= n; ++i) {
        term *= x / i;
        sum += term;
    }
    return sum;
}

DenseMatrix scalar1x1(double x) { return DenseMatrix::from_rows({{x}}); }

}  // namespace

TEST_CASE("taylor_oracle") {
    CHECK(taylor_oracle(DenseMatrix(3), 12) == DenseMatrix::identity(3));
    const DenseMatrix t = taylor_oracle(scalar1x1(0.8), 8);
    CHECK(t.at(0, 0) == doctest::Approx(scalar_taylor(0.8, 8)).epsilon(1e-15));
    const DenseMatrix nil = DenseMatrix::from_rows({{0, 1}, {0, 0}});
    CHECK(taylor_oracle(nil, 5) == DenseMatrix::from_rows({{1, 1}, {0, 1}}));
}

TEST_CASE("psi_oracle") {
    std::mt19937_64 rng(20);
    const DenseMatrix a = testsup::random_matrix(4, rng);
    CHECK(psi_oracle(a, 1) == DenseMatrix::identity(4));
    CHECK(psi_oracle(DenseMatrix::identity(3), 9) ==
          scaled(DenseMatrix::identity(3), 9.0));
    const DenseMatrix nil = DenseMatrix::from_rows({{0, 1}, {0, 0}});
    CHECK(psi_oracle(nil, 9) == DenseMatrix::from_rows({{1, 1}, {0, 1}}));
}

TEST_CASE("eval_t8 matches the oracle") {
    CostContext ctx;
    CHECK(abs_diff(eval_t8(ctx, DenseMatrix(3)), DenseMatrix::identity(3)) <=
          4.0 * kU);

    ctx.reset();
    const DenseMatrix s = eval_t8(ctx, scalar1x1(0.5));
    CHECK(std::abs(s.at(0, 0) - scalar_taylor(0.5, 8)) <=
          5.0 * kU * scalar_taylor(0.5, 8));

    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 20; ++rep) {
        const DenseMatrix a = random_with_norm(8, 4.99e-2, rng);
        ctx.reset();
        CHECK(rel_diff(eval_t8(ctx, a), taylor_oracle(a, 8)) <= 50.0 * kU);
    }
}

TEST_CASE("eval_t12 matches the oracle") {
    CostContext ctx;
    CHECK(abs_diff(eval_t12(ctx, DenseMatrix(3)), DenseMatrix::identity(3)) <= 1e-12);

    ctx.reset();
    const DenseMatrix s = eval_t12(ctx, scalar1x1(0.25));
    CHECK(std::abs(s.at(0, 0) - scalar_taylor(0.25, 12)) <=
          1e-14 * scalar_taylor(0.25, 12));

    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 20; ++rep) {
        const DenseMatrix a = random_with_norm(8, 2.99e-1, rng);
        ctx.reset();
        CHECK(rel_diff(eval_t12(ctx, a), taylor_oracle(a, 12)) <= 1e-13);
    }
}

TEST_CASE("eval_t18 matches the oracle") {
    CostContext ctx;
    CHECK(abs_diff(eval_t18(ctx, DenseMatrix(3)), DenseMatrix::identity(3)) <= 1e-12);

    ctx.reset();
    const DenseMatrix s = eval_t18(ctx, scalar1x1(1.0));
    CHECK(std::abs(s.at(0, 0) - scalar_taylor(1.0, 18)) <=
          1e-14 * scalar_taylor(1.0, 18));

    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        const DenseMatrix a = random_with_norm(8, 1.09, rng);
        ctx.reset();
        CHECK(rel_diff(eval_t18(ctx, a), taylor_oracle(a, 18)) <= 1e-13);
    }
}

TEST_CASE("eval_ps matches the oracle") {
    CostContext ctx;
    CHECK(eval_ps(ctx, DenseMatrix(4), 16) == DenseMatrix::identity(4));

    ctx.reset();
    const DenseMatrix s = eval_ps(ctx, scalar1x1(0.7), 9);
    CHECK(std::abs(s.at(0, 0) - scalar_taylor(0.7, 9)) <=
          5.0 * kU * scalar_taylor(0.7, 9));

    std::mt19937_64 rng(24);
    for (int rep = 0; rep < 20; ++rep) {
        const DenseMatrix a = random_with_norm(8, 7.80e-1, rng);
        ctx.reset();
        CHECK(rel_diff(eval_ps(ctx, a, 16), taylor_oracle(a, 16)) <= 1e-13);
    }

    CHECK_THROWS_AS(eval_ps(ctx, DenseMatrix(2), 7), std::invalid_argument);
}

TEST_CASE("psi9 matches the geometric oracle") {
    CostContext ctx;
    CHECK(abs_diff(psi9(ctx, DenseMatrix(3)), DenseMatrix::identity(3)) <= 8.0 * kU);
    ctx.reset();
    CHECK(abs_diff(psi9(ctx, DenseMatrix::identity(3)),
                   scaled(DenseMatrix::identity(3), 9.0)) <= 72.0 * kU);
    ctx.reset();
    const DenseMatrix s = psi9(ctx, scalar1x1(0.5));
    CHECK(s.at(0, 0) == doctest::Approx(1.99609375).epsilon(1e-15));
}

TEST_CASE("degree equivalence against the oracles") {
    struct Scheme {
        const char* name;
        double theta;
        DenseMatrix (*eval)(CostContext&, const DenseMatrix&);
        int oracle_degree;  // 0 marks the geometric sum
    };
    static const Scheme schemes[] = {
        {"T8", 4.99e-2, eval_t8, 8},
        {"T12", 2.99e-1, eval_t12, 12},
        {"T18", 1.09, eval_t18, 18},
        {"Psi9", 0.5,
         [](CostContext& c, const DenseMatrix& a) { return psi9(c, a); }, 0},
    };
    const int dims[] = {2, 4, 8, 16, 32};
    const double fractions[] = {0.1, 0.5, 1.0};

    std::mt19937_64 rng(25);
    for (const auto& sch : schemes) {
        CAPTURE(sch.name);
        double worst = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            const int n = dims[rep % 5];
            const double norm = sch.theta * fractions[(rep / 5) % 3];
            const DenseMatrix a = random_with_norm(n, norm, rng);
            CostContext ctx;
            const DenseMatrix got = sch.eval(ctx, a);
            const DenseMatrix want =
                sch.oracle_degree ? taylor_oracle(a, sch.oracle_degree)
                                  : psi_oracle(a, 9);
            worst = std::max(worst, rel_diff(got, want));
        }
        CHECK(worst <= 1e-13);
    }

    // Paterson-Stockmeyer degrees with their double-precision thresholds
    const std::pair<int, double> ps[] = {
        {2, 2.58e-8}, {4, 3.40e-4}, {6, 9.07e-3}, {9, 8.96e-2}, {16, 7.80e-1}};
    for (const auto& [deg, theta] : ps) {
        CAPTURE(deg);
        double worst = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            const int n = dims[rep % 5];
            const DenseMatrix a =
                random_with_norm(n, theta * fractions[(rep / 5) % 3], rng);
            CostContext ctx;
            worst = std::max(worst,
                             rel_diff(eval_ps(ctx, a, deg), taylor_oracle(a, deg)));
        }
        CHECK(worst <= 1e-13);
    }
}

TEST_CASE("product counts match the published table") {
    std::mt19937_64 rng(26);
    const DenseMatrix a = testsup::random_matrix(6, rng);
    CostContext ctx;

    (void)eval_t8(ctx, a);
    CHECK(ctx.products == 3);
    ctx.reset();
    (void)eval_t12(ctx, a);
    CHECK(ctx.products == 4);
    ctx.reset();
    (void)eval_t18(ctx, a);
    CHECK(ctx.products == 5);
    ctx.reset();
    (void)psi9(ctx, a);
    CHECK(ctx.products == 3);

    const std::pair<int, int> ps_costs[] = {{2, 1}, {4, 2}, {6, 3}, {9, 4}, {16, 6}};
    for (const auto& [deg, cost] : ps_costs) {
        ctx.reset();
        (void)eval_ps(ctx, a, deg);
        CHECK(ctx.products == cost);
    }
    CHECK(ctx.solves == 0);
}

TEST_CASE("closed-form coefficients match frozen values to 1 ulp") {
    const testsup::FrozenT8 f8;
    const auto& t8 = t8_coefficients();
    CHECK(ulp_distance(t8.x1, f8.x1) <= 1);
    CHECK(ulp_distance(t8.x2, f8.x2) <= 1);
    CHECK(ulp_distance(t8.x3, f8.x3) <= 1);
    CHECK(ulp_distance(t8.x4, f8.x4) <= 1);
    CHECK(ulp_distance(t8.x5, f8.x5) <= 1);
    CHECK(ulp_distance(t8.x6, f8.x6) <= 1);
    CHECK(ulp_distance(t8.x7, f8.x7) <= 1);
    CHECK(t8.y0 == 1.0);
    CHECK(t8.y1 == 1.0);
    CHECK(ulp_distance(t8.y2, f8.y2) <= 1);

    const testsup::FrozenPsi9 f9;
    const auto& p9 = psi9_coefficients();
    CHECK(ulp_distance(p9.x1, f9.x1) <= 1);
    CHECK(p9.x2 == f9.x2);
    CHECK(p9.x3 == f9.x3);
    CHECK(ulp_distance(p9.x4, f9.x4) <= 1);
    CHECK(ulp_distance(p9.x5, f9.x5) <= 1);
    CHECK(p9.x6 == 1695.0 / 4096.0);
    CHECK(p9.x7 == 267.0 / 512.0);
    CHECK(p9.x8 == 21.0 / 64.0);
    CHECK(ulp_distance(p9.x9, f9.x9) <= 1);
}

TEST_CASE("near-zero printed coefficients are kept verbatim") {
    CHECK(kT12[0][0] == 9.0198e-16);
    CHECK(kT12[0][3] == -2.0861320e-13);
}

TEST_CASE("psi identity (I - A) psi9(A) = I - A^9") {
    std::mt19937_64 rng(27);
    for (int rep = 0; rep < 25; ++rep) {
        const DenseMatrix a = random_with_norm(8, 0.5, rng);
        CostContext ctx;
        const DenseMatrix psi = psi9(ctx, a);
        const DenseMatrix id = DenseMatrix::identity(8);
        DenseMatrix a9 = a;
        for (int i = 0; i < 8; ++i) a9 = matmul(a9, a);
        const DenseMatrix lhs = matmul(sub(id, a), psi);
        const double tol = 50.0 * kU * one_norm(sub(id, a)) * one_norm(psi);
        CHECK(abs_diff(lhs, sub(id, a9)) <= tol);
    }
}
