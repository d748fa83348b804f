#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "mexp/pade.hpp"
#include "mexp/series.hpp"
#include "mexp/taylor_schemes.hpp"
#include "support/test_support.hpp"

using namespace mexp;
using testsup::abs_diff;
using testsup::random_with_norm;
using testsup::rel_diff;

namespace {

constexpr double kU = 0x1p-53;

// scalar r_2m in extended precision; oracle for the order checks
Real60 scalar_pade(int m, const Real60& x) {
    std::vector<Real60> b(m + 1);
    b[0] = 1;
    for (int j = 0; j < m; ++j)
        b[j + 1] = b[j] * Real60(m - j) / (Real60(2 * m - j) * Real60(j + 1));
    Real60 px = 0, pmx = 0, xp = 1;
    for (int j = 0; j <= m; ++j) {
        px += b[j] * xp;
        pmx += (j % 2 ? -b[j] : b[j]) * xp;
        xp *= x;
    }
    return px / pmx;
}

double remainder_slope(int m, double lo, double hi, int points) {
    std::vector<double> xs(points), ys(points);
    for (int i = 0; i < points; ++i) {
        const Real60 x = Real60(lo) * pow(Real60(hi) / Real60(lo),
                                          Real60(i) / Real60(points - 1));
        const Real60 err = abs(scalar_pade(m, x) - exp(x));
        xs[i] = double(log10(x));
        ys[i] = double(log10(err));
    }
    double mx = 0, my = 0;
    for (int i = 0; i < points; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= points;
    my /= points;
    double num = 0, den = 0;
    for (int i = 0; i < points; ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

}  // namespace

TEST_CASE("pade_coeffs from the factorial formula") {
    const auto c1 = pade_coeffs(1);
    CHECK(c1.b == std::vector<double>{1.0, 0.5});
    const auto c2 = pade_coeffs(2);
    CHECK(c2.b == std::vector<double>{1.0, 0.5, 1.0 / 12.0});
    const auto c5 = pade_coeffs(5);
    CHECK(c5.b[5] == 1.0 / 30240.0);

    for (int m = 1; m <= 13; ++m) {
        const auto c = pade_coeffs(m);
        CHECK(c.b[0] == 1.0);
        for (int j = 1; j <= m; ++j) {
            CHECK(c.b[j] > 0.0);
            CHECK(c.b[j] < c.b[j - 1]);
        }
    }
    CHECK_THROWS_AS(pade_coeffs(0), std::invalid_argument);
    CHECK_THROWS_AS(pade_coeffs(14), std::invalid_argument);
}

TEST_CASE("eval_r10 examples") {
    CostContext ctx;
    CHECK(eval_r10(ctx, DenseMatrix(3)) == DenseMatrix::identity(3));

    ctx.reset();
    const DenseMatrix s = eval_r10(ctx, DenseMatrix::from_rows({{0.1}}));
    CHECK(std::abs(s.at(0, 0) - std::exp(0.1)) <= 1e-15 * std::exp(0.1));

    ctx.reset();
    const double t = 0.2;
    const DenseMatrix rot = eval_r10(ctx, DenseMatrix::from_rows({{0, t}, {-t, 0}}));
    const DenseMatrix want = DenseMatrix::from_rows(
        {{std::cos(t), std::sin(t)}, {-std::sin(t), std::cos(t)}});
    CHECK(abs_diff(rot, want) <= 1e-14);
}

TEST_CASE("eval_r26 examples") {
    CostContext ctx;
    CHECK(eval_r26(ctx, DenseMatrix(3)) == DenseMatrix::identity(3));

    ctx.reset();
    const DenseMatrix s = eval_r26(ctx, DenseMatrix::from_rows({{3.0}}));
    CHECK(std::abs(s.at(0, 0) - std::exp(3.0)) <= 1e-13 * std::exp(3.0));

    ctx.reset();
    const DenseMatrix d = eval_r26(ctx, DenseMatrix::from_rows({{1, 0}, {0, -1}}));
    CHECK(std::abs(d.at(0, 0) - std::exp(1.0)) <= 1e-14 * std::exp(1.0));
    CHECK(std::abs(d.at(1, 1) - std::exp(-1.0)) <= 1e-14);
    CHECK(d.at(0, 1) == 0.0);
    CHECK(d.at(1, 0) == 0.0);
}

TEST_CASE("r(A) r(-A) is the identity to approximant order") {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        const DenseMatrix a = random_with_norm(8, 2.54e-1, rng);
        CostContext ctx;
        const DenseMatrix lhs =
            matmul(eval_r10(ctx, a), eval_r10(ctx, scaled(a, -1.0)));
        CHECK(abs_diff(lhs, DenseMatrix::identity(8)) <= 100.0 * kU);
    }
    for (int rep = 0; rep < 10; ++rep) {
        const DenseMatrix a = random_with_norm(8, 5.37, rng);
        CostContext ctx;
        const DenseMatrix ra = eval_r26(ctx, a);
        const DenseMatrix rma = eval_r26(ctx, scaled(a, -1.0));
        const double tol = 100.0 * kU * one_norm(ra) * one_norm(rma);
        CHECK(abs_diff(matmul(ra, rma), DenseMatrix::identity(8)) <= tol);
    }
}

TEST_CASE("remainder decays at the approximant order") {
    // effective log-log slopes over these windows, frozen from a 60-digit
    // evaluation: 11.037 for r10, 27.913 for r26 (the window sits close
    // enough to the radius that the order-27 decay reads slightly steeper)
    CHECK(remainder_slope(5, 1e-2, 1e-1, 12) ==
          doctest::Approx(11.037).epsilon(0.01));
    CHECK(remainder_slope(13, 0.5, 1.5, 12) ==
          doctest::Approx(27.913).epsilon(0.01));
}

TEST_CASE("cost accounting") {
    std::mt19937_64 rng(32);
    const DenseMatrix a = random_with_norm(6, 0.3, rng);
    CostContext ctx;
    (void)eval_r10(ctx, a);
    CHECK(ctx.products == 3);
    CHECK(ctx.solves == 1);
    CHECK(ctx.thirds() == 13);

    ctx.reset();
    (void)eval_r26(ctx, a);
    CHECK(ctx.products == 6);
    CHECK(ctx.solves == 1);
    CHECK(ctx.thirds() == 22);
}

TEST_CASE("generic even orders agree with a long Taylor oracle") {
    std::mt19937_64 rng(33);
    const double thetas[] = {3.65e-8, 5.32e-4, 1.50e-2, 8.54e-2, 2.54e-1, 5.41e-1,
                             9.50e-1, 1.47,    2.10,    2.81,    3.60,    4.46,
                             5.37};
    for (int order = 2; order <= 26; order += 2) {
        CAPTURE(order);
        const DenseMatrix a = random_with_norm(6, thetas[order / 2 - 1], rng);
        CostContext ctx;
        const DenseMatrix got = eval_pade(ctx, a, order);
        CHECK(rel_diff(got, taylor_oracle(a, 60)) <= 1e-13);
    }
    CostContext ctx;
    CHECK_THROWS_AS(eval_pade(ctx, DenseMatrix(2), 7), std::invalid_argument);
    CHECK_THROWS_AS(eval_pade(ctx, DenseMatrix(2), 28), std::invalid_argument);
}

TEST_CASE("generic evaluator product counts") {
    std::mt19937_64 rng(34);
    const DenseMatrix a = random_with_norm(5, 0.1, rng);
    // order 20 and 24 spend one product more than the minimal table count
    const std::pair<int, int> counts[] = {{2, 0},  {4, 1},  {6, 2},  {8, 3},
                                          {12, 4}, {14, 4}, {16, 5}, {18, 5},
                                          {20, 6}, {22, 6}, {24, 7}};
    for (const auto& [order, products] : counts) {
        CAPTURE(order);
        CostContext ctx;
        (void)eval_pade(ctx, a, order);
        CHECK(ctx.products == products);
        CHECK(ctx.solves == 1);
    }
}
