#include "mexp/taylor_schemes.hpp"

#include <cmath>
#include <stdexcept>

namespace mexp {

namespace {

// Coefficient expressions are evaluated in long double and rounded once so
// the stored doubles sit within 1 ulp of the exact values.
T8Coefficients make_t8() {
    const long double r = std::sqrt(177.0L);
    const long double x3 = 2.0L / 3.0L;
    T8Coefficients c;
    c.x1 = double(x3 * (1.0L + r) / 88.0L);
    c.x2 = double(x3 * (1.0L + r) / 352.0L);
    c.x3 = double(x3);
    c.x4 = double((-271.0L + 29.0L * r) / (315.0L * x3));
    c.x5 = double(11.0L * (-1.0L + r) / (1260.0L * x3));
    c.x6 = double(11.0L * (-9.0L + r) / (5040.0L * x3));
    c.x7 = double((89.0L - r) / (5040.0L * x3 * x3));
    c.y0 = 1.0;
    c.y1 = 1.0;
    c.y2 = double((857.0L - 58.0L * r) / 630.0L);
    return c;
}

Psi9Coefficients make_psi9() {
    const long double r = std::sqrt(7.0L);
    Psi9Coefficients c;
    c.x1 = double((-5.0L + 6.0L * r) / 32.0L);
    c.x2 = -0.25;
    c.x3 = -1.0;
    c.x4 = double(3.0L * (169.0L + 20.0L * r) / 1024.0L);
    c.x5 = double(3.0L * (5.0L + 2.0L * r) / 64.0L);
    c.x6 = 1695.0 / 4096.0;
    c.x7 = 267.0 / 512.0;
    c.x8 = 21.0 / 64.0;
    c.x9 = double(3.0L * r / 4.0L);
    return c;
}

double inv_factorial(int i) {
    double f = 1.0;
    for (int k = 2; k <= i; ++k) f *= k;
    return 1.0 / f;
}

}  // namespace

const T8Coefficients& t8_coefficients() {
    static const T8Coefficients c = make_t8();
    return c;
}

const Psi9Coefficients& psi9_coefficients() {
    static const Psi9Coefficients c = make_psi9();
    return c;
}

const double kT12[4][4] = {
    // B1, B2, B3, B4 columns; rows multiply I, A, A2, A3
    {9.0198e-16, 5.31597895759871264183, 0.18188869982170434744, -2.0861320e-13},
    {0.46932117595418237389, 1.19926790417132231573, 0.05502798439925399070,
     -0.13181061013830184015},
    {-0.20099424927047284052, 0.01179296240992997031, 0.09351590770535414968,
     -0.02027855540589259079},
    {-0.04623946134063071740, 0.01108844528519167989, 0.00610700528898058230,
     -0.00675951846863086359},
};

const double kT18A[4] = {0.0, -0.100365581030144620, -0.0080292464824115696,
                         -0.0008921384980457299};

const double kT18B[4][5] = {
    {0.0, 0.39784974949964507614, 1.36783778460411719922,
     0.49828962252538267755, -0.0006378981945947233},
    {-10.967639605296206259, 1.68015813878906197182, 0.05717798464788655127,
     -0.0069821012248805208, 0.00003349750170860705},
    {-0.0904316832390810561, -0.0676404519071381907, 0.06759613017704596460,
     0.02955525704293155274, -0.0000139180257516060},
    {0.0, 0.0, -0.0923364619367118592, -0.0169364939002081717,
     -0.0000140086798182036},
};

DenseMatrix taylor_oracle(const DenseMatrix& a, int degree) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    DenseMatrix t = id;
    for (int k = degree; k >= 1; --k)
        t = add(id, scaled(matmul(a, t), 1.0 / k));
    return t;
}

DenseMatrix psi_oracle(const DenseMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    DenseMatrix t = id;
    for (int i = 1; i < k; ++i) t = add(id, matmul(a, t));
    return t;
}

DenseMatrix eval_t8(CostContext& ctx, const DenseMatrix& a) {
    const auto& c = t8_coefficients();
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    const DenseMatrix a2 = matmul(ctx, a, a);
    const DenseMatrix a4 = matmul(ctx, a2, lincomb({c.x1, c.x2}, {&a, &a2}));
    const DenseMatrix a8 =
        matmul(ctx, lincomb({c.x3, 1.0}, {&a2, &a4}),
               lincomb({c.x4, c.x5, c.x6, c.x7}, {&id, &a, &a2, &a4}));
    return lincomb({c.y0, c.y1, c.y2, 1.0}, {&id, &a, &a2, &a8});
}

DenseMatrix eval_t12(CostContext& ctx, const DenseMatrix& a) {
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    const DenseMatrix a2 = matmul(ctx, a, a);
    const DenseMatrix a3 = matmul(ctx, a2, a);
    DenseMatrix b[4];
    for (int j = 0; j < 4; ++j)
        b[j] = lincomb({kT12[0][j], kT12[1][j], kT12[2][j], kT12[3][j]},
                       {&id, &a, &a2, &a3});
    const DenseMatrix a6 = add(b[2], matmul(ctx, b[3], b[3]));
    return add(b[0], matmul(ctx, add(b[1], a6), a6));
}

DenseMatrix eval_t18(CostContext& ctx, const DenseMatrix& a) {
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    const DenseMatrix a2 = matmul(ctx, a, a);
    const DenseMatrix a3 = matmul(ctx, a2, a);
    const DenseMatrix a6 = matmul(ctx, a3, a3);
    const DenseMatrix b1 =
        lincomb({kT18A[0], kT18A[1], kT18A[2], kT18A[3]}, {&id, &a, &a2, &a3});
    DenseMatrix b[4];
    for (int j = 0; j < 4; ++j)
        b[j] = lincomb({kT18B[j][0], kT18B[j][1], kT18B[j][2], kT18B[j][3],
                        kT18B[j][4]},
                       {&id, &a, &a2, &a3, &a6});
    const DenseMatrix a9 = add(matmul(ctx, b1, b[3]), b[2]);
    return add(b[0], matmul(ctx, add(b[1], a9), a9));
}

DenseMatrix eval_ps(CostContext& ctx, const DenseMatrix& a, int degree) {
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    switch (degree) {
        case 2: {
            const DenseMatrix a2 = matmul(ctx, a, a);
            return lincomb({1.0, 1.0, 0.5}, {&id, &a, &a2});
        }
        case 4: {
            const DenseMatrix a2 = matmul(ctx, a, a);
            const DenseMatrix f0 = lincomb({1.0, 1.0}, {&id, &a});
            const DenseMatrix f1 =
                lincomb({inv_factorial(2), inv_factorial(3)}, {&id, &a});
            const DenseMatrix inner = lincomb({1.0, inv_factorial(4)}, {&f1, &a2});
            return add(f0, matmul(ctx, inner, a2));
        }
        case 6: {
            const DenseMatrix a2 = matmul(ctx, a, a);
            const DenseMatrix a3 = matmul(ctx, a2, a);
            const DenseMatrix f0 =
                lincomb({1.0, 1.0, inv_factorial(2)}, {&id, &a, &a2});
            const DenseMatrix f1 =
                lincomb({inv_factorial(3), inv_factorial(4), inv_factorial(5)},
                        {&id, &a, &a2});
            const DenseMatrix inner = lincomb({1.0, inv_factorial(6)}, {&f1, &a3});
            return add(f0, matmul(ctx, inner, a3));
        }
        case 9: {
            const DenseMatrix a2 = matmul(ctx, a, a);
            const DenseMatrix a3 = matmul(ctx, a2, a);
            DenseMatrix f[3];
            for (int i = 0; i < 3; ++i)
                f[i] = lincomb({inv_factorial(3 * i), inv_factorial(3 * i + 1),
                                inv_factorial(3 * i + 2)},
                               {&id, &a, &a2});
            DenseMatrix t = lincomb({1.0, inv_factorial(9)}, {&f[2], &a3});
            t = add(f[1], matmul(ctx, t, a3));
            return add(f[0], matmul(ctx, t, a3));
        }
        case 16: {
            const DenseMatrix a2 = matmul(ctx, a, a);
            const DenseMatrix a3 = matmul(ctx, a2, a);
            const DenseMatrix a4 = matmul(ctx, a2, a2);
            DenseMatrix g[4];
            for (int i = 0; i < 4; ++i)
                g[i] = lincomb({inv_factorial(4 * i), inv_factorial(4 * i + 1),
                                inv_factorial(4 * i + 2), inv_factorial(4 * i + 3)},
                               {&id, &a, &a2, &a3});
            DenseMatrix t = lincomb({1.0, inv_factorial(16)}, {&g[3], &a4});
            t = add(g[2], matmul(ctx, t, a4));
            t = add(g[1], matmul(ctx, t, a4));
            return add(g[0], matmul(ctx, t, a4));
        }
        default:
            throw std::invalid_argument("unsupported Paterson-Stockmeyer degree");
    }
}

DenseMatrix psi9(CostContext& ctx, const DenseMatrix& a) {
    const auto& c = psi9_coefficients();
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    const DenseMatrix a2 = matmul(ctx, a, a);
    const DenseMatrix b = lincomb({c.x1, c.x2, c.x3}, {&id, &a, &a2});
    const DenseMatrix a4 =
        add(lincomb({c.x4, c.x5}, {&id, &a}), matmul(ctx, b, b));
    const DenseMatrix a8 = matmul(ctx, lincomb({c.x9, 1.0}, {&a2, &a4}), a4);
    return lincomb({c.x6, c.x7, c.x8, 1.0}, {&id, &a, &a2, &a8});
}

DenseMatrix eval_taylor_new(CostContext& ctx, const DenseMatrix& a, int degree) {
    switch (degree) {
        case 1:
            return add(DenseMatrix::identity(a.dim()), a);
        case 2:
        case 4:
            return eval_ps(ctx, a, degree);
        case 8:
            return eval_t8(ctx, a);
        case 12:
            return eval_t12(ctx, a);
        case 18:
            return eval_t18(ctx, a);
        default:
            throw std::invalid_argument("unsupported degree for the new decomposition");
    }
}

DenseMatrix eval_taylor_ps(CostContext& ctx, const DenseMatrix& a, int degree) {
    if (degree == 1) return add(DenseMatrix::identity(a.dim()), a);
    return eval_ps(ctx, a, degree);
}

}  // namespace mexp
