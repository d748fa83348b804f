#include "mexp/pade.hpp"

#include <stdexcept>

namespace mexp {

namespace {

using int128 = __int128;

int128 gcd128(int128 a, int128 b) {
    while (b != 0) {
        const int128 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

int128 factorial128(int n) {
    int128 f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

DenseMatrix pade_solve(CostContext& ctx, const DenseMatrix& u, const DenseMatrix& v) {
    return lu_solve(ctx, sub(v, u), add(v, u));
}

}  // namespace

PadeCoefficients pade_coeffs(int m) {
    if (m < 1 || m > 13) throw std::invalid_argument("pade order out of range");
    PadeCoefficients c;
    c.m = m;
    c.b.resize(m + 1);
    for (int j = 0; j <= m; ++j) {
        int128 num = factorial128(2 * m - j) * factorial128(m);
        int128 den = factorial128(2 * m) * factorial128(m - j) * factorial128(j);
        const int128 g = gcd128(num, den);
        num /= g;
        den /= g;
        c.b[j] = double((long double)(num) / (long double)(den));
    }
    return c;
}

DenseMatrix eval_r10(CostContext& ctx, const DenseMatrix& a) {
    const auto& b = pade_coeffs(5).b;
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    const DenseMatrix a2 = matmul(ctx, a, a);
    const DenseMatrix a4 = matmul(ctx, a2, a2);
    const DenseMatrix u =
        matmul(ctx, a, lincomb({b[5], b[3], b[1]}, {&a4, &a2, &id}));
    const DenseMatrix v = lincomb({b[4], b[2], b[0]}, {&a4, &a2, &id});
    return pade_solve(ctx, u, v);
}

DenseMatrix eval_r26(CostContext& ctx, const DenseMatrix& a) {
    const auto& b = pade_coeffs(13).b;
    const DenseMatrix id = DenseMatrix::identity(a.dim());
    const DenseMatrix a2 = matmul(ctx, a, a);
    const DenseMatrix a4 = matmul(ctx, a2, a2);
    const DenseMatrix a6 = matmul(ctx, a2, a4);

    DenseMatrix u = matmul(ctx, a6, lincomb({b[13], b[11], b[9]}, {&a6, &a4, &a2}));
    u = lincomb({1.0, b[7], b[5], b[3], b[1]}, {&u, &a6, &a4, &a2, &id});
    u = matmul(ctx, a, u);

    DenseMatrix v = matmul(ctx, a6, lincomb({b[12], b[10], b[8]}, {&a6, &a4, &a2}));
    v = lincomb({1.0, b[6], b[4], b[2], b[0]}, {&v, &a6, &a4, &a2, &id});

    return pade_solve(ctx, u, v);
}

DenseMatrix eval_pade(CostContext& ctx, const DenseMatrix& a, int order) {
    if (order < 2 || order > 26 || order % 2 != 0)
        throw std::invalid_argument("pade order must be even, 2..26");
    if (order == 10) return eval_r10(ctx, a);
    if (order == 26) return eval_r26(ctx, a);

    const int m = order / 2;
    const auto& b = pade_coeffs(m).b;
    const DenseMatrix id = DenseMatrix::identity(a.dim());

    // even powers A^2, A^4, ..., up to the largest even index <= m
    const int top = m - (m % 2);
    std::vector<DenseMatrix> pow;  // pow[i] = A^(2(i+1))
    if (top >= 2) {
        pow.push_back(matmul(ctx, a, a));
        for (int e = 4; e <= top; e += 2) pow.push_back(matmul(ctx, pow[0], pow.back()));
    }

    std::vector<double> codd{b[1]}, ceven{b[0]};
    std::vector<const DenseMatrix*> modd{&id}, meven{&id};
    for (int j = 3; j <= m; j += 2) {
        codd.push_back(b[j]);
        modd.push_back(&pow[(j - 1) / 2 - 1]);
    }
    for (int j = 2; j <= m; j += 2) {
        ceven.push_back(b[j]);
        meven.push_back(&pow[j / 2 - 1]);
    }

    const DenseMatrix u = m >= 3 ? matmul(ctx, a, lincomb(codd, modd))
                                 : scaled(a, b[1]);
    const DenseMatrix v = lincomb(ceven, meven);
    return pade_solve(ctx, u, v);
}

}  // namespace mexp
