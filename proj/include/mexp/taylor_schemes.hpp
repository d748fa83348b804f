#pragma once

#include "mexp/dense_matrix.hpp"

namespace mexp {

// Coefficients of the three-product degree-8 Taylor evaluation; closed forms
// in sqrt(177) with the free parameter x3 fixed at 2/3.
struct T8Coefficients {
    double x1, x2, x3, x4, x5, x6, x7;
    double y0, y1, y2;
};
const T8Coefficients& t8_coefficients();

// Coefficients of the three-product evaluation of the geometric sum
// I + A + ... + A^8; closed forms in sqrt(7).
struct Psi9Coefficients {
    double x1, x2, x3, x4, x5, x6, x7, x8, x9;
};
const Psi9Coefficients& psi9_coefficients();

// Printed decimal coefficients of the four- and five-product schemes.
// kT12[i][j] multiplies A^i in the polynomial B_{j+1}.
extern const double kT12[4][4];
// Degree 18: kT18A[i] multiplies A^i in B_1; kT18B[j][r] multiplies
// {I, A, A2, A3, A6}[r] in B_{j+2}.
extern const double kT18A[4];
extern const double kT18B[4][5];

/// Degree-n Taylor polynomial of exp by plain Horner; test oracle.
DenseMatrix taylor_oracle(const DenseMatrix& a, int degree);

/// I + A + ... + A^(k-1) by plain Horner; test oracle.
DenseMatrix psi_oracle(const DenseMatrix& a, int k);

DenseMatrix eval_t8(CostContext& ctx, const DenseMatrix& a);   // 3 products
DenseMatrix eval_t12(CostContext& ctx, const DenseMatrix& a);  // 4 products
DenseMatrix eval_t18(CostContext& ctx, const DenseMatrix& a);  // 5 products

/// Paterson-Stockmeyer evaluation; degree in {2, 4, 6, 9, 16}.
DenseMatrix eval_ps(CostContext& ctx, const DenseMatrix& a, int degree);

/// Three-product evaluation of I + A + ... + A^8.
DenseMatrix psi9(CostContext& ctx, const DenseMatrix& a);

// Degree dispatch for the expm driver.
DenseMatrix eval_taylor_new(CostContext& ctx, const DenseMatrix& a, int degree);  // {1,2,4,8,12,18}
DenseMatrix eval_taylor_ps(CostContext& ctx, const DenseMatrix& a, int degree);   // {1,2,4,6,9,16}

}  // namespace mexp
