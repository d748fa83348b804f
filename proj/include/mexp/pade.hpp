#pragma once

#include <vector>

#include "mexp/dense_matrix.hpp"

namespace mexp {

// b_j = (2m-j)! m! / ((2m)! (m-j)! j!), j = 0..m. Computed from exact
// integer factorial ratios, reduced, and rounded once to double.
struct PadeCoefficients {
    int m = 0;
    std::vector<double> b;
};
PadeCoefficients pade_coeffs(int m);  // 1 <= m <= 13

/// Order-10 diagonal Pade approximant of exp; 3 products + 1 solve.
DenseMatrix eval_r10(CostContext& ctx, const DenseMatrix& a);

/// Order-26 diagonal Pade approximant of exp; 6 products + 1 solve.
DenseMatrix eval_r26(CostContext& ctx, const DenseMatrix& a);

/// Any even order 2..26. Orders 10 and 26 use the blocked forms above; the
/// others assemble the even-power chain directly, which for orders 20 and 24
/// takes one product more than the minimal count used by the cost model.
DenseMatrix eval_pade(CostContext& ctx, const DenseMatrix& a, int order);

}  // namespace mexp
