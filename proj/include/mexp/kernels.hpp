#pragma once

#include <cstdint>
#include <vector>

namespace mexp::kernels {

// Low-level kernels on row-major n*n buffers. The OpenMP versions are
// bit-identical to the serial ones for any thread count: every output
// element is accumulated in a fixed order by a single thread, so the
// parallel split never changes a rounding.

// c = a * b; c must not alias a or b. Accumulates over the inner index in
// ascending order.
void matmul(const double* a, const double* b, double* c, int n);

// out[e] = sum_i coeffs[i] * mats[i][e], summed left to right.
void lincomb(const double* coeffs, const double* const* mats, int k,
             double* out, std::int64_t len);

void scale(const double* a, double factor, double* out, std::int64_t len);

// Max absolute column sum.
double one_norm(const double* a, int n);

struct LuFactors {
    int n = 0;
    std::vector<double> lu;  // unit-lower L below the diagonal, U on/above
    std::vector<int> perm;   // source row of each pivoted row
};

// Partial pivoting; throws std::runtime_error("singular denominator") when a
// pivot is exactly zero after row exchange. Near-singularity is not trapped.
LuFactors lu_factor(const double* a, int n);

// Solve for all n right-hand-side columns of rhs (n*n, row-major).
void lu_apply(const LuFactors& f, const double* rhs, double* x, int n);

// Serial reference implementations, kept for correctness tests and the
// kernel benchmark.
namespace serial {
void matmul(const double* a, const double* b, double* c, int n);
void lincomb(const double* coeffs, const double* const* mats, int k,
             double* out, std::int64_t len);
void scale(const double* a, double factor, double* out, std::int64_t len);
double one_norm(const double* a, int n);
LuFactors lu_factor(const double* a, int n);
void lu_apply(const LuFactors& f, const double* rhs, double* x, int n);
}  // namespace serial

}  // namespace mexp::kernels
