#pragma once

#include <string>
#include <vector>

#include "mexp/expm.hpp"
#include "mexp/gallery.hpp"

namespace mexp {

/// Ground-truth exponential: the order-26 diagonal Pade approximant applied
/// to the argument scaled three extra halvings below its double-precision
/// threshold, then squared back.
DenseMatrix reference_expm(const DenseMatrix& a);

struct StaircaseRow {
    double norm = 0.0;
    int degree = 0;
    int s = 0;
    std::int64_t cost_thirds = 0;
    double product_cost() const { return double(cost_thirds) / 3.0; }
};

/// Order/scaling choice and model cost per norm; pure table arithmetic.
std::vector<StaircaseRow> cost_staircase(Family f, Accuracy u,
                                         const std::vector<double>& norms);
std::string staircase_csv(const std::vector<StaircaseRow>& rows);

struct SweepRow {
    int matrix_id = 0;
    GalleryKind kind = GalleryKind::RandomDense;
    int n = 0;
    double norm = 0.0;
    Family family = Family::TaylorNew;
    int degree = 0;
    int s = 0;
    std::int64_t cost_thirds = 0;
    double relerr = 0.0;  // 1-norm relative error against reference_expm
    bool failed = false;  // solver failure; emitted as FAIL in the CSV
};

/// One row per (matrix, family), ordered by (matrix_id, family).
std::vector<SweepRow> error_sweep(const std::vector<GallerySpec>& specs,
                                  const std::vector<Family>& families,
                                  Accuracy u);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// points log-spaced values covering [lo, hi] inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

}  // namespace mexp
