#pragma once

#include <cstdint>

#include "mexp/dense_matrix.hpp"
#include "mexp/theta_tables.hpp"

namespace mexp {

struct Selection {
    int degree = 0;
    int s = 0;
};

// Cheapest admissible table entry (ties broken by lower degree) while the
// norm is inside the table; beyond it, the asymptotic entry with the
// smallest scaling exponent s such that norm / 2^s fits.
Selection select(double norm, const SelectionTable& table);

/// x^(2^s) by s successive squarings, each counted as one product.
DenseMatrix squarings(CostContext& ctx, DenseMatrix x, int s);

struct ExpmReport {
    DenseMatrix result;
    Family family = Family::TaylorNew;
    int degree = 0;
    int s = 0;
    std::int64_t cost_thirds = 0;  // scheme products + s squarings (+ 4/3 for Pade)
    double norm_in = 0.0;

    double product_cost() const { return double(cost_thirds) / 3.0; }
};

/// Scaling-and-squaring exponential with the requested approximant family
/// and accuracy target. All arithmetic runs in double precision; a single
/// target only relaxes the thresholds.
ExpmReport expm(const DenseMatrix& a, Accuracy u, Family family);

}  // namespace mexp
