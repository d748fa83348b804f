#pragma once

#include <cstdint>

namespace mexp {

// Per-computation operation ledger. One matrix product counts as 1; a
// multi-right-hand-side LU solve counts as 4/3 of a product (one
// factorization at 1/3 plus the substitutions at 1). Totals are kept in
// integer thirds so the accounting stays exact.
struct CostContext {
    std::int64_t products = 0;
    std::int64_t solves = 0;

    void record_product() { ++products; }
    void record_solve() { ++solves; }

    std::int64_t thirds() const { return 3 * products + 4 * solves; }
    double product_equivalents() const { return double(thirds()) / 3.0; }
    void reset() { products = 0; solves = 0; }
};

}  // namespace mexp
