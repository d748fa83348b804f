#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "mexp/cost.hpp"

namespace mexp {

/// Square real matrix with double entries, row-major storage.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n);                  // zero matrix
    DenseMatrix(int n, std::vector<double> data); // takes ownership, size n*n

    static DenseMatrix identity(int n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    int dim() const { return n_; }
    std::size_t size() const { return data_.size(); }
    double& at(int i, int j) { return data_[std::size_t(i) * n_ + j]; }
    double at(int i, int j) const { return data_[std::size_t(i) * n_ + j]; }
    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool all_finite() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    int n_ = 0;
    std::vector<double> data_;
};

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix matmul(CostContext& ctx, const DenseMatrix& a, const DenseMatrix& b);

// sum_i coeffs[i] * mats[i], accumulated left to right in the given order.
DenseMatrix lincomb(std::span<const double> coeffs,
                    std::span<const DenseMatrix* const> mats);
DenseMatrix lincomb(std::initializer_list<double> coeffs,
                    std::initializer_list<const DenseMatrix*> mats);

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix scaled(const DenseMatrix& a, double factor);

/// Exact 1-norm: max absolute column sum.
double one_norm(const DenseMatrix& a);

/// Solve m * X = rhs via LU with partial pivoting; throws
/// std::runtime_error("singular denominator") on an exactly zero pivot.
DenseMatrix lu_solve(const DenseMatrix& m, const DenseMatrix& rhs);
DenseMatrix lu_solve(CostContext& ctx, const DenseMatrix& m, const DenseMatrix& rhs);

// Plain-text matrix format: first line "n", then n lines of n
// whitespace-separated decimal values. Entries must parse finite.
DenseMatrix parse_matrix(std::istream& in);
std::string format_matrix(const DenseMatrix& a);

/// Shortest decimal string that round-trips to the same double.
std::string shortest_double(double v);

}  // namespace mexp
