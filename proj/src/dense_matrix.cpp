#include "mexp/dense_matrix.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <stdexcept>
#include <vector>

#include "mexp/kernels.hpp"

namespace mexp {

namespace {
int checked_dim(int n) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be positive");
    return n;
}

void require_same_dim(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}
}  // namespace

DenseMatrix::DenseMatrix(int n)
    : n_(checked_dim(n)), data_(std::size_t(n) * n, 0.0) {}

DenseMatrix::DenseMatrix(int n, std::vector<double> data)
    : n_(checked_dim(n)), data_(std::move(data)) {
    if (data_.size() != std::size_t(n_) * n_)
        throw std::invalid_argument("data length must equal n*n");
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
    const int n = int(rows.size());
    DenseMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        if (int(row.size()) != n)
            throw std::invalid_argument("matrix must be square");
        int j = 0;
        for (double v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool DenseMatrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_dim(a, b);
    DenseMatrix c(a.dim());
    kernels::matmul(a.data(), b.data(), c.data(), a.dim());
    return c;
}

DenseMatrix matmul(CostContext& ctx, const DenseMatrix& a, const DenseMatrix& b) {
    ctx.record_product();
    return matmul(a, b);
}

DenseMatrix lincomb(std::span<const double> coeffs,
                    std::span<const DenseMatrix* const> mats) {
    if (coeffs.empty() || coeffs.size() != mats.size())
        throw std::invalid_argument("lincomb needs equally long nonempty lists");
    const int n = mats[0]->dim();
    std::vector<const double*> ptrs(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (mats[i]->dim() != n) throw std::invalid_argument("dimension mismatch");
        ptrs[i] = mats[i]->data();
    }
    DenseMatrix out(n);
    kernels::lincomb(coeffs.data(), ptrs.data(), int(coeffs.size()), out.data(),
                     std::int64_t(out.size()));
    return out;
}

DenseMatrix lincomb(std::initializer_list<double> coeffs,
                    std::initializer_list<const DenseMatrix*> mats) {
    return lincomb(std::span<const double>(coeffs.begin(), coeffs.size()),
                   std::span<const DenseMatrix* const>(mats.begin(), mats.size()));
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    return lincomb({1.0, 1.0}, {&a, &b});
}

DenseMatrix sub(const DenseMatrix& a, const DenseMatrix& b) {
    return lincomb({1.0, -1.0}, {&a, &b});
}

DenseMatrix scaled(const DenseMatrix& a, double factor) {
    DenseMatrix out(a.dim());
    kernels::scale(a.data(), factor, out.data(), std::int64_t(a.size()));
    return out;
}

double one_norm(const DenseMatrix& a) {
    return kernels::one_norm(a.data(), a.dim());
}

DenseMatrix lu_solve(const DenseMatrix& m, const DenseMatrix& rhs) {
    require_same_dim(m, rhs);
    const auto f = kernels::lu_factor(m.data(), m.dim());
    DenseMatrix x(m.dim());
    kernels::lu_apply(f, rhs.data(), x.data(), m.dim());
    return x;
}

DenseMatrix lu_solve(CostContext& ctx, const DenseMatrix& m, const DenseMatrix& rhs) {
    ctx.record_solve();
    return lu_solve(m, rhs);
}

DenseMatrix parse_matrix(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("bad matrix header");
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v;
            if (!(in >> v)) throw std::invalid_argument("truncated matrix data");
            if (!std::isfinite(v)) throw std::invalid_argument("non-finite matrix entry");
            m.at(i, j) = v;
        }
    return m;
}

std::string shortest_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_matrix(const DenseMatrix& a) {
    std::string out = std::to_string(a.dim());
    out.push_back('\n');
    for (int i = 0; i < a.dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
            if (j) out.push_back(' ');
            out += shortest_double(a.at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace mexp
