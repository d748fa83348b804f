#include "mexp/kernels.hpp"

#include <cmath>
#include <cstring>
#include <numeric>
#include <stdexcept>

namespace mexp::kernels {

namespace {
// Below this dimension the parallel regions run single-threaded; results are
// identical either way.
constexpr int kParallelCutoff = 64;
}  // namespace

void matmul(const double* a, const double* b, double* c, int n) {
    std::memset(c, 0, sizeof(double) * std::size_t(n) * n);
#pragma omp parallel for if (n > kParallelCutoff)
    for (int i = 0; i < n; ++i) {
        double* ci = c + std::size_t(i) * n;
        for (int k = 0; k < n; ++k) {
            const double aik = a[std::size_t(i) * n + k];
            const double* bk = b + std::size_t(k) * n;
            for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
}

void lincomb(const double* coeffs, const double* const* mats, int k,
             double* out, std::int64_t len) {
#pragma omp parallel for if (len > kParallelCutoff * kParallelCutoff)
    for (std::int64_t e = 0; e < len; ++e) {
        double s = coeffs[0] * mats[0][e];
        for (int i = 1; i < k; ++i) s += coeffs[i] * mats[i][e];
        out[e] = s;
    }
}

void scale(const double* a, double factor, double* out, std::int64_t len) {
#pragma omp parallel for if (len > kParallelCutoff * kParallelCutoff)
    for (std::int64_t e = 0; e < len; ++e) out[e] = factor * a[e];
}

double one_norm(const double* a, int n) {
    double best = 0.0;
#pragma omp parallel for reduction(max : best) if (n > kParallelCutoff)
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(a[std::size_t(i) * n + j]);
        if (s > best) best = s;
    }
    return best;
}

LuFactors lu_factor(const double* a, int n) {
    LuFactors f;
    f.n = n;
    f.lu.assign(a, a + std::size_t(n) * n);
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);
    double* lu = f.lu.data();

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu[std::size_t(k) * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(lu[std::size_t(i) * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0) throw std::runtime_error("singular denominator");
        if (p != k) {
            for (int j = 0; j < n; ++j)
                std::swap(lu[std::size_t(k) * n + j], lu[std::size_t(p) * n + j]);
            std::swap(f.perm[k], f.perm[p]);
        }
        const double piv = lu[std::size_t(k) * n + k];
#pragma omp parallel for if (n - k > kParallelCutoff)
        for (int i = k + 1; i < n; ++i) {
            double* row = lu + std::size_t(i) * n;
            const double* prow = lu + std::size_t(k) * n;
            const double l = row[k] / piv;
            row[k] = l;
            for (int j = k + 1; j < n; ++j) row[j] -= l * prow[j];
        }
    }
    return f;
}

void lu_apply(const LuFactors& f, const double* rhs, double* x, int n) {
    const double* lu = f.lu.data();
#pragma omp parallel for if (n > kParallelCutoff)
    for (int col = 0; col < n; ++col) {
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) y[i] = rhs[std::size_t(f.perm[i]) * n + col];
        for (int i = 1; i < n; ++i) {
            double s = y[i];
            const double* row = lu + std::size_t(i) * n;
            for (int j = 0; j < i; ++j) s -= row[j] * y[j];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            const double* row = lu + std::size_t(i) * n;
            for (int j = i + 1; j < n; ++j) s -= row[j] * y[j];
            y[i] = s / row[i];
        }
        for (int i = 0; i < n; ++i) x[std::size_t(i) * n + col] = y[i];
    }
}

namespace serial {

void matmul(const double* a, const double* b, double* c, int n) {
    std::memset(c, 0, sizeof(double) * std::size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        double* ci = c + std::size_t(i) * n;
        for (int k = 0; k < n; ++k) {
            const double aik = a[std::size_t(i) * n + k];
            const double* bk = b + std::size_t(k) * n;
            for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
        }
    }
}

void lincomb(const double* coeffs, const double* const* mats, int k,
             double* out, std::int64_t len) {
    for (std::int64_t e = 0; e < len; ++e) {
        double s = coeffs[0] * mats[0][e];
        for (int i = 1; i < k; ++i) s += coeffs[i] * mats[i][e];
        out[e] = s;
    }
}

void scale(const double* a, double factor, double* out, std::int64_t len) {
    for (std::int64_t e = 0; e < len; ++e) out[e] = factor * a[e];
}

double one_norm(const double* a, int n) {
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(a[std::size_t(i) * n + j]);
        if (s > best) best = s;
    }
    return best;
}

LuFactors lu_factor(const double* a, int n) {
    LuFactors f;
    f.n = n;
    f.lu.assign(a, a + std::size_t(n) * n);
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);
    double* lu = f.lu.data();

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(lu[std::size_t(k) * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(lu[std::size_t(i) * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0) throw std::runtime_error("singular denominator");
        if (p != k) {
            for (int j = 0; j < n; ++j)
                std::swap(lu[std::size_t(k) * n + j], lu[std::size_t(p) * n + j]);
            std::swap(f.perm[k], f.perm[p]);
        }
        const double piv = lu[std::size_t(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            double* row = lu + std::size_t(i) * n;
            const double* prow = lu + std::size_t(k) * n;
            const double l = row[k] / piv;
            row[k] = l;
            for (int j = k + 1; j < n; ++j) row[j] -= l * prow[j];
        }
    }
    return f;
}

void lu_apply(const LuFactors& f, const double* rhs, double* x, int n) {
    const double* lu = f.lu.data();
    for (int col = 0; col < n; ++col) {
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) y[i] = rhs[std::size_t(f.perm[i]) * n + col];
        for (int i = 1; i < n; ++i) {
            double s = y[i];
            const double* row = lu + std::size_t(i) * n;
            for (int j = 0; j < i; ++j) s -= row[j] * y[j];
            y[i] = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            const double* row = lu + std::size_t(i) * n;
            for (int j = i + 1; j < n; ++j) s -= row[j] * y[j];
            y[i] = s / row[i];
        }
        for (int i = 0; i < n; ++i) x[std::size_t(i) * n + col] = y[i];
    }
}

}  // namespace serial

}  // namespace mexp::kernels
