// Timing comparison of the OpenMP kernels against the serial reference, plus
// a whole-driver run. Also cross-checks that both paths agree bitwise.
#include <omp.h>

#include <cstdio>
#include <cstring>
#include <random>
#include <vector>

#include "mexp/dense_matrix.hpp"
#include "mexp/expm.hpp"
#include "mexp/gallery.hpp"
#include "mexp/kernels.hpp"

namespace {

std::vector<double> random_buffer(std::size_t len, std::mt19937_64& rng) {
    std::vector<double> v(len);
    for (auto& x : v) x = mexp::uniform_pm1(rng);
    return v;
}

template <class F>
double time_best_of(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        body();
        const double t1 = omp_get_wtime();
        if (t1 - t0 < best) best = t1 - t0;
    }
    return best;
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-22s %8s %12s %12s %9s\n", "kernel", "n", "serial[s]",
                "openmp[s]", "speedup");

    std::mt19937_64 rng(12345);
    for (int n : {64, 128, 256, 384}) {
        const std::size_t len = std::size_t(n) * n;
        const auto a = random_buffer(len, rng);
        const auto b = random_buffer(len, rng);
        std::vector<double> c1(len), c2(len);

        const double ts = time_best_of(3, [&] {
            mexp::kernels::serial::matmul(a.data(), b.data(), c1.data(), n);
        });
        const double tp = time_best_of(3, [&] {
            mexp::kernels::matmul(a.data(), b.data(), c2.data(), n);
        });
        if (std::memcmp(c1.data(), c2.data(), len * sizeof(double)) != 0) {
            std::fprintf(stderr, "matmul mismatch at n=%d\n", n);
            return 1;
        }
        std::printf("%-22s %8d %12.6f %12.6f %8.2fx\n", "matmul", n, ts, tp, ts / tp);
    }

    for (int n : {64, 128, 256, 384}) {
        const std::size_t len = std::size_t(n) * n;
        auto m = random_buffer(len, rng);
        for (int i = 0; i < n; ++i) m[std::size_t(i) * n + i] += n;  // keep it well conditioned
        const auto rhs = random_buffer(len, rng);
        std::vector<double> x1(len), x2(len);

        const double ts = time_best_of(3, [&] {
            const auto f = mexp::kernels::serial::lu_factor(m.data(), n);
            mexp::kernels::serial::lu_apply(f, rhs.data(), x1.data(), n);
        });
        const double tp = time_best_of(3, [&] {
            const auto f = mexp::kernels::lu_factor(m.data(), n);
            mexp::kernels::lu_apply(f, rhs.data(), x2.data(), n);
        });
        if (std::memcmp(x1.data(), x2.data(), len * sizeof(double)) != 0) {
            std::fprintf(stderr, "lu_solve mismatch at n=%d\n", n);
            return 1;
        }
        std::printf("%-22s %8d %12.6f %12.6f %8.2fx\n", "lu_solve", n, ts, tp, ts / tp);
    }

    for (int n : {128, 256}) {
        const mexp::DenseMatrix a =
            mexp::gallery({mexp::GalleryKind::RandomDense, n, 7, 8.0});
        const double t = time_best_of(3, [&] {
            (void)mexp::expm(a, mexp::Accuracy::Double, mexp::Family::TaylorNew);
        });
        std::printf("%-22s %8d %12s %12.6f\n", "expm taylor-new", n, "-", t);
    }
    return 0;
}
