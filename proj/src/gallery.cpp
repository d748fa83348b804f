#include "mexp/gallery.hpp"

#include <stdexcept>

namespace mexp {

const char* gallery_kind_name(GalleryKind k) {
    switch (k) {
        case GalleryKind::RandomDense: return "random_dense";
        case GalleryKind::RandomSymmetric: return "random_symmetric";
        case GalleryKind::RandomSkew: return "random_skew";
        case GalleryKind::JordanBlock: return "jordan_block";
        case GalleryKind::NilpotentShift: return "nilpotent_shift";
        case GalleryKind::UpperTriangular: return "upper_triangular";
        case GalleryKind::TridiagToeplitz: return "tridiag_toeplitz";
        case GalleryKind::RankOne: return "rank_one";
        case GalleryKind::NonnormalShear: return "nonnormal_shear";
    }
    return "?";
}

bool parse_gallery_kind(std::string_view name, GalleryKind& out) {
    for (GalleryKind k : kAllGalleryKinds)
        if (name == gallery_kind_name(k)) {
            out = k;
            return true;
        }
    return false;
}

double uniform_pm1(std::mt19937_64& rng) {
    return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
}

namespace {

DenseMatrix build(const GallerySpec& spec, std::mt19937_64& rng) {
    const int n = spec.n;
    DenseMatrix m(n);
    switch (spec.kind) {
        case GalleryKind::RandomDense:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = uniform_pm1(rng);
            break;
        case GalleryKind::RandomSymmetric:
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = uniform_pm1(rng);
            break;
        case GalleryKind::RandomSkew:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double v = uniform_pm1(rng);
                    m.at(i, j) = v;
                    m.at(j, i) = -v;
                }
            break;
        case GalleryKind::JordanBlock: {
            // eigenvalue stepped from the seed; seed % 5 == 0 gives the
            // nilpotent block
            const double lambda = 0.25 * double(spec.seed % 5);
            for (int i = 0; i < n; ++i) m.at(i, i) = lambda;
            for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1.0;
            break;
        }
        case GalleryKind::NilpotentShift:
            for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = 1.0;
            break;
        case GalleryKind::UpperTriangular:
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) m.at(i, j) = uniform_pm1(rng);
            break;
        case GalleryKind::TridiagToeplitz: {
            const double sub = uniform_pm1(rng);
            const double dia = uniform_pm1(rng);
            const double sup = uniform_pm1(rng);
            for (int i = 0; i < n; ++i) {
                m.at(i, i) = dia;
                if (i + 1 < n) {
                    m.at(i + 1, i) = sub;
                    m.at(i, i + 1) = sup;
                }
            }
            break;
        }
        case GalleryKind::RankOne: {
            std::vector<double> u(n), v(n);
            for (auto& x : u) x = uniform_pm1(rng);
            for (auto& x : v) x = uniform_pm1(rng);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = u[i] * v[j];
            break;
        }
        case GalleryKind::NonnormalShear:
            for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
            if (n > 1) m.at(0, n - 1) = 10.0;
            break;
    }
    return m;
}

}  // namespace

DenseMatrix gallery(const GallerySpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("gallery dimension must be positive");
    if (!(spec.target_norm > 0))
        throw std::invalid_argument("target norm must be positive");
    std::mt19937_64 rng(spec.seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    DenseMatrix m = build(spec, rng);
    const double norm = one_norm(m);
    if (norm == 0.0) throw std::domain_error("cannot rescale a zero matrix");
    return scaled(m, spec.target_norm / norm);
}

}  // namespace mexp
