#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

#include "mexp/dense_matrix.hpp"

namespace mexp {

enum class GalleryKind {
    RandomDense,
    RandomSymmetric,
    RandomSkew,
    JordanBlock,
    NilpotentShift,
    UpperTriangular,
    TridiagToeplitz,
    RankOne,
    NonnormalShear,
};

inline constexpr std::array<GalleryKind, 9> kAllGalleryKinds = {
    GalleryKind::RandomDense,    GalleryKind::RandomSymmetric,
    GalleryKind::RandomSkew,     GalleryKind::JordanBlock,
    GalleryKind::NilpotentShift, GalleryKind::UpperTriangular,
    GalleryKind::TridiagToeplitz, GalleryKind::RankOne,
    GalleryKind::NonnormalShear};

const char* gallery_kind_name(GalleryKind k);
bool parse_gallery_kind(std::string_view name, GalleryKind& out);

struct GallerySpec {
    GalleryKind kind = GalleryKind::RandomDense;
    int n = 1;
    std::uint64_t seed = 0;
    double target_norm = 1.0;
};

/// Uniform draw from [-1, 1) built from 53 explicit bits, so the stream is
/// identical on every platform.
double uniform_pm1(std::mt19937_64& rng);

/// Deterministic test matrix for (kind, n, seed), rescaled so that its
/// 1-norm equals target_norm. Throws std::domain_error when the generated
/// matrix is exactly zero (e.g. a 1x1 nilpotent shift).
DenseMatrix gallery(const GallerySpec& spec);

}  // namespace mexp
