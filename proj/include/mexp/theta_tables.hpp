#pragma once

#include <string_view>
#include <vector>

namespace mexp {

enum class Family { TaylorNew, TaylorPS, PadeDiagonal };
enum class Accuracy { Single, Double };  // targets u = 2^-24 and u = 2^-53

double unit_roundoff(Accuracy u);
const char* family_name(Family f);  // "taylor-new" | "taylor-ps" | "pade"
bool parse_family(std::string_view name, Family& out);

struct SchemeDescriptor {
    Family family;
    int degree;    // polynomial degree; for Pade the order 2m
    int products;  // matrix products of the evaluation scheme
    double theta;  // largest admissible ||A||_1 for the accuracy target
};

struct SelectionTable {
    Family family;
    Accuracy accuracy;
    std::vector<SchemeDescriptor> entries;  // ascending theta
    const SchemeDescriptor& asymptotic() const { return entries.back(); }
    double theta_max() const { return entries.back().theta; }
};

// Backward-error thresholds baked as published; the series engine in
// series.hpp recomputes them and the regression suite checks agreement.
const SelectionTable& selection_table(Family f, Accuracy u);

}  // namespace mexp
