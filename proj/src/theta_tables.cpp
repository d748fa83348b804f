#include "mexp/theta_tables.hpp"

#include <cmath>
#include <stdexcept>

namespace mexp {

double unit_roundoff(Accuracy u) {
    return u == Accuracy::Single ? std::ldexp(1.0, -24) : std::ldexp(1.0, -53);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::TaylorNew: return "taylor-new";
        case Family::TaylorPS: return "taylor-ps";
        case Family::PadeDiagonal: return "pade";
    }
    return "?";
}

bool parse_family(std::string_view name, Family& out) {
    if (name == "taylor-new" || name == "taylor") out = Family::TaylorNew;
    else if (name == "taylor-ps" || name == "ps") out = Family::TaylorPS;
    else if (name == "pade") out = Family::PadeDiagonal;
    else return false;
    return true;
}

namespace {

SelectionTable make_table(Family f, Accuracy u, std::initializer_list<int> degrees,
                          std::initializer_list<int> products,
                          std::initializer_list<double> thetas) {
    SelectionTable t;
    t.family = f;
    t.accuracy = u;
    auto d = degrees.begin();
    auto p = products.begin();
    auto th = thetas.begin();
    for (; d != degrees.end(); ++d, ++p, ++th)
        t.entries.push_back({f, *d, *p, *th});
    return t;
}

const SelectionTable kTaylorNewDouble = make_table(
    Family::TaylorNew, Accuracy::Double, {1, 2, 4, 8, 12, 18}, {0, 1, 2, 3, 4, 5},
    {2.22e-16, 2.58e-8, 3.40e-4, 4.99e-2, 2.99e-1, 1.09});

const SelectionTable kTaylorNewSingle = make_table(
    Family::TaylorNew, Accuracy::Single, {1, 2, 4, 8, 12, 18}, {0, 1, 2, 3, 4, 5},
    {1.19e-7, 5.98e-4, 5.12e-2, 5.80e-1, 1.46, 3.01});

const SelectionTable kTaylorPsDouble = make_table(
    Family::TaylorPS, Accuracy::Double, {1, 2, 4, 6, 9, 16}, {0, 1, 2, 3, 4, 6},
    {2.22e-16, 2.58e-8, 3.40e-4, 9.07e-3, 8.96e-2, 7.80e-1});

const SelectionTable kTaylorPsSingle = make_table(
    Family::TaylorPS, Accuracy::Single, {1, 2, 4, 6, 9, 16}, {0, 1, 2, 3, 4, 6},
    {1.19e-7, 5.98e-4, 5.12e-2, 2.50e-1, 7.80e-1, 2.48});

const SelectionTable kPadeDouble = make_table(
    Family::PadeDiagonal, Accuracy::Double,
    {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26},
    {0, 1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6},
    {3.65e-8, 5.32e-4, 1.50e-2, 8.54e-2, 2.54e-1, 5.41e-1, 9.50e-1, 1.47, 2.10,
     2.81, 3.60, 4.46, 5.37});

const SelectionTable kPadeSingle = make_table(
    Family::PadeDiagonal, Accuracy::Single,
    {2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26},
    {0, 1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6},
    {8.46e-4, 8.09e-2, 4.26e-1, 1.05, 1.88, 2.85, 3.93, 5.06, 6.25, 7.47, 8.71,
     9.97, 11.2});

}  // namespace

const SelectionTable& selection_table(Family f, Accuracy u) {
    const bool single = (u == Accuracy::Single);
    switch (f) {
        case Family::TaylorNew: return single ? kTaylorNewSingle : kTaylorNewDouble;
        case Family::TaylorPS: return single ? kTaylorPsSingle : kTaylorPsDouble;
        case Family::PadeDiagonal: return single ? kPadeSingle : kPadeDouble;
    }
    throw std::logic_error("unknown family");
}

}  // namespace mexp
