#include "mexp/expm.hpp"

#include <cmath>
#include <stdexcept>

#include "mexp/pade.hpp"
#include "mexp/taylor_schemes.hpp"

namespace mexp {

Selection select(double norm, const SelectionTable& table) {
    if (!std::isfinite(norm) || norm < 0)
        throw std::invalid_argument("norm must be finite and nonnegative");
    if (norm <= table.theta_max()) {
        const SchemeDescriptor* best = nullptr;
        for (const auto& e : table.entries) {
            if (e.theta < norm) continue;
            if (!best || e.products < best->products ||
                (e.products == best->products && e.degree < best->degree))
                best = &e;
        }
        return {best->degree, 0};
    }
    const auto& a = table.asymptotic();
    int s = 0;
    // exact halving avoids log2 rounding fuzz at power-of-two boundaries
    while (std::ldexp(norm, -s) > a.theta) ++s;
    return {a.degree, s};
}

DenseMatrix squarings(CostContext& ctx, DenseMatrix x, int s) {
    if (s < 0) throw std::invalid_argument("s must be nonnegative");
    for (int i = 0; i < s; ++i) x = matmul(ctx, x, x);
    return x;
}

ExpmReport expm(const DenseMatrix& a, Accuracy u, Family family) {
    if (!a.all_finite()) throw std::invalid_argument("non-finite matrix entry");
    const auto& table = selection_table(family, u);
    const double norm = one_norm(a);
    const auto sel = select(norm, table);

    const SchemeDescriptor* chosen = nullptr;
    for (const auto& e : table.entries)
        if (e.degree == sel.degree) chosen = &e;

    const DenseMatrix arg = sel.s == 0 ? a : scaled(a, std::ldexp(1.0, -sel.s));
    CostContext ctx;
    DenseMatrix x(1);
    switch (family) {
        case Family::TaylorNew:
            x = eval_taylor_new(ctx, arg, sel.degree);
            break;
        case Family::TaylorPS:
            x = eval_taylor_ps(ctx, arg, sel.degree);
            break;
        case Family::PadeDiagonal:
            x = eval_pade(ctx, arg, sel.degree);
            break;
    }
    x = squarings(ctx, x, sel.s);

    ExpmReport rep;
    rep.result = std::move(x);
    rep.family = family;
    rep.degree = sel.degree;
    rep.s = sel.s;
    rep.norm_in = norm;
    // Reported cost uses the table's product count; the generic evaluator for
    // intermediate Pade orders can spend slightly more.
    rep.cost_thirds = 3 * std::int64_t(chosen->products + sel.s) +
                      (family == Family::PadeDiagonal ? 4 : 0);
    return rep;
}

}  // namespace mexp
