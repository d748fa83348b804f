#include "mexp/bench.hpp"

#include <cmath>
#include <stdexcept>

#include "mexp/pade.hpp"

namespace mexp {

DenseMatrix reference_expm(const DenseMatrix& a) {
    if (!a.all_finite()) throw std::invalid_argument("non-finite matrix entry");
    const double theta26 =
        selection_table(Family::PadeDiagonal, Accuracy::Double).theta_max();
    const double norm = one_norm(a);
    int s = 0;
    while (std::ldexp(norm, -s) > theta26 / 8.0) ++s;
    CostContext ctx;
    DenseMatrix x = eval_r26(ctx, s == 0 ? a : scaled(a, std::ldexp(1.0, -s)));
    return squarings(ctx, std::move(x), s);
}

namespace {
std::int64_t model_cost_thirds(const SelectionTable& table, const Selection& sel) {
    for (const auto& e : table.entries)
        if (e.degree == sel.degree)
            return 3 * std::int64_t(e.products + sel.s) +
                   (table.family == Family::PadeDiagonal ? 4 : 0);
    throw std::logic_error("degree missing from table");
}
}  // namespace

std::vector<StaircaseRow> cost_staircase(Family f, Accuracy u,
                                         const std::vector<double>& norms) {
    const auto& table = selection_table(f, u);
    std::vector<StaircaseRow> rows;
    rows.reserve(norms.size());
    for (double norm : norms) {
        const auto sel = select(norm, table);
        rows.push_back({norm, sel.degree, sel.s, model_cost_thirds(table, sel)});
    }
    return rows;
}

std::string staircase_csv(const std::vector<StaircaseRow>& rows) {
    std::string out = "norm,degree,s,product_cost\n";
    for (const auto& r : rows) {
        out += shortest_double(r.norm);
        out += ',';
        out += std::to_string(r.degree);
        out += ',';
        out += std::to_string(r.s);
        out += ',';
        out += shortest_double(r.product_cost());
        out += '\n';
    }
    return out;
}

std::vector<SweepRow> error_sweep(const std::vector<GallerySpec>& specs,
                                  const std::vector<Family>& families,
                                  Accuracy u) {
    if (specs.empty() || families.empty())
        throw std::invalid_argument("sweep needs matrices and families");
    std::vector<SweepRow> rows;
    rows.reserve(specs.size() * families.size());
    for (std::size_t id = 0; id < specs.size(); ++id) {
        const DenseMatrix a = gallery(specs[id]);
        const double norm = one_norm(a);
        const DenseMatrix ref = reference_expm(a);
        const double ref_norm = one_norm(ref);
        for (Family f : families) {
            SweepRow row;
            row.matrix_id = int(id);
            row.kind = specs[id].kind;
            row.n = specs[id].n;
            row.norm = norm;
            row.family = f;
            try {
                ExpmReport rep = expm(a, u, f);
                row.degree = rep.degree;
                row.s = rep.s;
                row.cost_thirds = rep.cost_thirds;
                row.relerr = one_norm(sub(rep.result, ref)) / ref_norm;
            } catch (const std::runtime_error&) {
                row.failed = true;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "# relerr is measured against an over-scaled order-26 Pade reference "
        "computed in double precision and floors near the unit roundoff\n"
        "matrix_id,kind,n,norm,family,degree,s,product_cost,relerr\n";
    for (const auto& r : rows) {
        out += std::to_string(r.matrix_id);
        out += ',';
        out += gallery_kind_name(r.kind);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        out += shortest_double(r.norm);
        out += ',';
        out += family_name(r.family);
        out += ',';
        if (r.failed) {
            out += "0,0,0,FAIL";
        } else {
            out += std::to_string(r.degree);
            out += ',';
            out += std::to_string(r.s);
            out += ',';
            out += shortest_double(double(r.cost_thirds) / 3.0);
            out += ',';
            out += shortest_double(r.relerr);
        }
        out += '\n';
    }
    return out;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0) || !(hi >= lo) || points < 1)
        throw std::invalid_argument("bad norm grid");
    std::vector<double> g;
    g.reserve(points);
    if (points == 1) {
        g.push_back(lo);
        return g;
    }
    const double step = std::log(hi / lo) / (points - 1);
    for (int i = 0; i < points; ++i) g.push_back(lo * std::exp(step * i));
    g.back() = hi;
    return g;
}

}  // namespace mexp
