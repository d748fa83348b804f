#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mexp/bench.hpp"
#include "mexp/expm.hpp"
#include "mexp/gallery.hpp"

namespace {

mexp::Accuracy parse_u(const std::string& s) {
    if (s == "single") return mexp::Accuracy::Single;
    if (s == "double") return mexp::Accuracy::Double;
    throw CLI::ValidationError("--u must be single or double");
}

mexp::Family parse_family_or_throw(const std::string& s) {
    mexp::Family f;
    if (!mexp::parse_family(s, f))
        throw CLI::ValidationError("unknown family '" + s + "'");
    return f;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dense matrix exponential via low-multiplication polynomial schemes"};
    app.require_subcommand(1);

    // exp
    auto* exp_cmd = app.add_subcommand("exp", "exponential of a matrix file");
    std::string exp_in, exp_family = "taylor-new", exp_u = "double";
    bool exp_report = false;
    exp_cmd->add_option("--in", exp_in, "matrix file (first line n, then n rows)")
        ->required();
    exp_cmd->add_option("--family", exp_family, "taylor-new | taylor-ps | pade");
    exp_cmd->add_option("--u", exp_u, "single | double");
    exp_cmd->add_flag("--report", exp_report, "print 'family degree s cost norm' to stderr");

    // theta
    auto* theta_cmd = app.add_subcommand("theta", "print the threshold table of a family");
    std::string theta_family = "taylor", theta_u = "double";
    theta_cmd->add_option("--family", theta_family, "taylor | ps | pade");
    theta_cmd->add_option("--u", theta_u, "single | double");

    // staircase
    auto* st_cmd = app.add_subcommand("staircase", "cost staircase CSV over a norm grid");
    std::string st_family = "taylor-new", st_u = "double", st_out;
    double st_min = 1e-8, st_max = 64.0;
    int st_points = 257;
    st_cmd->add_option("--family", st_family, "taylor-new | taylor-ps | pade");
    st_cmd->add_option("--u", st_u, "single | double");
    st_cmd->add_option("--norm-min", st_min, "smallest norm");
    st_cmd->add_option("--norm-max", st_max, "largest norm");
    st_cmd->add_option("--points", st_points, "log-spaced grid points");
    st_cmd->add_option("--out", st_out, "write CSV here instead of stdout");

    // sweep
    auto* sw_cmd = app.add_subcommand("sweep", "accuracy sweep CSV over gallery matrices");
    std::string sw_kinds, sw_families, sw_u = "double", sw_out;
    int sw_n = 30, sw_count = 200;
    std::uint64_t sw_seed = 0;
    double sw_min = 1e-3, sw_max = 1e2;
    sw_cmd->add_option("--kinds", sw_kinds, "comma list of gallery kinds (default: all)");
    sw_cmd->add_option("--families", sw_families, "comma list of families (default: all)");
    sw_cmd->add_option("--n", sw_n, "matrix dimension");
    sw_cmd->add_option("--count", sw_count, "number of matrices");
    sw_cmd->add_option("--seed", sw_seed, "base seed");
    sw_cmd->add_option("--u", sw_u, "single | double");
    sw_cmd->add_option("--norm-min", sw_min, "smallest target norm");
    sw_cmd->add_option("--norm-max", sw_max, "largest target norm");
    sw_cmd->add_option("--out", sw_out, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*exp_cmd) {
            std::ifstream in(exp_in);
            if (!in) throw std::runtime_error("cannot open " + exp_in);
            const mexp::DenseMatrix a = mexp::parse_matrix(in);
            const auto rep = mexp::expm(a, parse_u(exp_u), parse_family_or_throw(exp_family));
            std::cout << mexp::format_matrix(rep.result);
            if (exp_report)
                std::cerr << mexp::family_name(rep.family) << ' ' << rep.degree << ' '
                          << rep.s << ' ' << mexp::shortest_double(rep.product_cost())
                          << ' ' << mexp::shortest_double(rep.norm_in) << '\n';
        } else if (*theta_cmd) {
            const auto& table = mexp::selection_table(
                parse_family_or_throw(theta_family), parse_u(theta_u));
            std::printf("# family %s, u = %s\n# degree  pi  theta\n",
                        mexp::family_name(table.family), theta_u.c_str());
            for (const auto& e : table.entries)
                std::printf("%6d %4d  %.2e\n", e.degree, e.products, e.theta);
        } else if (*st_cmd) {
            const auto rows =
                mexp::cost_staircase(parse_family_or_throw(st_family), parse_u(st_u),
                                     mexp::log_grid(st_min, st_max, st_points));
            emit(mexp::staircase_csv(rows), st_out);
        } else if (*sw_cmd) {
            std::vector<mexp::GalleryKind> kinds;
            if (sw_kinds.empty()) {
                kinds.assign(mexp::kAllGalleryKinds.begin(), mexp::kAllGalleryKinds.end());
            } else {
                for (const auto& name : split_csv(sw_kinds)) {
                    mexp::GalleryKind k;
                    if (!mexp::parse_gallery_kind(name, k))
                        throw std::runtime_error("unknown gallery kind '" + name + "'");
                    kinds.push_back(k);
                }
            }
            std::vector<mexp::Family> families;
            if (sw_families.empty()) {
                families = {mexp::Family::TaylorNew, mexp::Family::TaylorPS,
                            mexp::Family::PadeDiagonal};
            } else {
                for (const auto& name : split_csv(sw_families))
                    families.push_back(parse_family_or_throw(name));
            }
            if (kinds.empty() || families.empty() || sw_count < 1)
                throw std::runtime_error("sweep needs kinds, families and a count");

            // target norms log-uniform in [norm-min, norm-max], drawn from the
            // base seed; matrix seeds derive from the base seed and the index
            std::mt19937_64 rng(sw_seed ^ 0xda3e39cb94b95bdbULL);
            std::vector<mexp::GallerySpec> specs;
            specs.reserve(sw_count);
            const double llo = std::log(sw_min), lhi = std::log(sw_max);
            for (int i = 0; i < sw_count; ++i) {
                mexp::GallerySpec spec;
                spec.kind = kinds[i % kinds.size()];
                spec.n = sw_n;
                spec.seed = sw_seed * 1000003ULL + std::uint64_t(i);
                const double f = 0.5 * (mexp::uniform_pm1(rng) + 1.0);
                spec.target_norm = std::exp(llo + f * (lhi - llo));
                specs.push_back(spec);
            }
            emit(mexp::sweep_csv(mexp::error_sweep(specs, families, parse_u(sw_u))),
                 sw_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
