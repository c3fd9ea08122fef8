// fractal-spectrum: command-line front end.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage or input error.
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fspec/acceptance.hpp"
#include "fspec/boundary_measures.hpp"
#include "fspec/cantor_transform.hpp"
#include "fspec/cuntz_rep.hpp"
#include "fspec/hilbert_vectors.hpp"
#include "fspec/operator_fractal.hpp"
#include "fspec/spectral_measures.hpp"
#include "fspec/spectrum_index.hpp"
#include "fspec/vector_io.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

json cx(fspec::Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

json moments_json(const fspec::MomentSequence& ms) {
    json arr = json::array();
    for (int k = 0; k <= ms.kmax; ++k) {
        arr.push_back({{"k", k},
                       {"re", ms.c[std::size_t(k)].real()},
                       {"im", ms.c[std::size_t(k)].imag()},
                       {"err", ms.err[std::size_t(k)]}});
    }
    return arr;
}

void emit(json j, const std::string& out_path) {
    j["tool"] = "fractal-spectrum";
    j["version"] = kVersion;
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream f(out_path);
        f << j.dump(2) << '\n';
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

fspec::GammaWord parse_path(const std::string& s) {
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw fspec::parse_error("path must be a 0/1 string", i);
        bits.push_back(static_cast<std::uint8_t>(s[i] - '0'));
    }
    return fspec::GammaWord(bits);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator system of the quarter-Cantor spectrum: Cuntz isometries, "
                 "the 5-scaling unitary, boundary measures and scalar spectral "
                 "measure decompositions"};
    app.require_subcommand(1);

    int terms = 30;
    double tol = 1e-12;
    std::string out_path;
    std::string format = "auto";
    auto add_common = [&](CLI::App* sub, bool with_format = false) {
        sub->add_option("--terms", terms, "extra product factors (default 30)");
        sub->add_option("--tol", tol, "certified absolute tolerance (default 1e-12)");
        sub->add_option("--out", out_path, "write the report to a file");
        if (with_format)
            sub->add_option("--format", format,
                            "json or csv (default: csv when --out ends in .csv, "
                            "or for density output)")
                ->check(CLI::IsMember({"json", "csv", "auto"}));
    };
    auto tcfg = [&] { return fspec::TransformConfig{terms, tol}; };
    auto use_csv = [&](bool csv_default) {
        if (format != "auto") return format == "csv";
        if (out_path.size() > 4 &&
            out_path.compare(out_path.size() - 4, 4, ".csv") == 0)
            return true;
        return csv_default;
    };

    std::string muhat_arg;
    auto* c_muhat =
        app.add_subcommand("muhat", "evaluate the measure transform at an integer");
    c_muhat->add_option("n", muhat_arg, "integer argument")->required();
    add_common(c_muhat);

    int gamma_depth = -1;
    std::string gamma_check, gamma_word;
    std::size_t gamma_min_len = 0;
    auto* c_gamma =
        app.add_subcommand("gamma", "spectrum membership, codec and enumeration");
    c_gamma->add_option("--depth", gamma_depth, "list all spectrum points of this depth");
    c_gamma->add_option("--check", gamma_check, "test membership of an integer");
    c_gamma->add_option("--word", gamma_word, "digit word of a spectrum point");
    c_gamma->add_option("--min-len", gamma_min_len, "pad the word with trailing zeros");
    add_common(c_gamma);

    int cc_depth = 8;
    auto* c_cuntz =
        app.add_subcommand("cuntz-check", "verify the Cuntz relations exactly");
    c_cuntz->add_option("--depth", cc_depth, "basis depth (default 8)");
    add_common(c_cuntz);

    std::string wold_vec;
    int wold_n = 10;
    auto* c_wold = app.add_subcommand("wold", "norms |S0*^n v| by exact stripping");
    c_wold->add_option("--vec", wold_vec, "vector (file or expression)")->required();
    c_wold->add_option("--n", wold_n, "number of strips (default 10)");
    add_common(c_wold);

    int rel_depth = 8;
    auto* c_rel =
        app.add_subcommand("relations", "verify the scaling relations exactly");
    c_rel->add_option("--depth", rel_depth, "basis depth (default 8)");
    add_common(c_rel);

    int blk_depth = 8, blk_levels = 6;
    auto* c_blk =
        app.add_subcommand("blocks", "verify the block structure of U exactly");
    c_blk->add_option("--depth", blk_depth, "basis depth (default 8)");
    c_blk->add_option("--levels", blk_levels, "number of block levels (default 6)");
    add_common(c_blk);

    int um_depth = 6;
    auto* c_um = app.add_subcommand(
        "umatrix", "truncated matrix of U and its unitarity deficit");
    c_um->add_option("--depth", um_depth, "basis depth (default 6)");
    add_common(c_um, true);

    std::string cyl_vec, cyl_path;
    int cyl_depth = 6;
    auto* c_cyl = app.add_subcommand("cylinder", "boundary cylinder masses of a vector");
    c_cyl->add_option("--vec", cyl_vec, "vector (file or expression)")->required();
    c_cyl->add_option("--depth", cyl_depth, "tree / scan depth (default 6)");
    c_cyl->add_option("--path", cyl_path, "scan along this 0/1 path instead of the tree");
    add_common(c_cyl, true);

    std::string mom_op = "U", mom_vec, mom_method = "map";
    int mom_kmax = 12, mom_depth = 10;
    auto* c_mom = app.add_subcommand(
        "moments", "moment sequence of the scalar spectral measure");
    c_mom->add_option("--op", mom_op, "U or MU")->check(CLI::IsMember({"U", "MU"}));
    c_mom->add_option("--vec", mom_vec, "vector (file or expression)")->required();
    c_mom->add_option("--kmax", mom_kmax, "highest moment (default 12)");
    c_mom->add_option("--method", mom_method,
                      "map: index-map closed form (exact identities); "
                      "projected: true moments with certified escape bounds")
        ->check(CLI::IsMember({"map", "projected"}));
    c_mom->add_option("--project-depth", mom_depth,
                      "basis depth for --method projected (default 10)");
    add_common(c_mom);

    std::string dec_vec;
    int dec_kmax = 12;
    auto* c_dec = app.add_subcommand("decompose", "one-step splitting of m^U_v");
    c_dec->add_option("--vec", dec_vec, "vector (file or expression)")->required();
    c_dec->add_option("--kmax", dec_kmax, "highest moment compared (default 12)");
    add_common(c_dec);

    std::string it_vec;
    int it_kmax = 12;
    bool it_normalize = false;
    auto* c_it = app.add_subcommand(
        "iterate", "full Dirac + MU-component expansion of m^U_v");
    c_it->add_option("--vec", it_vec, "vector (file or expression)")->required();
    c_it->add_option("--kmax", it_kmax, "highest moment compared (default 12)");
    c_it->add_flag("--normalize", it_normalize, "normalize the vector first");
    add_common(c_it);

    std::string den_op = "U", den_vec;
    int den_N = 64, den_grid = 512, den_kmax = -1;
    auto* c_den = app.add_subcommand(
        "density", "Fejer density estimate of a spectral measure");
    c_den->add_option("--op", den_op, "U or MU")->check(CLI::IsMember({"U", "MU"}));
    c_den->add_option("--vec", den_vec, "vector (file or expression)")->required();
    c_den->add_option("--N", den_N, "Fejer degree (default 64)");
    c_den->add_option("--grid", den_grid, "grid size (default 512)");
    c_den->add_option("--kmax", den_kmax, "moments to compute (default N)");
    add_common(c_den, true);

    std::string rn_num, rn_den;
    int rn_N = 12, rn_grid = 512;
    double rn_floor = 0.0;
    auto* c_rn = app.add_subcommand("rn", "Radon-Nikodym ratio of two Fejer densities");
    c_rn->add_option("--num", rn_num, "numerator vector (file or expression)")->required();
    c_rn->add_option("--den", rn_den, "denominator vector (file or expression)")->required();
    c_rn->add_option("--N", rn_N, "Fejer degree (default 12)");
    c_rn->add_option("--grid", rn_grid, "grid size (default 512)");
    c_rn->add_option("--floor", rn_floor, "denominator floor (default 1e-6 * max)");
    add_common(c_rn, true);

    std::string prj_vec, prj_w, prj_v;
    int prj_k = -1, prj_M = 16;
    auto* c_prj = app.add_subcommand(
        "project", "level projector P_k (--vec/--k) or least-squares projection "
                   "onto a U-cyclic span (--w/--v/--M)");
    c_prj->add_option("--vec", prj_vec, "vector for the level projector");
    c_prj->add_option("--k", prj_k, "level index");
    c_prj->add_option("--w", prj_w, "vector to project");
    c_prj->add_option("--v", prj_v, "cyclic generator");
    c_prj->add_option("--M", prj_M, "Laurent degree (default 16)");
    add_common(c_prj);

    std::string tr_vec, tr_phi = "1";
    int tr_k = 0;
    auto* c_tr =
        app.add_subcommand("transitivity", "two routes to a component integral");
    c_tr->add_option("--vec", tr_vec, "vector (file or expression)")->required();
    c_tr->add_option("--k", tr_k, "level (default 0)");
    c_tr->add_option("--phi", tr_phi, "trig polynomial, e.g. \"z^2+1\"");
    add_common(c_tr);

    std::uint64_t va_seed = fspec::AcceptanceConfig{}.seed;
    int va_criterion = 0;
    auto* c_va = app.add_subcommand("verify-all", "run the acceptance checks");
    c_va->add_option("--seed", va_seed, "seed for the randomized instances");
    c_va->add_option("--criterion", va_criterion, "run one criterion only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_muhat) {
            std::vector<std::string> trace;
            const fspec::MuHatValue v =
                fspec::mu_hat_int_traced(fspec::BigInt(muhat_arg), tcfg(), trace);
            emit({{"n", muhat_arg},
                  {"value", cx(v.value)},
                  {"error_bound", v.error_bound},
                  {"trace", trace}},
                 out_path);
        } else if (*c_gamma) {
            if (gamma_depth < 0 && gamma_check.empty() && gamma_word.empty()) {
                std::cerr << "error: gamma needs --depth, --check or --word\n";
                return 2;
            }
            json j;
            if (gamma_depth >= 0) {
                json vals = json::array();
                for (const auto& g : fspec::enumerate_gamma(gamma_depth))
                    vals.push_back(g.str());
                j["depth"] = gamma_depth;
                j["values"] = vals;
            }
            if (!gamma_check.empty())
                j["in_gamma"] = fspec::is_in_gamma(fspec::BigInt(gamma_check));
            if (!gamma_word.empty()) {
                const auto w =
                    fspec::index_to_word(fspec::BigInt(gamma_word), gamma_min_len);
                j["word"] = w.to_string();
                j["value"] = w.value().str();
            }
            emit(j, out_path);
        } else if (*c_cuntz) {
            const auto rep = fspec::cuntz_identity_check(cc_depth);
            emit({{"depth", rep.depth},
                  {"s0_isometry", rep.s0_isometry},
                  {"s1_isometry", rep.s1_isometry},
                  {"cross_terms_vanish", rep.cross_terms_vanish},
                  {"range_projections_complete", rep.range_projections_complete},
                  {"pass", rep.all_pass()}},
                 out_path);
            return rep.all_pass() ? 0 : 1;
        } else if (*c_wold) {
            const auto v = fspec::resolve_vector_argument(wold_vec);
            emit({{"norms", fspec::wold_sequence(v, wold_n)},
                  {"limit", std::sqrt(std::norm(v.coefficient(0)))}},
                 out_path);
        } else if (*c_rel) {
            const auto rep = fspec::relation_checks(rel_depth);
            emit({{"depth", rep.depth},
                  {"s0_commutes", rep.s0_commutes},
                  {"s1_compression_is_mu", rep.s1_compression_is_mu},
                  {"range_projection_commutes", rep.range_projection_commutes},
                  {"pass", rep.all_pass()}},
                 out_path);
            return rep.all_pass() ? 0 : 1;
        } else if (*c_blk) {
            const auto rep = fspec::block_structure_check(blk_depth, blk_levels);
            emit({{"depth", rep.depth},
                  {"levels", rep.levels},
                  {"fixed_vector_ok", rep.fixed_vector_ok},
                  {"blocks_ok", rep.blocks_ok},
                  {"pass", rep.all_pass()}},
                 out_path);
            return rep.all_pass() ? 0 : 1;
        } else if (*c_um) {
            const auto um = fspec::u_matrix(um_depth, tcfg());
            if (use_csv(false)) {
                const auto gammas = fspec::enumerate_gamma(um.depth);
                std::ostringstream csv;
                csv << std::setprecision(17);
                csv << "xi,gamma,re,im\n";
                for (Eigen::Index col = 0; col < um.matrix.cols(); ++col)
                    for (Eigen::Index row = 0; row < um.matrix.rows(); ++row)
                        csv << gammas[std::size_t(row)].str() << ','
                            << gammas[std::size_t(col)].str() << ','
                            << um.matrix(row, col).real() << ','
                            << um.matrix(row, col).imag() << '\n';
                emit_text(csv.str(), out_path);
            } else {
                emit({{"depth", um.depth},
                      {"unitarity_deficit", um.unitarity_deficit},
                      {"min_column_norm_sq", um.min_column_norm_sq},
                      {"max_column_norm_sq", um.max_column_norm_sq},
                      {"max_entry_error", um.max_entry_error}},
                     out_path);
            }
        } else if (*c_cyl) {
            const auto v = fspec::resolve_vector_argument(cyl_vec);
            if (!cyl_path.empty()) {
                const auto masses =
                    fspec::atom_scan(v, parse_path(cyl_path), cyl_depth);
                emit({{"path", cyl_path}, {"masses", masses}}, out_path);
            } else {
                const auto rep = fspec::cylinder_tree(v, cyl_depth);
                if (use_csv(false)) {
                    std::ostringstream csv;
                    csv << std::setprecision(17);
                csv << std::setprecision(17);
                    csv << "prefix,mass\n";
                    for (const auto& [p, m] : rep.masses)
                        csv << p.to_string() << ',' << m << '\n';
                    emit_text(csv.str(), out_path);
                } else {
                    json masses = json::array();
                    for (const auto& [p, m] : rep.masses)
                        masses.push_back({{"prefix", p.to_string()}, {"mass", m}});
                    emit({{"depth", rep.depth},
                          {"total", rep.total},
                          {"max_additivity_violation", rep.max_additivity_violation},
                          {"masses", masses}},
                         out_path);
                }
            }
        } else if (*c_mom) {
            const auto v = fspec::resolve_vector_argument(mom_vec);
            fspec::MomentSequence ms;
            if (mom_method == "map") {
                ms = mom_op == "U" ? fspec::u_moments(v, mom_kmax, tcfg())
                                   : fspec::mu_moments(v, mom_kmax, tcfg());
            } else {
                ms = mom_op == "U"
                         ? fspec::u_moments_projected(v, mom_kmax, mom_depth, tcfg())
                         : fspec::mu_moments_projected(v, mom_kmax, mom_depth, tcfg());
            }
            emit({{"op", mom_op},
                  {"method", mom_method},
                  {"kmax", ms.kmax},
                  {"moments", moments_json(ms)}},
                 out_path);
        } else if (*c_dec) {
            const auto v = fspec::resolve_vector_argument(dec_vec);
            const auto d = fspec::decompose_once(v, dec_kmax, tcfg());
            emit({{"residual", d.residual},
                  {"whole", moments_json(d.whole)},
                  {"left", moments_json(d.left)},
                  {"right", moments_json(d.right)}},
                 out_path);
        } else if (*c_it) {
            auto v = fspec::resolve_vector_argument(it_vec);
            if (it_normalize) v = fspec::normalize(v, tcfg());
            const auto d = fspec::iterate_decomposition(v, it_kmax, tcfg());
            json comps = json::array();
            for (const auto& comp : d.components) comps.push_back(moments_json(comp));
            emit({{"dirac_weight", d.dirac_weight},
                  {"level_weights", d.level_weights},
                  {"weight_sum", d.weight_sum},
                  {"norm_sq", d.norm_sq},
                  {"residual", d.residual},
                  {"weight_cylinder_max_diff", d.weight_cylinder_max_diff},
                  {"components", comps}},
                 out_path);
        } else if (*c_den) {
            const auto v = fspec::resolve_vector_argument(den_vec);
            const int kmax = den_kmax < 0 ? den_N : den_kmax;
            const auto ms = den_op == "U" ? fspec::u_moments(v, kmax, tcfg())
                                          : fspec::mu_moments(v, kmax, tcfg());
            const auto de = fspec::fejer_density(ms, den_N, den_grid);
            if (!use_csv(true)) {
                emit({{"op", den_op},
                      {"degree", de.degree},
                      {"min_value", de.min_value},
                      {"theta", de.theta},
                      {"values", de.values}},
                     out_path);
            } else {
                std::ostringstream csv;
                csv << std::setprecision(17);
                csv << "theta,value\n";
                for (std::size_t i = 0; i < de.theta.size(); ++i)
                    csv << de.theta[i] << ',' << de.values[i] << '\n';
                emit_text(csv.str(), out_path);
            }
        } else if (*c_rn) {
            const auto num = fspec::resolve_vector_argument(rn_num);
            const auto den = fspec::resolve_vector_argument(rn_den);
            const auto rn =
                fspec::rn_estimate(fspec::u_moments(num, rn_N, tcfg()),
                                   fspec::u_moments(den, rn_N, tcfg()), rn_N,
                                   rn_grid, rn_floor);
            if (use_csv(false)) {
                std::ostringstream csv;
                csv << std::setprecision(17);
                csv << "theta,ratio,valid\n";
                for (std::size_t i = 0; i < rn.theta.size(); ++i)
                    csv << rn.theta[i] << ',' << rn.ratio[i] << ','
                        << int(rn.valid[i]) << '\n';
                emit_text(csv.str(), out_path);
            } else {
                json grid = json::array();
                for (std::size_t i = 0; i < rn.theta.size(); ++i)
                    grid.push_back({{"theta", rn.theta[i]},
                                    {"ratio", rn.valid[i] ? json(rn.ratio[i]) : json()},
                                    {"valid", bool(rn.valid[i])}});
                emit({{"floor", rn.floor_used},
                      {"defined_count", rn.defined_count},
                      {"grid", grid}},
                     out_path);
            }
        } else if (*c_prj) {
            const bool level_mode = !prj_vec.empty() && prj_k >= 0;
            const bool cyclic_mode = !prj_w.empty() && !prj_v.empty();
            if (level_mode == cyclic_mode) {
                std::cerr << "error: use either --vec/--k or --w/--v\n";
                return 2;
            }
            if (level_mode) {
                const auto v = fspec::resolve_vector_argument(prj_vec);
                const auto p = fspec::p_k_project(v, prj_k);
                emit({{"k", prj_k},
                      {"norm_sq", p.coeff_norm_sq()},
                      {"projection", fspec::vector_to_json(p)}},
                     out_path);
            } else {
                const auto w = fspec::resolve_vector_argument(prj_w);
                const auto v = fspec::resolve_vector_argument(prj_v);
                const auto p = fspec::cyclic_project(w, v, prj_M, tcfg());
                emit({{"M", prj_M},
                      {"projection_norm", p.projection_norm},
                      {"residual_norm", p.residual_norm},
                      {"effective_rank", p.effective_rank},
                      {"dimension", p.dimension},
                      {"ill_conditioned", p.ill_conditioned}},
                     out_path);
            }
        } else if (*c_tr) {
            const auto v = fspec::resolve_vector_argument(tr_vec);
            const auto phi = fspec::parse_trig_poly(tr_phi);
            const auto rep = fspec::transitivity_check(v, tr_k, phi, tcfg());
            emit({{"k", tr_k},
                  {"phi", tr_phi},
                  {"lhs", cx(rep.lhs)},
                  {"rhs", cx(rep.rhs)},
                  {"discrepancy", rep.discrepancy}},
                 out_path);
        } else if (*c_va) {
            fspec::AcceptanceConfig acfg;
            acfg.seed = va_seed;
            bool all_pass = true;
            if (va_criterion != 0) {
                const auto r = fspec::run_criterion(va_criterion, acfg);
                std::cout << fspec::format_result(r) << '\n';
                all_pass = r.passed;
            } else {
                for (const auto& r : fspec::run_acceptance(acfg)) {
                    std::cout << fspec::format_result(r) << '\n';
                    all_pass = all_pass && r.passed;
                }
            }
            return all_pass ? 0 : 1;
        }
    } catch (const fspec::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
