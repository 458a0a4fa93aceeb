// SPDX-License-Identifier: Apache-2.0
// Command-line front end: evaluate catalog solutions, classify algebra
// elements, transform solutions, emit figure data, run verification engines.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gmr/figures.hpp"
#include "gmr/json_io.hpp"
#include "gmr/kernels.hpp"
#include "gmr/lie.hpp"
#include "gmr/model.hpp"
#include "gmr/optimal_system.hpp"
#include "gmr/solutions.hpp"
#include "gmr/transform.hpp"
#include "gmr/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;
constexpr int kExitUsage = 64;
constexpr int kExitCheckFailed = 1;

json load_json(const std::string& inline_text, const std::string& file) {
    if (!inline_text.empty() && !file.empty())
        throw gmr::domain_error("give either an inline JSON string or a file, not both");
    if (!inline_text.empty()) return json::parse(inline_text);
    std::ifstream in(file);
    if (!in) throw gmr::io_error("cannot read: " + file);
    json j;
    in >> j;
    return j;
}

/// Shared family options: an optional JSON source plus flag overrides
/// (flags win over file values).
struct FamilyArgs {
    std::string json_text, json_file;
    std::optional<std::string> family;
    std::optional<double> c1, c2, a, k, alpha, sigma, lambda;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--family-json", json_text, "solution family as inline JSON");
        cmd.add_option("--family-file", json_file, "solution family JSON file");
        cmd.add_option("--family", family, "family name (Inv1, Inv2, ..., ExpAt_neg)");
        cmd.add_option("--c1", c1, "first constant (or single constant c)");
        cmd.add_option("--c2", c2, "second constant");
        cmd.add_option("--a", a, "family parameter a");
        cmd.add_option("--k", k, "reversion speed");
        cmd.add_option("--alpha", alpha, "long-run level (default 0)");
        cmd.add_option("--sigma", sigma, "volatility");
        cmd.add_option("--lambda", lambda, "potential coefficient (default k^2/(2 sigma^2))");
    }

    gmr::SolutionFamily build() const {
        gmr::SolutionFamily f;
        bool have_base = false;
        if (!json_text.empty() || !json_file.empty()) {
            f = gmr::solution_family_from_json(load_json(json_text, json_file));
            have_base = true;
        }
        if (family) f.family = gmr::family_from_name(*family);
        else if (!have_base)
            throw gmr::domain_error("a family is required (--family or --family-json/-file)");
        if (k || sigma || alpha || lambda || !have_base) {
            const double kk = k.value_or(have_base ? f.params.k : 1.0);
            const double ss = sigma.value_or(have_base ? f.params.sigma : 1.0);
            f.params.k = kk;
            f.params.sigma = ss;
            f.params.alpha = alpha.value_or(have_base ? f.params.alpha : 0.0);
            f.params.lambda = lambda.value_or(
                (have_base && !k && !sigma) ? f.params.lambda : kk * kk / (2.0 * ss * ss));
        }
        if (c1) f.c1 = *c1;
        if (c2) f.c2 = *c2;
        if (a) f.a = *a;
        f.validate();
        return f;
    }
};

int cmd_eval(const FamilyArgs& fa, double t, double x) {
    const gmr::SolutionFamily f = fa.build();
    std::printf("%.17g\n", gmr::eval(f, t, x));
    return kExitOk;
}

int cmd_classify(const std::string& text, const std::string& file) {
    const gmr::lie::AlgebraElement x =
        gmr::algebra_element_from_json(load_json(text, file));
    const gmr::lie::OptimalRep rep = gmr::lie::classify(x);
    const double res = gmr::lie::replay_residual(x, rep);
    const double tol = 1e-9 * (1.0 + std::abs(rep.scale) * (1.0 + std::abs(rep.a)));
    json out = gmr::to_json(rep);
    out["replay_residual"] = res;
    out["replay"] = res <= tol ? "ok" : "mismatch";
    std::printf("%s\n", out.dump(2).c_str());
    return res <= tol ? kExitOk : kExitCheckFailed;
}

struct GridArgs {
    gmr::FigureGrid g;
    void add_to(CLI::App& cmd) {
        cmd.add_option("--t-min", g.t_min, "grid t lower bound");
        cmd.add_option("--t-max", g.t_max, "grid t upper bound");
        cmd.add_option("--x-min", g.x_min, "grid x lower bound");
        cmd.add_option("--x-max", g.x_max, "grid x upper bound");
        cmd.add_option("--nt", g.n_t, "t sample count");
        cmd.add_option("--nx", g.n_x, "x sample count");
    }
};

int cmd_transform(int gen, double eps, const FamilyArgs& fa, std::optional<double> t,
                  std::optional<double> x, std::optional<double> u,
                  const std::string& out_path, bool check, double tol,
                  const GridArgs& grid) {
    // Point mode: all three coordinates given.
    if (t && x && u) {
        gmr::ModelParams p = gmr::ModelParams::symmetric(
            fa.k.value_or(1.0), fa.sigma.value_or(1.0));
        const gmr::PointMap m{gen, eps, p};
        const gmr::PdePoint moved = gmr::apply_point(m, {*t, *x, *u});
        json j{{"t", moved.t}, {"x", moved.x}, {"u", moved.u}};
        std::printf("%s\n", j.dump().c_str());
        return kExitOk;
    }

    const gmr::SolutionFamily f = fa.build();
    const gmr::PointMap m{gen, eps, f.params};
    const gmr::Solution moved = gmr::apply_to_solution(m, gmr::as_solution(f));

    if (t && x) {
        std::printf("%.17g\n", moved.value(*t, *x));
        return kExitOk;
    }
    if (out_path.empty() && !check)
        throw gmr::domain_error("transform needs --t/--x (value), --t/--x/--u (point) or --out/--check");

    if (!out_path.empty()) {
        grid.g.validate();
        std::FILE* outf = std::fopen(out_path.c_str(), "w");
        if (!outf) throw gmr::io_error("cannot open for writing: " + out_path);
        std::fprintf(outf, "t,x,u\n");
        for (int i = 0; i < grid.g.n_t; ++i)
            for (int j = 0; j < grid.g.n_x; ++j) {
                const double tt = grid.g.t(i), xx = grid.g.x(j);
                if (!moved.in_domain(tt, xx)) continue;
                std::fprintf(outf, "%.17g,%.17g,%.17g\n", tt, xx, moved.value(tt, xx));
            }
        std::fclose(outf);
    }
    if (check) {
        gmr::verify::Grid vg{0.2, 2.0, -1.5, 1.5, 50, 50};
        const auto rep = gmr::verify::residual_grid(moved, f.params, vg);
        std::printf("%s\n", gmr::to_json(rep).dump(2).c_str());
        return rep.max_residual <= tol ? kExitOk : kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_figure(int fig, char sub, const FamilyArgs& fa, const GridArgs& grid,
               const std::string& out_path) {
    gmr::SolutionFamily f = gmr::figure_family({fig, sub});
    // Caption parameters may be overridden (e.g. the alternate figure-3
    // parameterization with two constants).
    if (fa.family) f.family = gmr::family_from_name(*fa.family);
    if (fa.k || fa.sigma) {
        const double kk = fa.k.value_or(f.params.k);
        const double ss = fa.sigma.value_or(f.params.sigma);
        f.params = gmr::ModelParams::symmetric(kk, ss);
    }
    if (fa.c1) f.c1 = *fa.c1;
    if (fa.c2) f.c2 = *fa.c2;
    if (fa.a) f.a = *fa.a;
    f.validate();
    gmr::write_figure_csv(f, grid.g, out_path);
    return kExitOk;
}

gmr::verify::Grid grid_from_config(const json& j, gmr::verify::Grid def) {
    if (!j.contains("grid")) return def;
    const json& g = j.at("grid");
    gmr::verify::Grid r = def;
    if (g.contains("t_min")) r.t_min = g.at("t_min").get<double>();
    if (g.contains("t_max")) r.t_max = g.at("t_max").get<double>();
    if (g.contains("y_min")) r.y_min = g.at("y_min").get<double>();
    if (g.contains("y_max")) r.y_max = g.at("y_max").get<double>();
    if (g.contains("n_t")) r.n_t = g.at("n_t").get<int>();
    if (g.contains("n_y")) r.n_y = g.at("n_y").get<int>();
    return r;
}

int cmd_verify_residual(const json& cfg) {
    const gmr::verify::Grid g = grid_from_config(cfg, {0.2, 2.0, -1.5, 1.5, 50, 50});
    const bool fd_mode = cfg.value("mode", std::string("closed")) == "fd";
    const double tol = cfg.value("tolerance", fd_mode ? 1e-4 : 1e-7);

    std::vector<gmr::SolutionFamily> targets;
    if (cfg.contains("family"))
        targets.push_back(gmr::solution_family_from_json(cfg.at("family")));
    else
        targets = gmr::standard_catalog();

    json rows = json::array();
    bool ok = true;
    for (const auto& f : targets) {
        gmr::Solution s = gmr::as_solution(f);
        if (fd_mode) s.derivs = nullptr;
        const auto rep = gmr::verify::residual_grid(s, f.params, g);
        json row = gmr::to_json(rep);
        row["family"] = gmr::family_name(f.family);
        row["pass"] = rep.max_residual <= tol;
        ok = ok && rep.max_residual <= tol;
        rows.push_back(row);
    }
    json out{{"tolerance", tol}, {"mode", fd_mode ? "fd" : "closed"}, {"reports", rows},
             {"pass", ok}};
    std::printf("%s\n", out.dump(2).c_str());
    return ok ? kExitOk : kExitCheckFailed;
}

/// Inv1 manufactured case: CN against the steady closed form; Richardson
/// order from a half-resolution run.
int cmd_verify_fd(const json& cfg) {
    const double k = cfg.value("k", 1.0);
    const double sigma = cfg.value("sigma", 1.0);
    const double c1 = cfg.value("c1", 1.0);
    const double c2 = cfg.value("c2", 0.0);
    gmr::SolutionFamily f;
    f.family = gmr::FamilyId::Inv1;
    f.params = gmr::ModelParams::symmetric(k, sigma);
    f.c1 = c1;
    f.c2 = c2;

    const gmr::verify::Grid g = grid_from_config(cfg, {0.2, 1.0, -1.0, 1.0, 200, 200});

    auto solve_error = [&](const gmr::verify::Grid& gg) {
        std::vector<double> init(gg.n_y);
        for (int j = 0; j < gg.n_y; ++j)
            init[j] = gmr::eval(f, gg.t_min, std::exp(gg.y(j)));
        auto lo = [&](double t) { return gmr::eval(f, t, std::exp(gg.y_min)); };
        auto hi = [&](double t) { return gmr::eval(f, t, std::exp(gg.y_max)); };
        const auto s = gmr::verify::cn_solve(f.params, gg, init, lo, hi);
        double err = 0.0;
        for (int i = 0; i < gg.n_t; ++i)
            for (int j = 0; j < gg.n_y; ++j)
                err = std::max(err, std::abs(s.at(i, j) - gmr::eval(f, gg.t(i), std::exp(gg.y(j)))));
        return err;
    };

    gmr::verify::Grid coarse = g;
    coarse.n_t = g.n_t / 2;
    coarse.n_y = g.n_y / 2;
    const double e_fine = solve_error(g);
    const double e_coarse = solve_error(coarse);
    const double order = std::log2(e_coarse / e_fine);

    bool ok = order >= 1.7 && order <= 2.3;
    if (cfg.contains("max_error_limit"))
        ok = ok && e_fine <= cfg.at("max_error_limit").get<double>();
    json out{{"max_error", e_fine}, {"max_error_coarse", e_coarse}, {"order", order},
             {"pass", ok}};
    std::printf("%s\n", out.dump(2).c_str());
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify_mc(const json& cfg) {
    gmr::SolutionFamily f;
    if (cfg.contains("family")) {
        f = gmr::solution_family_from_json(cfg.at("family"));
    } else {
        f.family = gmr::FamilyId::Inv1;
        f.params = gmr::ModelParams::symmetric(1.0, 1.0);
        f.c1 = 1.0;
        f.c2 = 0.0;
    }
    gmr::verify::McConfig mc;
    mc.n_paths = cfg.value("n_paths", 200000L);
    mc.n_steps = cfg.value("n_steps", 200);
    mc.horizon = cfg.value("delta", 0.05);
    mc.seed = cfg.value("seed", 42UL);
    mc.antithetic = cfg.value("antithetic", false);
    const double t0 = cfg.value("t0", 0.5);
    const double x0 = cfg.value("x0", 1.0);

    const auto rep = gmr::verify::mc_semigroup_check(f.params, gmr::as_solution(f), t0,
                                                     mc.horizon, x0, mc);
    json out = gmr::to_json(rep);
    out["kernels"] = gmr::kernels::active_kernels().name;
    out["pass"] = std::abs(rep.z) <= 3.0;
    std::printf("%s\n", out.dump(2).c_str());
    return std::abs(rep.z) <= 3.0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry toolkit for the geometric mean-reversion pricing equation"};
    app.require_subcommand(1);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a catalog solution at (t, x)");
    FamilyArgs eval_fa;
    eval_fa.add_to(*eval_cmd);
    double eval_t = 1.0, eval_x = 1.0;
    eval_cmd->add_option("--t", eval_t, "time")->required();
    eval_cmd->add_option("--x", eval_x, "state")->required();

    // classify
    auto* cls_cmd = app.add_subcommand(
        "classify", "reduce an algebra element to its optimal-system representative");
    std::string cls_json, cls_file;
    cls_cmd->add_option("--element-json", cls_json, "element as inline JSON");
    cls_cmd->add_option("--element-file", cls_file, "element JSON file");

    // transform
    auto* tr_cmd = app.add_subcommand(
        "transform", "apply a one-parameter symmetry map to a point or a solution");
    FamilyArgs tr_fa;
    tr_fa.add_to(*tr_cmd);
    int tr_g = 1;
    double tr_eps = 0.0, tr_tol = 1e-4;
    std::optional<double> tr_t, tr_x, tr_u;
    std::string tr_out;
    bool tr_check = false;
    GridArgs tr_grid;
    tr_grid.add_to(*tr_cmd);
    tr_cmd->add_option("--g", tr_g, "generator index 1..6")->required();
    tr_cmd->add_option("--eps", tr_eps, "group parameter")->required();
    tr_cmd->add_option("--t", tr_t, "time coordinate");
    tr_cmd->add_option("--x", tr_x, "state coordinate");
    tr_cmd->add_option("--u", tr_u, "value coordinate (point mode)");
    tr_cmd->add_option("--out", tr_out, "write transformed surface CSV here");
    tr_cmd->add_flag("--check", tr_check, "residual-check the transformed solution");
    tr_cmd->add_option("--tol", tr_tol, "residual gate for --check");

    // figure
    auto* fig_cmd = app.add_subcommand("figure", "emit figure surface data as CSV");
    FamilyArgs fig_fa;
    fig_fa.add_to(*fig_cmd);
    GridArgs fig_grid;
    fig_grid.add_to(*fig_cmd);
    int fig_id = 1;
    std::string fig_sub = "a", fig_out;
    fig_cmd->add_option("--figure", fig_id, "figure id 1..7")->required();
    fig_cmd->add_option("--sub", fig_sub, "subfigure a|b|c (default a)");
    fig_cmd->add_option("--out", fig_out, "output CSV path")->required();

    // verify
    auto* ver_cmd = app.add_subcommand(
        "verify", "run a verification engine: residual, fd or mc");
    std::string ver_kind, ver_cfg_file, ver_cfg_json;
    ver_cmd->add_option("kind", ver_kind, "residual | fd | mc")->required();
    ver_cmd->add_option("--config", ver_cfg_file, "config JSON file");
    ver_cmd->add_option("--config-json", ver_cfg_json, "inline config JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(eval_fa, eval_t, eval_x);
        if (cls_cmd->parsed()) return cmd_classify(cls_json, cls_file);
        if (tr_cmd->parsed())
            return cmd_transform(tr_g, tr_eps, tr_fa, tr_t, tr_x, tr_u, tr_out, tr_check,
                                 tr_tol, tr_grid);
        if (fig_cmd->parsed()) {
            if (fig_sub.size() != 1) throw gmr::domain_error("subfigure must be a, b or c");
            return cmd_figure(fig_id, fig_sub[0], fig_fa, fig_grid, fig_out);
        }
        if (ver_cmd->parsed()) {
            json cfg = json::object();
            if (!ver_cfg_file.empty() || !ver_cfg_json.empty())
                cfg = load_json(ver_cfg_json, ver_cfg_file);
            if (ver_kind == "residual") return cmd_verify_residual(cfg);
            if (ver_kind == "fd") return cmd_verify_fd(cfg);
            if (ver_kind == "mc") return cmd_verify_mc(cfg);
            throw gmr::domain_error("verify kind must be residual, fd or mc");
        }
    } catch (const gmr::io_error& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const gmr::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return kExitDomain;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "bad json: %s\n", e.what());
        return kExitDomain;
    }
    return kExitUsage;
}
