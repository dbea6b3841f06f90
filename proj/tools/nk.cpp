// nk: command-line front door for the neutral Kahler geometry kernels.
//
// Subcommands: classify-plane, beta, verify, curvature, export-figure.
// Exit codes: 0 success; 1 failing verify check; 2 malformed input;
// 3 domain violation / rank-deficient input.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nk/curvature.hpp"
#include "nk/export_doc.hpp"
#include "nk/flat.hpp"
#include "nk/geodesic_spaces.hpp"
#include "nk/tn_bundle.hpp"
#include "nk/verify.hpp"

using nlohmann::ordered_json;
using namespace nk;

namespace {

struct RunConfig {
    std::uint64_t seed = 7;
    double null_tol = tol::null_tol;
    double class_tol = tol::class_tol;
    double fd_tol = tol::fd_tol;
    int grid_n = 50, grid_m = 50;
    std::string out_path;
    std::string export_path;
};

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    ordered_json j;
    in >> j;
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("null_tol")) cfg.null_tol = j["null_tol"].get<double>();
    if (j.contains("class_tol")) cfg.class_tol = j["class_tol"].get<double>();
    if (j.contains("fd_tol")) cfg.fd_tol = j["fd_tol"].get<double>();
    if (j.contains("grid")) {
        cfg.grid_n = j["grid"][0].get<int>();
        cfg.grid_m = j["grid"].size() > 1 ? j["grid"][1].get<int>() : cfg.grid_n;
    }
    if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
    if (j.contains("export")) cfg.export_path = j["export"].get<std::string>();
}

void apply_env_seed(RunConfig& cfg) {
    if (const char* s = std::getenv("NK_SEED")) cfg.seed = std::strtoull(s, nullptr, 10);
}

void parse_grid_spec(const std::string& spec, RunConfig& cfg) {
    auto x = spec.find('x');
    if (x == std::string::npos) {
        cfg.grid_n = cfg.grid_m = std::stoi(spec);
    } else {
        cfg.grid_n = std::stoi(spec.substr(0, x));
        cfg.grid_m = std::stoi(spec.substr(x + 1));
    }
    if (cfg.grid_n < 2 || cfg.grid_m < 2)
        throw CLI::ValidationError("--grid", "grid must be at least 2x2");
}

void write_json(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << j.dump(2) << "\n";
}

// --- classify-plane ---------------------------------------------------------------

int cmd_classify_plane(const std::vector<double>& comps, const std::string& basis_name,
                       const RunConfig& cfg) {
    Basis basis = basis_name == "double-null" ? Basis::double_null : Basis::coordinate;
    Vec4 v(comps[0], comps[1], comps[2], comps[3], basis);
    Vec4 w(comps[4], comps[5], comps[6], comps[7], basis);
    Plane22 p(v, w);  // throws rank_deficient -> exit 3
    bool null = flat::is_totally_null(p, cfg.null_tol);
    auto rep = flat::classify_plane(p, cfg.null_tol);
    std::printf("totally_null: %s\n", null ? "true" : "false");
    std::printf("class: %s\n", flat::to_string(rep.cls));
    std::printf("sd_residual: %.5e\n", rep.sd_residual);
    std::printf("asd_residual: %.5e\n", rep.asd_residual);
    if (!cfg.out_path.empty()) {
        ordered_json j;
        j["totally_null"] = null;
        j["class"] = flat::to_string(rep.cls);
        j["sd_residual"] = rep.sd_residual;
        j["asd_residual"] = rep.asd_residual;
        write_json(cfg.out_path, j);
    }
    return 0;
}

// --- beta -------------------------------------------------------------------------

struct BetaOptions {
    std::string space;
    double c0 = 0, c1 = 1;
    double xi0_re = 0, xi0_im = 0, eta0_re = 0, eta0_im = 0;
    std::optional<double> s0, s1, t0, t1;
    int arcs = 24;
};

tn::Grid default_grid(const std::string& space, const BetaOptions& o, const RunConfig& cfg) {
    double s0, s1, t0, t1;
    if (space == "tn-hyperbolic") {
        s0 = -0.5;
        s1 = 0.5;
        t0 = -1;
        t1 = 1;
    } else if (space == "lh3-torus") {
        s0 = 0.4;
        s1 = 1.2;
        t0 = 0.3;
        t1 = 1.1;
    } else if (space == "lh3-lh2") {
        s0 = 0.2;
        s1 = 2.0;
        t0 = 0.2;
        t1 = 2.0;
    } else {
        s0 = -1;
        s1 = 1;
        t0 = -1;
        t1 = 1;
    }
    return {o.s0.value_or(s0), o.s1.value_or(s1), cfg.grid_n,
            o.t0.value_or(t0), o.t1.value_or(t1), cfg.grid_m};
}

expo::ExportDocument lh3_figure(const BetaOptions& o, const tn::Grid& grid) {
    expo::ExportDocument doc;
    auto circle_from = [&](const std::string& name, const std::function<lh3::S2Point(double)>& f,
                           double a, double b,
                           std::vector<std::pair<std::string, std::string>> md) {
        expo::ExportObject obj;
        obj.kind = "circle";
        obj.metadata = std::move(md);
        obj.metadata.emplace_back("name", name);
        const int n = 256;
        for (int i = 0; i < n; ++i) {
            double t = a + (b - a) * i / (n - 1);
            obj.coordinates.push_back(f(t).p);
        }
        doc.objects.push_back(std::move(obj));
    };
    char buf[64];
    if (o.space == "lh3-torus") {
        auto tc = lh3::torus_circles(o.c1);
        std::snprintf(buf, sizeof buf, "%.17g", o.c1);
        circle_from("endpoint-circle-1",
                    [&](double v) { return lh3::stereographic(tc.mu1(v)); }, 0.02,
                    2 * M_PI - 0.02, {{"plane", "y + C1 (z - 1) = 0"}, {"C1", buf}});
        circle_from("endpoint-circle-2",
                    [&](double u) { return lh3::antipode(lh3::stereographic(tc.mu2(u))); }, 0.05,
                    M_PI - 0.05,
                    {{"plane", "antipodal image of y + C1 (z + 1) = 0"}, {"C1", buf}});
    } else {
        cx rot = std::polar(1.0, -o.c0);
        std::snprintf(buf, sizeof buf, "%.17g", o.c0);
        circle_from("endpoint-circle-1",
                    [&](double l) { return lh3::stereographic(l * rot); }, 0.01, 40.0,
                    {{"kind", "lh2 boundary"}, {"C0", buf}});
        circle_from("endpoint-circle-2",
                    [&](double l) { return lh3::antipode(lh3::stereographic(l * rot)); }, 0.01,
                    40.0, {{"kind", "lh2 boundary"}, {"C0", buf}});
    }
    auto surf = lh3::beta_surface_h3(o.space == "lh3-torus" ? lh3::BetaParamsH3::torus(o.c1)
                                                            : lh3::BetaParamsH3::lh2(o.c0));
    for (int k = 0; k < o.arcs; ++k) {
        double u = grid.s0 + (grid.s1 - grid.s0) * (k % 6) / 5.0;
        double v = grid.t0 + (grid.t1 - grid.t0) * (k / 6 % 4) / 3.0;
        u += 0.013 * k;  // spread deterministic samples
        if (u > grid.s1) u = grid.s0 + (u - grid.s1);
        expo::ExportObject arc;
        arc.kind = "polyline";
        auto pts = lh3::ball_geodesic(surf.f(u, v), 64);
        arc.coordinates.assign(pts.begin(), pts.end());
        arc.metadata.emplace_back("name", "geodesic-" + std::to_string(k));
        doc.objects.push_back(std::move(arc));
    }
    return doc;
}

int cmd_beta(const BetaOptions& o, const RunConfig& cfg) {
    tn::Grid grid = default_grid(o.space, o, cfg);
    tn::ClassifyResult res{};
    if (o.space == "tn-flat" || o.space == "tn-sphere" || o.space == "tn-hyperbolic") {
        tn::ConformalGeometry geom = o.space == "tn-flat" ? tn::ConformalGeometry::flat_plane()
                                     : o.space == "tn-sphere"
                                         ? tn::ConformalGeometry::sphere()
                                         : tn::ConformalGeometry::hyperbolic();
        tn::BetaParamsTN par{o.c0, cx(o.xi0_re, o.xi0_im), cx(o.eta0_re, o.eta0_im)};
        auto surf = tn::beta_surface_tn(geom, par);
        res = tn::classify_surface(geom, surf, grid, cfg.class_tol);
    } else {
        auto surf = lh3::beta_surface_h3(o.space == "lh3-torus" ? lh3::BetaParamsH3::torus(o.c1)
                                                                : lh3::BetaParamsH3::lh2(o.c0));
        res = lh3::classify_surface(surf, grid, cfg.class_tol);
        if (!cfg.export_path.empty()) {
            auto doc = lh3_figure(o, grid);
            doc.write(cfg.export_path);
            std::printf("export: %s\n", cfg.export_path.c_str());
        }
    }
    std::printf("space: %s\n", o.space.c_str());
    std::printf("grid: %dx%d\n", grid.ns, grid.nt);
    std::printf("max_sd_residual: %.5e\n", res.max_sd);
    std::printf("max_asd_residual: %.5e\n", res.max_asd);
    std::printf("verdict: %s\n", tn::to_string(res.cls));
    if (!cfg.out_path.empty()) {
        ordered_json j;
        j["space"] = o.space;
        j["grid"] = {grid.ns, grid.nt};
        j["max_sd_residual"] = res.max_sd;
        j["max_asd_residual"] = res.max_asd;
        j["verdict"] = tn::to_string(res.cls);
        write_json(cfg.out_path, j);
    }
    return 0;
}

// --- verify -----------------------------------------------------------------------

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
    verify::VerifyConfig vc{cfg.seed, cfg.null_tol, cfg.class_tol, cfg.fd_tol};
    auto checks = verify::run_suite(suite, vc);
    int failed = 0;
    for (const auto& c : checks) {
        std::printf("[%s] %-34s residual %.5e  tol %.5e%s%s\n", c.passed ? "PASS" : "FAIL",
                    c.name.c_str(), c.residual, c.tolerance, c.note.empty() ? "" : "  -- ",
                    c.note.c_str());
        if (!c.passed) ++failed;
    }
    std::printf("suite: %s  checks: %zu  failed: %d  seed: %llu\n", suite.c_str(), checks.size(),
                failed, static_cast<unsigned long long>(cfg.seed));
    if (!cfg.out_path.empty()) {
        ordered_json j;
        j["suite"] = suite;
        j["seed"] = cfg.seed;
        j["checks"] = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["passed"] = c.passed;
            cj["residual"] = c.residual;
            cj["tolerance"] = c.tolerance;
            if (!c.note.empty()) cj["note"] = c.note;
            j["checks"].push_back(cj);
        }
        j["passed"] = failed == 0;
        write_json(cfg.out_path, j);
    }
    return failed == 0 ? 0 : 1;
}

// --- curvature ---------------------------------------------------------------------

int cmd_curvature(const std::string& space, const std::vector<double>& pt, const RunConfig& cfg) {
    curv::MetricField field;
    if (space == "tn-flat")
        field = curv::tn_metric_field(tn::ConformalGeometry::flat_plane());
    else if (space == "tn-sphere")
        field = curv::tn_metric_field(tn::ConformalGeometry::sphere());
    else if (space == "tn-hyperbolic")
        field = curv::tn_metric_field(tn::ConformalGeometry::hyperbolic());
    else
        field = curv::lh3_metric_field();
    curv::Point4 x{pt[0], pt[1], pt[2], pt[3]};
    auto rep = curv::riemann_report(field, x);
    std::printf("space: %s\n", space.c_str());
    std::printf("weyl_plus_norm: %.5e\n", rep.weyl_plus_norm);
    std::printf("weyl_minus_norm: %.5e\n", rep.weyl_minus_norm);
    std::printf("scalar: %.5e\n", rep.scalar);
    std::printf("bianchi_residual: %.5e\n", rep.bianchi_residual);
    if (!cfg.out_path.empty()) {
        ordered_json j;
        j["space"] = space;
        j["point"] = {x[0], x[1], x[2], x[3]};
        j["weyl_plus_norm"] = rep.weyl_plus_norm;
        j["weyl_minus_norm"] = rep.weyl_minus_norm;
        j["scalar"] = rep.scalar;
        j["ricci"] = ordered_json::array();
        for (auto& row : rep.ricci) j["ricci"].push_back({row[0], row[1], row[2], row[3]});
        j["bianchi_residual"] = rep.bianchi_residual;
        j["pair_symmetry_residual"] = rep.pair_symmetry_residual;
        write_json(cfg.out_path, j);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification kernels for neutral Kahler geometry"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags override)");

    // classify-plane
    auto* cp = app.add_subcommand("classify-plane",
                                  "classify span{v,w} as alpha / beta / not_null");
    std::vector<double> comps;
    std::string basis_name = "coordinate";
    cp->add_option("components", comps, "v1 v2 v3 v4 w1 w2 w3 w4")->expected(8)->required();
    cp->add_option("--basis", basis_name, "coordinate | double-null")
        ->check(CLI::IsMember({"coordinate", "double-null"}));
    cp->add_option("--null-tol", cfg.null_tol, "nullity tolerance");
    cp->add_option("--out", cfg.out_path, "JSON report path");

    // beta
    auto* cb = app.add_subcommand("beta", "generate a beta surface and report residuals");
    BetaOptions bo;
    cb->add_option("--space", bo.space, "tn-flat | tn-sphere | tn-hyperbolic | lh3-torus | lh3-lh2")
        ->required()
        ->check(CLI::IsMember({"tn-flat", "tn-sphere", "tn-hyperbolic", "lh3-torus", "lh3-lh2"}));
    cb->add_option("--c0", bo.c0, "direction angle / rotation");
    cb->add_option("--c1", bo.c1, "torus constant (nonzero)");
    cb->add_option("--xi0-re", bo.xi0_re);
    cb->add_option("--xi0-im", bo.xi0_im);
    cb->add_option("--eta0-re", bo.eta0_re);
    cb->add_option("--eta0-im", bo.eta0_im);
    std::string grid_spec;
    cb->add_option("--grid", grid_spec, "N or NxM sample grid");
    double s0v = 0, s1v = 0, t0v = 0, t1v = 0;
    auto* s0o = cb->add_option("--s0", s0v);
    auto* s1o = cb->add_option("--s1", s1v);
    auto* t0o = cb->add_option("--t0", t0v);
    auto* t1o = cb->add_option("--t1", t1v);
    cb->add_option("--class-tol", cfg.class_tol, "classification tolerance");
    cb->add_option("--export", cfg.export_path, "ExportDocument path (lh3 spaces)");
    cb->add_option("--out", cfg.out_path, "JSON report path");

    // verify
    auto* cv = app.add_subcommand("verify", "run the invariant suites");
    std::string suite = "all";
    cv->add_option("suite", suite, "flat | tn | lh3 | curvature | all")
        ->check(CLI::IsMember({"flat", "tn", "lh3", "curvature", "all"}));
    auto* seed_opt = cv->add_option("--seed", cfg.seed, "PRNG seed");
    cv->add_option("--null-tol", cfg.null_tol);
    cv->add_option("--class-tol", cfg.class_tol);
    cv->add_option("--fd-tol", cfg.fd_tol);
    cv->add_option("--out", cfg.out_path, "JSON report path");

    // curvature
    auto* cc = app.add_subcommand("curvature", "finite-difference curvature report at a point");
    std::string cspace;
    std::vector<double> point;
    cc->add_option("--space", cspace, "tn-flat | tn-sphere | tn-hyperbolic | lh3")
        ->required()
        ->check(CLI::IsMember({"tn-flat", "tn-sphere", "tn-hyperbolic", "lh3"}));
    cc->add_option("point", point, "x1 x2 x3 x4")->expected(4)->required();
    cc->add_option("--out", cfg.out_path, "JSON report path");

    // export-figure: alias of beta --export for lh3
    auto* ce = app.add_subcommand("export-figure", "export the L(H^3) figure (beta --export)");
    BetaOptions eo;
    eo.space = "lh3-torus";
    ce->add_option("--space", eo.space, "lh3-torus | lh3-lh2")
        ->check(CLI::IsMember({"lh3-torus", "lh3-lh2"}));
    ce->add_option("--c0", eo.c0);
    ce->add_option("--c1", eo.c1);
    ce->add_option("--arcs", eo.arcs, "number of geodesic arcs");
    std::string export_path;
    ce->add_option("--export", export_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }

    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        apply_env_seed(cfg);
        if (seed_opt->count()) cfg.seed = seed_opt->as<std::uint64_t>();
        if (!grid_spec.empty()) parse_grid_spec(grid_spec, cfg);
        if (s0o->count()) bo.s0 = s0v;
        if (s1o->count()) bo.s1 = s1v;
        if (t0o->count()) bo.t0 = t0v;
        if (t1o->count()) bo.t1 = t1v;

        if (cp->parsed()) return cmd_classify_plane(comps, basis_name, cfg);
        if (cb->parsed()) return cmd_beta(bo, cfg);
        if (cv->parsed()) return cmd_verify(suite, cfg);
        if (cc->parsed()) return cmd_curvature(cspace, point, cfg);
        if (ce->parsed()) {
            cfg.export_path = export_path;
            return cmd_beta(eo, cfg);
        }
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const rank_deficient& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const domain_violation& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const basis_mismatch& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
