// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per (sub)criterion.  Exits nonzero if any line fails.
//
// Criterion 12 contains two sub-checks that are provably unattainable as
// stated (they contradict the beta-surface property verified by criterion 7);
// they are run faithfully and reported as failures, with the corrected
// geometry checked alongside.  See README.md and the review notes.

#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "nk/verify.hpp"

using namespace nk;

namespace {

int g_failed = 0;
int g_total = 0;

void line(const std::string& id, bool pass, const std::string& text) {
    ++g_total;
    if (!pass) ++g_failed;
    std::printf("[%s] %-4s %s\n", pass ? "PASS" : "FAIL", id.c_str(), text.c_str());
}

void note(const std::string& id, const std::string& text) {
    std::printf("[note] %-4s %s\n", id.c_str(), text.c_str());
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", x);
    return buf;
}

void from_check(const std::map<std::string, verify::Check>& idx, const std::string& id,
                const std::string& name, const std::string& text) {
    const auto& c = idx.at(name);
    line(id, c.passed, text + " (residual " + fmt(c.residual) + " <= " + fmt(c.tolerance) +
                           (c.note.empty() ? ")" : "; " + c.note + ")"));
}

// independent oracle: finite-difference covariant derivative of the unit
// tangent along the curve, projected on the unit normal
double oracle_geodesic_curvature(const tn::ConformalGeometry& g, const tn::Curve2& c, double s) {
    auto unit_tangent = [&](double sv) {
        cx v = c.d1(sv);
        double vg = std::exp(g.u(c.xi(sv))) * std::abs(v);
        return std::array<double, 2>{v.real() / vg, v.imag() / vg};
    };
    double h = 1e-6 * (1.0 + std::abs(s));
    auto tp = unit_tangent(s + h), tm = unit_tangent(s - h);
    std::array<double, 2> dT{(tp[0] - tm[0]) / (2 * h), (tp[1] - tm[1]) / (2 * h)};
    auto T = unit_tangent(s);
    cx pos = c.xi(s), v = c.d1(s);
    double hu = 1e-6;
    double ux = (g.u(pos + cx(hu, 0)) - g.u(pos - cx(hu, 0))) / (2 * hu);
    double uy = (g.u(pos + cx(0, hu)) - g.u(pos - cx(0, hu))) / (2 * hu);
    std::array<double, 2> acc{
        dT[0] + ux * v.real() * T[0] + uy * (v.real() * T[1] + v.imag() * T[0]) -
            ux * v.imag() * T[1],
        dT[1] - uy * v.real() * T[0] + ux * (v.real() * T[1] + v.imag() * T[0]) +
            uy * v.imag() * T[1]};
    double vg = std::exp(g.u(pos)) * std::abs(v);
    std::array<double, 2> nabla{acc[0] / vg, acc[1] / vg};
    std::array<double, 2> N{-T[1], T[0]};
    return std::exp(2.0 * g.u(pos)) * (N[0] * nabla[0] + N[1] * nabla[1]);
}

void criterion7_explicit_surfaces() {
    // the three closed-form example surfaces, with analytic Jacobians
    auto sph = tn::ConformalGeometry::sphere();
    tn::SurfaceMap sphere_disp;
    sphere_disp.analytic_jacobian = true;
    sphere_disp.f = [](double s, double t) {
        return tn::PointTN{cx(s, 0), std::pow(1 + s * s, 2) * cx(t, 0)};
    };
    sphere_disp.jacobian = [](double s, double t) {
        return std::make_pair(tn::TangentTN{1, 4 * s * (1 + s * s) * t},
                              tn::TangentTN{0, std::pow(1 + s * s, 2)});
    };
    auto rs = tn::classify_surface(sph, sphere_disp, tn::Grid{-1, 1, 50, -1, 1, 50});

    auto hyp = tn::ConformalGeometry::hyperbolic();
    tn::SurfaceMap hyp_disp;
    hyp_disp.analytic_jacobian = true;
    hyp_disp.f = [](double s, double t) {
        return tn::PointTN{cx(s, 0), std::pow(1 - s * s, 2) / 4.0 * cx(t, 0)};
    };
    hyp_disp.jacobian = [](double s, double t) {
        return std::make_pair(tn::TangentTN{1, -s * (1 - s * s) * t},
                              tn::TangentTN{0, std::pow(1 - s * s, 2) / 4.0});
    };
    auto rh = tn::classify_surface(hyp, hyp_disp, tn::Grid{-0.6, 0.6, 50, -1, 1, 50});

    auto flat = tn::ConformalGeometry::flat_plane();
    auto fs = tn::beta_surface_tn(flat, {1.2, cx(0.4, -0.7), cx(-0.3, 0.9)});
    auto rf = tn::classify_surface(flat, fs, tn::Grid{-1, 1, 50, -1, 1, 50});

    double asd = std::max({rs.max_asd, rh.max_asd, rf.max_asd});
    bool beta = rs.cls == tn::SurfaceClass::beta && rh.cls == tn::SurfaceClass::beta &&
                rf.cls == tn::SurfaceClass::beta;
    line("7c", asd <= 1e-9 && beta,
         "explicit example surfaces (flat general, sphere, hyperbolic) are beta (max ASD " +
             fmt(asd) + " <= 1.00000e-09)");
}

void criterion10() {
    auto sph = tn::ConformalGeometry::sphere();
    double worst_std = 0, worst_oracle = 0, ratio_lo = 1e300, ratio_hi = -1e300;
    for (double C1 : {0.0, 0.5, 1.0, 2.0}) {
        tn::Curve2 curve{[C1](double s) { return cx(s, C1); }, [](double) { return cx(1, 0); },
                         {}};
        double sum = 0, sum2 = 0;
        const int n = 200;
        for (int i = 0; i < n; ++i) {
            double s = -2.0 + 4.0 * i / (n - 1);
            double k = tn::geodesic_curvature(sph, curve, s, tn::CurvatureConvention::unit_frame);
            sum += k;
            sum2 += k * k;
            if (i % 40 == 0)
                worst_oracle =
                    std::max(worst_oracle, std::abs(k - oracle_geodesic_curvature(sph, curve, s)));
            if (C1 > 0) {
                double kp =
                    tn::geodesic_curvature(sph, curve, s, tn::CurvatureConvention::paper_frame);
                ratio_lo = std::min(ratio_lo, kp / k);
                ratio_hi = std::max(ratio_hi, kp / k);
            }
        }
        double mean = sum / n;
        double sd = std::sqrt(std::max(0.0, sum2 / n - mean * mean));
        worst_std = std::max(worst_std, sd / (1.0 + std::abs(mean)));
    }
    line("10a", worst_std <= 1e-8,
         "unit-frame curvature of xi = s + iC1 constant, C1 in {0,1/2,1,2} (std " + fmt(worst_std) +
             " <= 1.00000e-08)");
    line("10b", worst_oracle <= 1e-6,
         "matches the finite-difference covariant-derivative oracle (max dev " + fmt(worst_oracle) +
             " <= 1.00000e-06)");
    double spread = ratio_hi - ratio_lo;
    double ratio = 0.5 * (ratio_hi + ratio_lo);
    line("10c", spread <= 1e-10,
         "paper_frame/unit_frame is the single constant " + fmt(ratio) + " (spread " + fmt(spread) +
             ")");
    note("10c", "reference value sqrt(2) C1 corresponds to ratio " + fmt(std::sqrt(2.0)) +
                    "; measured ratio is 1/(2 sqrt 2) = " + fmt(ratio) +
                    " - discrepancy factor 4, recorded not hidden");
}

void criterion12() {
    const double c1 = 1.0;
    auto tc = lh3::torus_circles(c1);
    const int n = 1000;

    double inc1 = 0, inc2_stated = 0, inc2_actual = 0;
    for (int k = 0; k < n; ++k) {
        double v = 0.03 + (2 * M_PI - 0.06) * k / (n - 1);
        inc1 = std::max(inc1, tc.plane_mu1.residual(lh3::stereographic(tc.mu1(v))));
        if (std::abs(std::sin(v)) > 0.05) {
            auto q = lh3::stereographic(tc.mu2(v));
            inc2_actual = std::max(inc2_actual, tc.plane_mu2.residual(q));
            inc2_stated = std::max(inc2_stated, tc.plane_reflected.residual(q));
        }
    }
    line("12a", inc1 <= 1e-12,
         "sigma(mu1) incident on y + C1(z-1) = 0 (residual " + fmt(inc1) + " <= 1.00000e-12)");
    line("12b", inc2_stated <= 1e-12,
         "as stated: sigma(mu2) on y - C1(z+1) = 0 (residual " + fmt(inc2_stated) + ")");
    note("12b", "the beta torus forces sigma(mu2) onto y + C1(z+1) = 0 instead (residual " +
                    fmt(inc2_actual) + "); the stated plane differs by a y-flip");

    // reflection property: compare the point set of the z-reflected first
    // circle with the actual second circle
    double refl_stated = 0, antip_actual = 0;
    for (int k = 0; k < n; ++k) {
        double v = 0.03 + (2 * M_PI - 0.06) * k / (n - 1);
        auto q = lh3::stereographic(tc.mu1(v));
        auto qr = q;
        qr.p[2] = -qr.p[2];
        refl_stated = std::max(refl_stated, tc.plane_mu2.residual(qr));
        antip_actual = std::max(antip_actual, tc.plane_mu2.residual(lh3::antipode(q)));
    }
    line("12c", refl_stated <= 1e-12,
         "as stated: circle 2 is the z-reflection of circle 1 (residual " + fmt(refl_stated) +
             ")");
    note("12c", "the actual relation is antipodal: circle 2 = -circle 1 (residual " +
                    fmt(antip_actual) + "); the z-reflection of circle 1 lies in y - C1(z+1) = 0");

    double radii = std::abs(tc.plane_mu1.circle_radius() - tc.plane_mu2.circle_radius());
    line("12d", radii <= 1e-12, "exported circles have equal radii 1/sqrt(1+C1^2) (diff " +
                                    fmt(radii) + " <= 1.00000e-12)");

    // exported boundary circles (geodesic endpoint loci): e1 over mu1, e2
    // over mu2 through the endpoint convention.  Unique-contact check as
    // stated: minimal pairwise distance zero at a unique parameter pair,
    // second minimum >= 0.1.
    const int m = 400;
    std::vector<lh3::S2Point> e1s, e2s;
    for (int k = 0; k < m; ++k) {
        double v = 0.03 + (2 * M_PI - 0.06) * k / (m - 1);
        e1s.push_back(lh3::stereographic(tc.mu1(v)));
        double u = 0.05 + (M_PI - 0.1) * k / (m - 1);
        e2s.push_back(lh3::antipode(lh3::stereographic(tc.mu2(u))));
    }
    double best = 1e300, second = 1e300;
    int bi = -1, bj = -1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double d = std::hypot(e1s[i].p[0] - e2s[j].p[0], e1s[i].p[1] - e2s[j].p[1],
                                  e1s[i].p[2] - e2s[j].p[2]);
            if (d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (std::abs(i - bi) < 20 && std::abs(j - bj) < 20) continue;
            double d = std::hypot(e1s[i].p[0] - e2s[j].p[0], e1s[i].p[1] - e2s[j].p[1],
                                  e1s[i].p[2] - e2s[j].p[2]);
            second = std::min(second, d);
        }
    line("12e", best <= 1e-6 && second >= 0.1,
         "as stated: endpoint circles touch at exactly one point (min " + fmt(best) +
             ", second minimum " + fmt(second) + " >= 1.00000e-01)");
    note("12e", "the two endpoint circles of the beta torus coincide (all geodesics start and "
                "end on one boundary circle), so the distance-zero locus is a curve");
}

void criterion13() {
    const char* bin = std::getenv("NK_BIN");
    if (!bin) {
        line("13", false, "NK_BIN not set; cannot drive the CLI");
        return;
    }
    auto capture = [&](const std::string& args, int& code) {
        std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
        FILE* p = popen(cmd.c_str(), "r");
        std::string out;
        char buf[4096];
        size_t n;
        while (p && (n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
        int status = p ? pclose(p) : -1;
        code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return out;
    };
    int c1, c2;
    std::string a = capture("verify all --seed 7", c1);
    std::string b = capture("verify all --seed 7", c2);
    line("13a", c1 == 0 && c2 == 0 && !a.empty() && a == b,
         "nk verify all --seed 7 twice produces byte-identical reports, exit 0");

    int code;
    bool ok = true;
    capture("classify-plane 1 0 1 0 0 -1 0", code);
    ok = ok && code == 2;
    capture("classify-plane 1 2 3 4 2 4 6 8", code);
    ok = ok && code == 3;
    capture("beta --space lh3-torus --c1 1 --s0 -0.5 --s1 0.5 --grid 9", code);
    ok = ok && code == 3;
    capture("curvature --space tn-hyperbolic 2 0 0 0", code);
    ok = ok && code == 3;
    capture("frobnicate", code);
    ok = ok && code == 2;
    line("13b", ok, "exit codes follow the documented contract under malformed inputs");
}

}  // namespace

int main() {
    verify::VerifyConfig cfg;
    cfg.seed = 7;

    std::map<std::string, verify::Check> idx;
    for (const std::string suite : {"flat", "tn", "lh3", "curvature"})
        for (auto& c : verify::run_suite(suite, cfg)) idx[c.name] = c;

    from_check(idx, "1a", "flat.hodge_table", "hodge star reproduces the five listed mappings");
    from_check(idx, "1b", "flat.hodge_involution", "involution residual on 10^4 random forms");
    from_check(idx, "2", "flat.sd_asd_decomposition",
               "w = w+ + w- with +-1 eigenvector residuals; Omega pure SD, Omega' pure ASD");
    from_check(idx, "3a", "flat.prop2_classification",
               "10^3 family planes under GL(2) classify by epsilon");
    from_check(idx, "3b", "flat.prop2_classes", "10^3 random non-null planes classify not_null");
    from_check(idx, "3c", "flat.prop2_route_agreement",
               "explicit-basis route agrees with hodge-star projection on every sample");
    from_check(idx, "4", "flat.prop3_equivalence",
               "alpha iff holomorphic-Lagrangian for (J,Omega); beta for (J',Omega')");
    from_check(idx, "5a", "tn.frame_identity",
               "TN frame identity at 10^3 samples across flat/sphere/hyperbolic");
    from_check(idx, "5b", "tn.u0_reduction", "u = 0 reduction agrees with the flat model");
    from_check(idx, "6a", "tn.sd_asd_eigenvectors",
               "TN SD/ASD bases are +-1 numeric-star eigenvectors at 100 points/geometry");
    from_check(idx, "6b", "lh3.sd_asd_eigenvectors",
               "L(H^3) SD/ASD bases are +-1 numeric-star eigenvectors at 100 points");
    from_check(idx, "7a", "tn.beta_asd_residual",
               "TN beta surfaces: max ASD residual on 50x50 grids, analytic Jacobians");
    from_check(idx, "7b", "tn.beta_sd_floor", "TN beta surfaces: max SD residual >= 1e-3");
    criterion7_explicit_surfaces();
    from_check(idx, "7d", "lh3.beta_asd_residual",
               "L(H^3) torus and L(H^2) surfaces: max ASD residual on 50x50 admissible grids");
    from_check(idx, "7e", "lh3.beta_sd_floor", "L(H^3) beta surfaces: max SD residual >= 1e-3");
    from_check(idx, "7f", "tn.fibre_alpha", "fibres xi = const give SD residuals <= 1e-12");
    note("7", "the verbatim fibre scaling e^{-2u} with complex offsets over curved base "
              "geometries is not totally null; the implemented beta family carries the normal "
              "offset with weight e^{-u} over a geodesic base (see README)");
    from_check(idx, "8a", "lh3.phi_roundtrip", "Phi round trip <= 1e-12 on 10^4 random inputs");
    from_check(idx, "8b", "lh3.phi_affine_lines", "r-parametrized images are affine lines");
    from_check(idx, "9", "lh3.plane_family_planarity",
               "Im(z e^{-iC0}) <= 1e-12 over 20^3 samples for 5 values of C0");
    criterion10();
    from_check(idx, "11a", "curv.tn_sphere_asd", "TN sphere weyl+ <= 1e-5 at 25 random points");
    from_check(idx, "11b", "curv.tn_hyperbolic_asd",
               "TN hyperbolic weyl+ <= 1e-5 at 25 random points");
    from_check(idx, "11c", "curv.lh3_conformally_flat", "L(H^3) both weyl norms <= 1e-5");
    from_check(idx, "11d", "curv.flat_zero", "flat TN fully flat <= 1e-9");
    from_check(idx, "11e", "curv.weyl_component_crosscheck",
               "non-constant kappa: FD Weyl component = one global constant x closed form");
    criterion12();
    criterion13();

    std::printf("\nacceptance: %d/%d passed", g_total - g_failed, g_total);
    if (g_failed)
        std::printf(" (%d sub-criteria fail as stated; the corrected geometry passes and the "
                    "deviations are documented)",
                    g_failed);
    std::printf("\n");
    return g_failed == 0 ? 0 : 1;
}
