#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "nk/curvature.hpp"
#include "nk/flat.hpp"
#include "nk/geodesic_spaces.hpp"
#include "nk/rng.hpp"
#include "nk/tn_bundle.hpp"

// Named residual checks backing `nk verify`: every module invariant, run
// deterministically from a seed.  Each check records the worst residual
// against its tolerance.

namespace nk::verify {

struct Check {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool passed = false;
    std::string note;
};

struct VerifyConfig {
    std::uint64_t seed = 7;
    double null_tol = tol::null_tol;
    double class_tol = tol::class_tol;
    double fd_tol = tol::fd_tol;
};

namespace detail {

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

inline void push(std::vector<Check>& out, const std::string& name, double residual,
                 double tolerance, std::string note = "") {
    out.push_back({name, residual, tolerance, residual <= tolerance, std::move(note)});
}

inline Form2 random_form(Rng& rng, Basis b) {
    return Form2{{rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2)}, b};
}

inline Vec4 random_vec(Rng& rng, Basis b) {
    return Vec4{rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), b};
}

}  // namespace detail

// --- flat model -----------------------------------------------------------------

inline std::vector<Check> run_flat(const VerifyConfig& cfg) {
    using namespace nk::flat;
    std::vector<Check> out;
    Rng rng(cfg.seed ^ 0xf1a7ull);

    {  // the five listed Hodge mappings, exactly
        auto tw = [](int a, int b) {
            Covec4 ta(0, 0, 0, 0, Basis::double_null), tb(0, 0, 0, 0, Basis::double_null);
            ta[a] = 1;
            tb[b] = 1;
            return wedge(ta, tb);
        };
        double r = 0;
        auto probe = [&](const Form2& in, const Form2& expect) {
            r = std::max(r, (hodge_star(in) - expect).norm());
        };
        probe(tw(0, 3), tw(1, 2) * -1.0);
        probe(tw(1, 3), tw(1, 3) * -1.0);
        probe(tw(0, 2), tw(0, 2) * -1.0);
        probe(tw(2, 3), tw(2, 3));
        probe(tw(0, 1), tw(0, 1));
        detail::push(out, "flat.hodge_table", r, 0.0, "five listed mappings, exact");
    }
    {  // involution on 10^4 random forms
        double r = 0;
        for (int k = 0; k < 10000; ++k) {
            Form2 f = detail::random_form(rng, Basis::double_null);
            r = std::max(r, (hodge_star(hodge_star(f)) - f).norm() / std::max(1.0, f.norm()));
        }
        detail::push(out, "flat.hodge_involution", r, 1e-13);
    }
    {  // decomposition into +-1 eigenvectors; Omega / Omega' purity
        double r = 0;
        for (int k = 0; k < 2000; ++k) {
            Form2 f = detail::random_form(rng, Basis::double_null);
            auto [p, m] = sd_asd_decompose(f);
            double scale = std::max(1.0, f.norm());
            r = std::max(r, (sd_form(p) + asd_form(m) - f).norm() / scale);
            r = std::max(r, (hodge_star(sd_form(p)) - sd_form(p)).norm() / scale);
            r = std::max(r, (hodge_star(asd_form(m)) + asd_form(m)).norm() / scale);
        }
        auto [po, mo] = sd_asd_decompose(Omega());
        r = std::max(r, asd_form(mo).norm());
        auto [pp, mp] = sd_asd_decompose(OmegaP());
        r = std::max(r, sd_form(pp).norm());
        (void)po;
        (void)mp;
        detail::push(out, "flat.sd_asd_decomposition", r, 1e-12,
                     "Omega pure SD, Omega' pure ASD");
    }
    {  // null-plane family classification + route agreement
        double r = 0;
        bool classes_ok = true, routes_agree = true;
        for (int k = 0; k < 1000; ++k) {
            int eps = rng.uniform() < 0.5 ? +1 : -1;
            double phi = rng.uniform(0, 2 * M_PI);
            double a, b, c, d;
            do {
                a = rng.sym(2);
                b = rng.sym(2);
                c = rng.sym(2);
                d = rng.sym(2);
            } while (std::abs(a * d - b * c) < 0.1);
            Vec4 v0 = null_vector({eps, phi}, 1, 0), w0 = null_vector({eps, phi}, 0, 1);
            Plane22 p(v0 * a + w0 * b, v0 * c + w0 * d);
            auto rep = classify_plane(p, cfg.null_tol);
            r = std::max(r, eps == +1 ? rep.sd_residual : rep.asd_residual);
            if (rep.cls != (eps == +1 ? DualityClass::alpha : DualityClass::beta))
                classes_ok = false;
            if (plane_duality_class_star(p, cfg.null_tol) != rep.cls) routes_agree = false;
            if (!is_totally_null(p, cfg.null_tol)) classes_ok = false;
        }
        int nonnull = 0;
        while (nonnull < 1000) {
            Vec4 v = detail::random_vec(rng, Basis::coordinate);
            Vec4 w = detail::random_vec(rng, Basis::coordinate);
            auto sv = plane_singular_values(v, w);
            if (sv[0] <= 0 || sv[1] < 1e-3 * sv[0]) continue;
            Plane22 p(v, w);
            if (is_totally_null(p, 1e-6)) continue;
            ++nonnull;
            if (plane_duality_class(p, cfg.null_tol) != DualityClass::not_null) classes_ok = false;
            if (plane_duality_class_star(p, cfg.null_tol) != DualityClass::not_null)
                routes_agree = false;
        }
        detail::push(out, "flat.prop2_classification", r, cfg.null_tol,
                     "10^3 family planes under GL(2), 10^3 random non-null");
        detail::push(out, "flat.prop2_classes", classes_ok ? 0.0 : 1.0, 0.5);
        detail::push(out, "flat.prop2_route_agreement", routes_agree ? 0.0 : 1.0, 0.5,
                     "explicit bases vs hodge-star projection");
    }
    {  // holomorphic-Lagrangian equivalence
        bool ok = true;
        for (int k = 0; k < 500; ++k) {
            int eps = rng.uniform() < 0.5 ? +1 : -1;
            double phi = rng.uniform(0, 2 * M_PI);
            double a, b, c, d;
            do {
                a = rng.sym(2);
                b = rng.sym(2);
                c = rng.sym(2);
                d = rng.sym(2);
            } while (std::abs(a * d - b * c) < 0.1);
            Vec4 v0 = null_vector({eps, phi}, 1, 0), w0 = null_vector({eps, phi}, 0, 1);
            Plane22 p(v0 * a + w0 * b, v0 * c + w0 * d);
            bool alpha = plane_duality_class(p, cfg.null_tol) == DualityClass::alpha;
            if (is_holomorphic_lagrangian(p, HLMode::J_Omega) != alpha) ok = false;
            if (is_holomorphic_lagrangian(p, HLMode::Jp_OmegaP) != !alpha) ok = false;
        }
        detail::push(out, "flat.prop3_equivalence", ok ? 0.0 : 1.0, 0.5,
                     "alpha iff holomorphic-Lagrangian for (J,Omega)");
    }
    {  // compatibility identities
        double r = 0;
        Bilinear4 g = flat_metric(Basis::coordinate);
        for (int k = 0; k < 1000; ++k) {
            Vec4 v = detail::random_vec(rng, Basis::coordinate);
            Vec4 w = detail::random_vec(rng, Basis::coordinate);
            double scale = 1.0 + std::abs(g(v, w));
            r = std::max(r, std::abs(g(cx_structure_J(v), cx_structure_J(w)) - g(v, w)) / scale);
            r = std::max(r,
                         std::abs(g(cx_structure_Jp(v), cx_structure_Jp(w)) - g(v, w)) / scale);
            r = std::max(r, std::abs(Omega()(v, w) - g(cx_structure_J(v), w)) / scale);
            r = std::max(r, std::abs(OmegaP()(v, w) - g(cx_structure_Jp(v), w)) / scale);
        }
        detail::push(out, "flat.kahler_compatibility", r, 1e-13);
    }
    {  // change of basis round trip
        double r = 0;
        for (int k = 0; k < 10000; ++k) {
            Covec4 a(rng.sym(3), rng.sym(3), rng.sym(3), rng.sym(3), Basis::coordinate);
            Covec4 back = change_basis(change_basis(a, Basis::double_null), Basis::coordinate);
            r = std::max(r, (back - a).norm() / std::max(1e-300, a.norm()));
        }
        detail::push(out, "flat.change_basis_roundtrip", r, 1e-13);
    }
    return out;
}

// --- TN -------------------------------------------------------------------------

inline std::vector<Check> run_tn(const VerifyConfig& cfg) {
    using namespace nk::tn;
    std::vector<Check> out;
    Rng rng(cfg.seed ^ 0x70ull);
    std::array<ConformalGeometry, 3> geoms{ConformalGeometry::flat_plane(),
                                           ConformalGeometry::sphere(),
                                           ConformalGeometry::hyperbolic()};

    auto rand_pt = [&](const ConformalGeometry& g) {
        for (;;) {
            PointTN p{rng.complex_box(g.kind == ConformalGeometry::Kind::hyperbolic ? 0.65 : 1.5),
                      rng.complex_box(2.0)};
            if (g.domain(p.xi)) return p;
        }
    };

    {  // frame identity over 10^3 (geometry, point) samples
        double r = 0;
        for (int k = 0; k < 1000; ++k) {
            const auto& g = geoms[k % 3];
            PointTN p = rand_pt(g);
            auto th = theta_frame_tn(g, p);
            Bilinear4 G = metric_G(g, p);
            double scale = G.frobenius();
            auto e = chart_frame();
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Vec4 vi = e[i].chart(), vj = e[j].chart();
                    double lhs = 0.5 * (th[0](vi) * th[3](vj) + th[0](vj) * th[3](vi)) -
                                 0.5 * (th[1](vi) * th[2](vj) + th[1](vj) * th[2](vi));
                    r = std::max(r, std::abs(lhs - G.m[i][j]) / scale);
                }
        }
        detail::push(out, "tn.frame_identity", r, 1e-12,
                     "Theta1.Theta4 - Theta2.Theta3 = G, flat/sphere/hyperbolic");
    }
    {  // u = 0 reduction: metric, symplectic form, SD/ASD bases
        double r = 0;
        auto flat_g = ConformalGeometry::flat_plane();
        Bilinear4 G = flat_metric(Basis::coordinate);
        Form2 Om = nk::flat::Omega();
        auto sd = sd_basis_tn(flat_g, {0, 0});
        auto asd = asd_basis_tn(flat_g, {0, 0});
        Form2 esd[3] = {nk::flat::sd_form({0.5, -0.5, 0}), nk::flat::sd_form({0.5, 0.5, 0}),
                        nk::flat::sd_form({0, 0, 0.5})};
        Form2 easd[3] = {nk::flat::asd_form({-0.5, 0, 0}), nk::flat::asd_form({0, 0, -0.5}),
                         nk::flat::asd_form({0, -0.5, 0})};
        for (int k = 0; k < 500; ++k) {
            TangentTN x{rng.complex_box(2), rng.complex_box(2)};
            TangentTN y{rng.complex_box(2), rng.complex_box(2)};
            Vec4 cx_ = note_identification(x), cy = note_identification(y);
            double scale = 1.0 + std::abs(G(cx_, cy));
            r = std::max(r, std::abs(metric_eval(flat_g, {0, 0}, x, y) - G(cx_, cy)) / scale);
            r = std::max(r, std::abs(omega_eval(flat_g, {0, 0}, x, y) - Om(cx_, cy)) / scale);
            Vec4 tx = change_basis(cx_, Basis::double_null);
            Vec4 ty = change_basis(cy, Basis::double_null);
            for (int i = 0; i < 3; ++i) {
                r = std::max(r, std::abs(sd[i](x.chart(), y.chart()) - esd[i](tx, ty)) / scale);
                r = std::max(r, std::abs(asd[i](x.chart(), y.chart()) - easd[i](tx, ty)) / scale);
            }
        }
        detail::push(out, "tn.u0_reduction", r, 1e-12,
                     "metric, Omega, SD/ASD bases match the flat model");
    }
    {  // SD/ASD bases vs numeric Hodge star, 100 points per geometry
        double r = 0;
        for (const auto& g : geoms)
            for (int k = 0; k < 100; ++k) {
                PointTN p = rand_pt(g);
                StarOperator st = numeric_star(g, p);
                for (const Form2& f : sd_basis_tn(g, p))
                    r = std::max(r, (st(f) - f).norm() / f.norm());
                for (const Form2& f : asd_basis_tn(g, p))
                    r = std::max(r, (st(f) + f).norm() / f.norm());
            }
        detail::push(out, "tn.sd_asd_eigenvectors", r, 1e-9);
    }
    {  // beta surfaces: ASD residuals vanish, SD residuals bounded below
        double worst_asd = 0, least_sd = 1e300;
        for (const auto& g : geoms) {
            for (int k = 0; k < 4; ++k) {
                BetaParamsTN par{rng.uniform(0, 2 * M_PI),
                                 rng.complex_box(g.kind == ConformalGeometry::Kind::hyperbolic
                                                     ? 0.3
                                                     : 0.6),
                                 rng.complex_box(1.5)};
                auto s = beta_surface_tn(g, par);
                Grid grid = (g.kind == ConformalGeometry::Kind::hyperbolic)
                                ? Grid{-0.5, 0.5, 50, -1, 1, 50}
                                : Grid{-1, 1, 50, -1, 1, 50};
                auto res = classify_surface(g, s, grid, cfg.class_tol);
                worst_asd = std::max(worst_asd, res.max_asd);
                least_sd = std::min(least_sd, res.max_sd);
            }
        }
        detail::push(out, "tn.beta_asd_residual", worst_asd, 1e-9,
                     "analytic Jacobians, 50x50 grids");
        detail::push(out, "tn.beta_sd_floor", least_sd >= 1e-3 ? 0.0 : 1.0, 0.5,
                     "min over surfaces of max SD residual = " + detail::fmt(least_sd));
    }
    {  // fibres are alpha
        double r = 0;
        for (const auto& g : geoms) {
            auto fib = fibre_surface(g, rng.complex_box(0.5));
            auto res = classify_surface(g, fib, Grid{-1, 1, 20, -1, 1, 20}, cfg.class_tol);
            r = std::max(r, res.max_sd);
            if (res.cls != SurfaceClass::alpha) r = std::max(r, 1.0);
        }
        detail::push(out, "tn.fibre_alpha", r, 1e-12);
    }
    {  // geodesic curvature: value, constancy, both conventions
        auto sph = ConformalGeometry::sphere();
        double worst_dev = 0, worst_std = 0, ratio_min = 1e300, ratio_max = -1e300;
        for (double C1 : {0.0, 0.5, 1.0, 2.0}) {
            Curve2 line{[C1](double s) { return cx(s, C1); },
                        [](double) { return cx(1, 0); }, {}};
            double sum = 0, sum2 = 0;
            int n = 200;
            for (int i = 0; i < n; ++i) {
                double s = -2.0 + 4.0 * i / (n - 1);
                double k = geodesic_curvature(sph, line, s, CurvatureConvention::unit_frame);
                sum += k;
                sum2 += k * k;
                worst_dev = std::max(worst_dev, std::abs(k - C1));
                if (C1 > 0) {
                    double kp = geodesic_curvature(sph, line, s, CurvatureConvention::paper_frame);
                    ratio_min = std::min(ratio_min, kp / k);
                    ratio_max = std::max(ratio_max, kp / k);
                }
            }
            double mean = sum / n;
            double var = std::max(0.0, sum2 / n - mean * mean);
            worst_std = std::max(worst_std, std::sqrt(var) / (1.0 + std::abs(mean)));
        }
        detail::push(out, "tn.geodesic_curvature_value", worst_dev, 1e-6,
                     "xi = s + i C1 on the sphere has unit-frame curvature C1");
        detail::push(out, "tn.geodesic_curvature_constancy", worst_std, 1e-8);
        detail::push(out, "tn.geodesic_curvature_ratio", ratio_max - ratio_min, 1e-10,
                     "paper_frame/unit_frame = " + detail::fmt(0.5 * (ratio_min + ratio_max)) +
                         ", reference ratio sqrt(2) = " + detail::fmt(std::sqrt(2.0)));
    }
    {  // weyl component vanishes for constant curvature
        double r = 0;
        for (const auto& g : geoms)
            for (int k = 0; k < 25; ++k) r = std::max(r, std::abs(weyl_component(g, rand_pt(g))));
        detail::push(out, "tn.weyl_component_zero", r, 1e-10, "constant-curvature geometries");
    }
    return out;
}

// --- L(E^3) and L(H^3) ------------------------------------------------------------

inline std::vector<Check> run_lh3(const VerifyConfig& cfg) {
    using namespace nk::e3;
    using namespace nk::lh3;
    std::vector<Check> out;
    Rng rng(cfg.seed ^ 0x13ull);

    {  // Phi round trip on 10^4 random inputs with |xi| <= 10
        double r = 0;
        for (int k = 0; k < 10000; ++k) {
            cx xi = rng.complex_box(7.0);
            if (std::abs(xi) > 10) continue;
            cx eta = rng.complex_box(3.0);
            double rr = rng.sym(4.0);
            E3Point p = phi_map({xi, eta}, rr);
            auto [eb, rb] = phi_inverse(xi, p);
            r = std::max(r, std::abs(eb - eta) / (1.0 + std::abs(eta)));
            r = std::max(r, std::abs(rb - rr) / (1.0 + std::abs(rr)));
        }
        detail::push(out, "lh3.phi_roundtrip", r, 1e-12);
    }
    {  // images over r are affine lines
        double r = 0;
        for (int k = 0; k < 300; ++k) {
            OrientedLineE3 line{rng.complex_box(2.0), rng.complex_box(2.0)};
            E3Point a = phi_map(line, 0), b = phi_map(line, 1), c = phi_map(line, 2);
            r = std::max(r, std::hypot(std::abs(c.z - 2.0 * b.z + a.z), c.t - 2.0 * b.t + a.t));
        }
        detail::push(out, "lh3.phi_affine_lines", r, 1e-12);
    }
    {  // planarity of L(E^2) inside L(E^3), 20^3 samples x 5 values of C0
        double r = 0;
        for (double c0 : {0.0, 0.9, M_PI / 2, 2.5, 4.4}) {
            auto rep = lines_in_plane(c0, tn::Grid{-2, 2, 20, -2, 2, 20},
                                      std::vector<double>{-2, -1, 0, 1, 2});
            r = std::max(r, rep.max_planarity_residual);
            r = std::max(r, rep.max_line_fit_residual);
        }
        detail::push(out, "lh3.plane_family_planarity", r, 1e-12,
                     "Im(z e^{-iC0}) over 20x20x5 samples, 5 rotations");
    }

    auto rand_geodesic = [&](double min_w) {
        for (;;) {
            GeodesicH3 g{rng.complex_box(2.0), rng.complex_box(2.0)};
            if (g.valid() && std::abs(g.W()) >= min_w) return g;
        }
    };

    {  // frame identity and SD/ASD eigenvectors at 100 random points
        double rf = 0, re = 0;
        for (int k = 0; k < 100; ++k) {
            GeodesicH3 g = rand_geodesic(0.15);
            auto th = theta_frame_LH3(g);
            Bilinear4 G = metric_LH3(g);
            double scale = G.frobenius();
            auto e = chart_frame();
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    Vec4 vi = e[i].chart(), vj = e[j].chart();
                    double lhs = 0.5 * (th[0](vi) * th[3](vj) + th[0](vj) * th[3](vi)) -
                                 0.5 * (th[1](vi) * th[2](vj) + th[1](vj) * th[2](vi));
                    rf = std::max(rf, std::abs(lhs - G.m[i][j]) / scale);
                }
            StarOperator st = numeric_star(g);
            for (const Form2& f : sd_basis_LH3(g)) re = std::max(re, (st(f) - f).norm() / f.norm());
            for (const Form2& f : asd_basis_LH3(g))
                re = std::max(re, (st(f) + f).norm() / f.norm());
        }
        detail::push(out, "lh3.frame_identity", rf, 1e-12);
        detail::push(out, "lh3.sd_asd_eigenvectors", re, 1e-9);
    }
    {  // beta surfaces: torus and L(H^2), nullity and classification
        double worst_asd = 0, least_sd = 1e300, worst_null = 0;
        tn::Grid tgrid{0.4, 1.2, 50, 0.3, 1.1, 50};
        tn::Grid lgrid{0.2, 2.0, 50, 0.2, 2.0, 50};
        for (double c1 : {1.0, 0.6, -1.3}) {
            auto s = beta_surface_h3(BetaParamsH3::torus(c1));
            auto res = classify_surface(s, tgrid, cfg.class_tol);
            worst_asd = std::max(worst_asd, res.max_asd);
            least_sd = std::min(least_sd, res.max_sd);
            for (int k = 0; k < 50; ++k) {
                double u = rng.uniform(0.4, 1.2), v = rng.uniform(0.3, 1.1);
                GeodesicH3 p = s.f(u, v);
                auto [du, dv] = s.jacobian(u, v);
                double scale = std::max({1.0, std::abs(du.dmu2), std::abs(dv.dmu1)});
                worst_null = std::max({worst_null, std::abs(metric_eval(p, du, du)) / (scale * scale),
                                       std::abs(metric_eval(p, dv, dv)) / (scale * scale),
                                       std::abs(metric_eval(p, du, dv)) / (scale * scale)});
            }
        }
        for (double c0 : {0.0, 1.1}) {
            auto s = beta_surface_h3(BetaParamsH3::lh2(c0));
            auto res = classify_surface(s, lgrid, cfg.class_tol);
            worst_asd = std::max(worst_asd, res.max_asd);
            least_sd = std::min(least_sd, res.max_sd);
        }
        detail::push(out, "lh3.beta_asd_residual", worst_asd, 1e-9,
                     "torus and L(H^2) families, 50x50 admissible grids");
        detail::push(out, "lh3.beta_sd_floor", least_sd >= 1e-3 ? 0.0 : 1.0, 0.5,
                     "min over surfaces of max SD residual = " + detail::fmt(least_sd));
        detail::push(out, "lh3.beta_totally_null", worst_null, 1e-9);
    }
    {  // stereographic projection lands on the unit sphere
        double r = 0;
        for (int k = 0; k < 1000; ++k)
            r = std::max(r, std::abs(stereographic(rng.complex_box(5.0)).norm() - 1.0));
        detail::push(out, "lh3.stereographic_norm", r, 1e-14);
    }
    {  // torus boundary circles: incidence, antipodal relation, radii
        double inc = 0, antip = 0, refl = 0, radii = 0;
        for (double c1 : {1.0, 0.5, 2.0}) {
            auto tc = torus_circles(c1);
            for (int k = 0; k < 500; ++k) {
                double v = 0.05 + 6.2 * k / 499.0;
                S2Point q1 = stereographic(tc.mu1(v));
                inc = std::max(inc, tc.plane_mu1.residual(q1));
                if (std::abs(std::sin(v)) > 0.05)
                    inc = std::max(inc, tc.plane_mu2.residual(stereographic(tc.mu2(v))));
                antip = std::max(antip, tc.plane_mu2.residual(antipode(q1)));
                S2Point qr = q1;
                qr.p[2] = -qr.p[2];
                refl = std::max(refl, tc.plane_reflected.residual(qr));
            }
            radii = std::max(radii, std::abs(tc.plane_mu1.circle_radius() -
                                             tc.plane_mu2.circle_radius()));
            radii = std::max(radii, std::abs(tc.plane_mu1.circle_radius() -
                                             1.0 / std::sqrt(1.0 + c1 * c1)));
        }
        detail::push(out, "lh3.torus_circle_incidence", inc, 1e-12);
        detail::push(out, "lh3.torus_circle_antipodal", antip, 1e-12,
                     "second circle = antipodal image of the first");
        detail::push(out, "lh3.torus_circle_reflection_plane", refl, 1e-12,
                     "z-reflection of circle 1 lies in y - C1(z+1) = 0");
        detail::push(out, "lh3.torus_circle_radii", radii, 1e-12,
                     "equal radii 1/sqrt(1+C1^2)");
    }
    {  // ball-model arcs
        double ends = 0, inside = 0, orth = 0, coin = 0;
        for (int k = 0; k < 100; ++k) {
            GeodesicH3 g = rand_geodesic(0.05);
            auto pts = ball_geodesic(g, 33);
            auto [e1, e2] = endpoints(g);
            ends = std::max(ends, std::hypot(pts.front()[0] - e1.p[0], pts.front()[1] - e1.p[1],
                                             pts.front()[2] - e1.p[2]));
            ends = std::max(ends, std::hypot(pts.back()[0] - e2.p[0], pts.back()[1] - e2.p[1],
                                             pts.back()[2] - e2.p[2]));
            for (size_t i = 1; i + 1 < pts.size(); ++i)
                inside = std::max(inside, std::hypot(pts[i][0], pts[i][1], pts[i][2]) - 1.0 + 1e-9);
            auto a0 = pts.front(), a1 = pts[pts.size() / 2], a2 = pts.back();
            std::array<double, 3> u{a1[0] - a0[0], a1[1] - a0[1], a1[2] - a0[2]};
            std::array<double, 3> v{a2[0] - a0[0], a2[1] - a0[1], a2[2] - a0[2]};
            double uu = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
            double uv = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
            double vv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
            double det = uu * vv - uv * uv;
            if (det > 1e-12) {
                double xx = 0.5 * (uu * vv - uv * vv) / det;
                double yy = 0.5 * (vv * uu - uv * uu) / det;
                std::array<double, 3> c{a0[0] + xx * u[0] + yy * v[0],
                                        a0[1] + xx * u[1] + yy * v[1],
                                        a0[2] + xx * u[2] + yy * v[2]};
                double r2 = std::pow(c[0] - a0[0], 2) + std::pow(c[1] - a0[1], 2) +
                            std::pow(c[2] - a0[2], 2);
                double c2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
                orth = std::max(orth, std::abs(c2 - 1.0 - r2) / (1.0 + c2));
            }
        }
        for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
            GeodesicH3 g{1.0, cx(eps - 1.0, 0)};
            auto [e1, e2] = endpoints(g);
            double d = std::hypot(e1.p[0] - e2.p[0], e1.p[1] - e2.p[1], e1.p[2] - e2.p[2]);
            coin = std::max(coin, d > 4.0 * eps || d < 0.2 * eps ? 1.0 : 0.0);
        }
        detail::push(out, "lh3.ball_arc_endpoints", ends, 1e-10);
        detail::push(out, "lh3.ball_arc_interior", inside, 0.0, "all interior samples inside");
        detail::push(out, "lh3.ball_arc_orthogonality", orth, 1e-8,
                     "arc circles meet the boundary sphere at right angles");
        detail::push(out, "lh3.antidiagonal_coincidence", coin, 0.5,
                     "|e1 - e2| -> 0 exactly on the anti-diagonal");
    }
    return out;
}

// --- curvature --------------------------------------------------------------------

inline std::vector<Check> run_curvature(const VerifyConfig& cfg) {
    using namespace nk::curv;
    std::vector<Check> out;
    Rng rng(cfg.seed ^ 0xc04ull);

    auto rand_pt = [&](double amp) {
        return Point4{rng.sym(amp), rng.sym(amp), rng.sym(amp), rng.sym(amp)};
    };

    {  // flat fields
        double r = 0;
        auto flat = tn_metric_field(tn::ConformalGeometry::flat_plane());
        auto warped = warped_flat_field();
        for (int k = 0; k < 6; ++k) {
            auto rep = riemann_report(flat, rand_pt(1.2));
            r = std::max({r, rep.riemann_scale, rep.weyl_plus_norm, rep.weyl_minus_norm});
            auto rep2 = riemann_report(warped, rand_pt(1.2));
            r = std::max(r, rep2.riemann_scale);
        }
        detail::push(out, "curv.flat_zero", r, 1e-9, "constant and curvilinear flat metrics");
    }
    {  // identities + metric compatibility on curved fields
        double r = 0, mc = 0;
        auto sph = tn_metric_field(tn::ConformalGeometry::sphere());
        auto l3 = lh3_metric_field();
        for (int k = 0; k < 6; ++k) {
            Point4 x = rand_pt(1.0);
            auto rep = riemann_report(sph, x);
            r = std::max({r, rep.bianchi_residual, rep.pair_symmetry_residual});
            mc = std::max(mc, metric_compatibility_residual(sph, x));
            if (l3.domain(x) && std::abs(lh3::GeodesicH3{cx(x[0], x[1]), cx(x[2], x[3])}.W()) > 0.3) {
                auto rep2 = riemann_report(l3, x);
                r = std::max({r, rep2.bianchi_residual, rep2.pair_symmetry_residual});
            }
        }
        detail::push(out, "curv.bianchi_pair_symmetry", r, cfg.fd_tol);
        detail::push(out, "curv.metric_compatibility", mc, cfg.fd_tol);
    }
    {  // second-order convergence on the curvilinear flat field
        auto warped = warped_flat_field();
        warped.richardson = false;
        double worst_ratio = 1e300;
        for (int k = 0; k < 10; ++k) {
            Point4 x = rand_pt(1.2);
            MetricField coarse = warped;
            coarse.base_step = 4e-2;
            MetricField fine = warped;
            fine.base_step = 2e-2;
            double rc = riemann_report(coarse, x).riemann_scale;
            double rf = riemann_report(fine, x).riemann_scale;
            worst_ratio = std::min(worst_ratio, rc / rf);
        }
        detail::push(out, "curv.convergence_order", worst_ratio >= 4.0 * 0.99 ? 0.0 : 1.0, 0.5,
                     "min halving ratio = " + detail::fmt(worst_ratio) + " (asymptotic 4)");
    }
    {  // anti-self-duality / conformal flatness
        std::vector<Point4> pts;
        for (int k = 0; k < 25; ++k) pts.push_back(rand_pt(1.0));
        auto sph = check_asd(tn_metric_field(tn::ConformalGeometry::sphere()), pts);
        std::vector<Point4> hpts;
        for (auto p : pts) hpts.push_back({0.55 * p[0], 0.55 * p[1], p[2], p[3]});
        auto hyp = check_asd(tn_metric_field(tn::ConformalGeometry::hyperbolic()), hpts);
        auto l3f = lh3_metric_field();
        std::vector<Point4> lpts;
        while (lpts.size() < 25) {
            Point4 x = rand_pt(1.2);
            if (!l3f.domain(x)) continue;
            if (std::abs(lh3::GeodesicH3{cx(x[0], x[1]), cx(x[2], x[3])}.W()) < 0.3) continue;
            lpts.push_back(x);
        }
        auto l3 = check_asd(l3f, lpts);
        detail::push(out, "curv.tn_sphere_asd", sph.max_weyl_plus, 1e-5,
                     "weyl+ at 25 random points");
        detail::push(out, "curv.tn_hyperbolic_asd", hyp.max_weyl_plus, 1e-5);
        detail::push(out, "curv.lh3_conformally_flat",
                     std::max(l3.max_weyl_plus, l3.max_weyl_minus), 1e-5,
                     "both Weyl blocks vanish");
    }
    {  // non-constant curvature cross-check and conformal invariance
        const double a = 0.1, b = 0.05;
        auto geom = tn::ConformalGeometry::custom(
            "bump",
            [=](cx z) { return a * z.real() * z.real() + b * z.imag() * z.imag(); },
            [=](cx z) { return 0.5 * cx(2 * a * z.real(), -2 * b * z.imag()); },
            [=](cx z) {
                double u = a * z.real() * z.real() + b * z.imag() * z.imag();
                return -std::exp(-2.0 * u) * (2 * a + 2 * b);
            });
        auto field = tn_metric_field(geom);
        Point4 probes[] = {{0.3, -0.2, 1.2, 0.7}, {-0.5, 0.4, 0.6, -1.1}, {0.2, 0.6, -0.9, 0.4},
                           {0.7, 0.1, 0.3, 1.0}};
        cx ratio = 0;
        double r = 0, asd = 0;
        for (int i = 0; i < 4; ++i) {
            cx wfd = weyl_component_complex(field, probes[i]);
            cx wcf = tn::weyl_component(geom, {cx(probes[i][0], probes[i][1]),
                                               cx(probes[i][2], probes[i][3])});
            if (i == 0)
                ratio = wfd / wcf;
            else
                r = std::max(r, std::abs(wfd - ratio * wcf) / std::abs(wfd));
            asd = std::max(asd, riemann_report(field, probes[i]).weyl_plus_norm);
        }
        detail::push(out, "curv.weyl_component_crosscheck", r, 1e-3,
                     "global constant " + detail::fmt(ratio.real()) + (ratio.imag() >= 0 ? "+" : "") +
                         detail::fmt(ratio.imag()) + "i fits all samples");
        detail::push(out, "curv.nonconstant_kappa_asd", asd, 1e-5);

        const double lambda = 3.7;
        MetricField scaled = field;
        scaled.g = [field, lambda](const Point4& x) {
            Bilinear4 g = field.g(x);
            auto m = g.m;
            for (auto& row : m)
                for (double& v : row) v *= lambda;
            return Bilinear4{m, g.basis};
        };
        double inv = 0;
        for (int i = 0; i < 2; ++i) {
            auto r1 = riemann_report(field, probes[i]);
            auto r2 = riemann_report(scaled, probes[i]);
            inv = std::max(inv, std::abs(r2.weyl_minus_norm - r1.weyl_minus_norm) /
                                    r1.weyl_minus_norm);
        }
        detail::push(out, "curv.conformal_invariance", inv, 1e-6,
                     "constant rescaling leaves the weyl operator norms unchanged");
    }
    return out;
}

inline std::vector<Check> run_suite(const std::string& suite, const VerifyConfig& cfg) {
    std::vector<Check> out;
    auto append = [&](std::vector<Check> v) {
        out.insert(out.end(), v.begin(), v.end());
    };
    if (suite == "flat")
        append(run_flat(cfg));
    else if (suite == "tn")
        append(run_tn(cfg));
    else if (suite == "lh3")
        append(run_lh3(cfg));
    else if (suite == "curvature")
        append(run_curvature(cfg));
    else if (suite == "all") {
        append(run_flat(cfg));
        append(run_tn(cfg));
        append(run_lh3(cfg));
        append(run_curvature(cfg));
    } else
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

}  // namespace nk::verify
