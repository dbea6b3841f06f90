#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>

#include "nk/linalg.hpp"

// Neutral Kahler structure on TN for a conformal base metric e^{2u}|dxi|^2:
// metric, symplectic form, double null coframe, SD/ASD coordinate 2-form
// bases, surface pullbacks, beta-surface generator, geodesic curvature of
// base curves, and the single surviving Weyl component.
//
// Conventions.  A real tangent vector is stored by its (dxi, deta) values;
// conjugate components are implied.  The real chart is
// (x1,x2,x3,x4) = (Re xi, Im xi, Re eta, Im eta), tagged Basis::chart_tn.
// The metric is normalized so that at u = 0 the chart identification
//   xi = (x^1+x^3+i(x^2+x^4))/2,  eta = (x^2-x^4+i(-x^1+x^3))/2
// is an isometry onto R^{2,2}:
//   G(X,X) = -4 e^{2u} Im( conj(a) (b + 2 eta du a) ),  (a,b) = (dxi, deta)(X).
// The double null coframe for it is
//   T1 = 2Re(dxi), T2 = 2e^{2u}Re(deta + 2 eta du dxi),
//   T3 = -2Im(dxi), T4 = -2e^{2u}Im(deta + 2 eta du dxi),
// and (T1,T2,T3,T4) is declared positively oriented; the chart is then
// negatively oriented (orientation sign -1).

namespace nk::tn {

/// Chart (Re xi, Im xi, Re eta, Im eta) is negatively oriented with respect
/// to the double null frame.
inline constexpr double chart_orientation = -1.0;

struct ConformalGeometry {
    enum class Kind { flat, sphere, hyperbolic, custom };

    Kind kind = Kind::flat;
    std::string name = "flat";
    std::function<double(cx)> u;
    std::function<cx(cx)> du;        // d u / d xi
    std::function<double(cx)> kappa; // Gauss curvature
    std::function<bool(cx)> domain;

    double e2u(cx xi) const { return std::exp(2.0 * u(xi)); }

    void require_domain(cx xi) const {
        if (!domain(xi))
            throw domain_violation("point xi=(" + std::to_string(xi.real()) + "," +
                                   std::to_string(xi.imag()) + ") outside chart domain of " + name);
    }

    /// Constructor self-check: du must match a central difference of u.
    void self_check() const {
        const cx probes[] = {{0.11, -0.07}, {0.4, 0.31}, {-0.35, 0.2}, {0.05, -0.44}};
        const double h = 1e-6;
        for (cx p : probes) {
            if (!domain(p)) continue;
            double ux = (u(p + cx(h, 0)) - u(p - cx(h, 0))) / (2 * h);
            double uy = (u(p + cx(0, h)) - u(p - cx(0, h))) / (2 * h);
            cx fd = 0.5 * cx(ux, -uy);
            if (std::abs(fd - du(p)) > 1e-7 * (1.0 + std::abs(du(p))))
                throw std::invalid_argument("ConformalGeometry: du disagrees with finite "
                                            "difference of u");
        }
    }

    static ConformalGeometry flat_plane() {
        ConformalGeometry g;
        g.kind = Kind::flat;
        g.name = "flat";
        g.u = [](cx) { return 0.0; };
        g.du = [](cx) { return cx(0, 0); };
        g.kappa = [](cx) { return 0.0; };
        g.domain = [](cx) { return true; };
        g.self_check();
        return g;
    }

    /// Round sphere: e^{2u} = 4 (1 + xi conj(xi))^{-2}, kappa = +1.
    static ConformalGeometry sphere() {
        ConformalGeometry g;
        g.kind = Kind::sphere;
        g.name = "sphere";
        g.u = [](cx z) { return std::log(2.0) - std::log1p(std::norm(z)); };
        g.du = [](cx z) { return -std::conj(z) / (1.0 + std::norm(z)); };
        g.kappa = [](cx) { return 1.0; };
        g.domain = [](cx) { return true; };
        g.self_check();
        return g;
    }

    /// Hyperbolic disc: e^{2u} = 4 (1 - xi conj(xi))^{-2}, kappa = -1, |xi| < 1.
    static ConformalGeometry hyperbolic() {
        ConformalGeometry g;
        g.kind = Kind::hyperbolic;
        g.name = "hyperbolic";
        g.u = [](cx z) { return std::log(2.0) - std::log1p(-std::norm(z)); };
        g.du = [](cx z) { return std::conj(z) / (1.0 - std::norm(z)); };
        g.kappa = [](cx) { return -1.0; };
        g.domain = [](cx z) { return std::norm(z) < (1.0 - tol::hyp_margin) * (1.0 - tol::hyp_margin); };
        g.self_check();
        return g;
    }

    static ConformalGeometry custom(std::string label, std::function<double(cx)> uu,
                                    std::function<cx(cx)> duu, std::function<double(cx)> kk,
                                    std::function<bool(cx)> dom = [](cx) { return true; }) {
        ConformalGeometry g;
        g.kind = Kind::custom;
        g.name = std::move(label);
        g.u = std::move(uu);
        g.du = std::move(duu);
        g.kappa = std::move(kk);
        g.domain = std::move(dom);
        g.self_check();
        return g;
    }
};

struct PointTN {
    cx xi, eta;
};

/// Real tangent vector by its (dxi, deta) components; conjugates implied.
struct TangentTN {
    cx dxi, deta;

    Vec4 chart() const {
        return {dxi.real(), dxi.imag(), deta.real(), deta.imag(), Basis::chart_tn};
    }
    static TangentTN from_chart(const Vec4& v) {
        require_same_basis(v.basis, Basis::chart_tn, "TangentTN::from_chart");
        return {cx(v[0], v[1]), cx(v[2], v[3])};
    }
    double norm() const { return std::sqrt(std::norm(dxi) + std::norm(deta)); }
};

/// beta(X) = deta(X) + 2 eta du dxi(X); the complex covector entering the
/// metric, the frame and the third ASD element.
inline cx beta_value(const ConformalGeometry& g, const PointTN& p, const TangentTN& x) {
    return x.deta + 2.0 * p.eta * g.du(p.xi) * x.dxi;
}

/// G(X,Y); normalized so the u = 0 chart identification is an isometry
/// onto the flat model.
inline double metric_eval(const ConformalGeometry& g, const PointTN& p, const TangentTN& x,
                          const TangentTN& y) {
    g.require_domain(p.xi);
    double w = -2.0 * g.e2u(p.xi);
    return w * (std::imag(std::conj(x.dxi) * beta_value(g, p, y)) +
                std::imag(std::conj(y.dxi) * beta_value(g, p, x)));
}

inline TangentTN complex_structure(const TangentTN& x) {
    return {cx(0, 1) * x.dxi, cx(0, 1) * x.deta};
}

/// Omega(X,Y) = G(JX, Y); matches the flat Omega under the u = 0
/// identification.
inline double omega_eval(const ConformalGeometry& g, const PointTN& p, const TangentTN& x,
                         const TangentTN& y) {
    return metric_eval(g, p, complex_structure(x), y);
}

inline std::array<TangentTN, 4> chart_frame() {
    return {TangentTN{1, 0}, TangentTN{cx(0, 1), 0}, TangentTN{0, 1}, TangentTN{0, cx(0, 1)}};
}

/// Metric as a symmetric matrix over the real chart.
inline Bilinear4 metric_G(const ConformalGeometry& g, const PointTN& p) {
    auto e = chart_frame();
    std::array<std::array<double, 4>, 4> m{};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            m[i][j] = metric_eval(g, p, e[i], e[j]);
            m[j][i] = m[i][j];
        }
    return {m, Basis::chart_tn};
}

/// Symplectic form as a Form2 over the real chart.
inline Form2 symplectic_Omega(const ConformalGeometry& g, const PointTN& p) {
    auto e = chart_frame();
    Form2 f;
    f.basis = Basis::chart_tn;
    for (int k = 0; k < 6; ++k) {
        int a = form2_pairs[k][0], b = form2_pairs[k][1];
        f[k] = omega_eval(g, p, e[a], e[b]);
    }
    return f;
}

/// Double null coframe (T1, T2, T3, T4) with T1 . T4 - T2 . T3 = G.
inline std::array<Covec4, 4> theta_frame_tn(const ConformalGeometry& g, const PointTN& p) {
    g.require_domain(p.xi);
    double w = g.e2u(p.xi);
    cx two_eta_du = 2.0 * p.eta * g.du(p.xi);
    CxCovec4 dxi(1, 0, Basis::chart_tn);
    CxCovec4 lam(two_eta_du, 1, Basis::chart_tn);  // deta + 2 eta du dxi
    return {dxi.re * 2.0, lam.re * (2.0 * w), dxi.im * -2.0, lam.im * (-2.0 * w)};
}

/// Self-dual coordinate 2-form basis, in the real chart:
/// { dxi^deta + conj,
///   dxi^conj(deta) + conj + 2(conj(eta du) - eta du) dxi^conj(dxi),
///   i (dxi^deta - conj) }.
inline std::array<Form2, 3> sd_basis_tn(const ConformalGeometry& g, const PointTN& p) {
    g.require_domain(p.xi);
    cx eta_du = p.eta * g.du(p.xi);
    CxCovec4 dxi(1, 0, Basis::chart_tn), deta(0, 1, Basis::chart_tn);

    CxForm2 dxi_deta = wedge_c(dxi, deta);
    CxForm2 e1 = dxi_deta + dxi_deta.conj();

    CxForm2 dxi_detabar = wedge_conj(dxi, deta);
    CxForm2 dxi_dxibar = wedge_conj(dxi, dxi);
    CxForm2 e2 =
        dxi_detabar + dxi_detabar.conj() + dxi_dxibar * (2.0 * (std::conj(eta_du) - eta_du));

    CxForm2 e3 = (dxi_deta + dxi_deta.conj() * -1.0) * cx(0, 1);
    return {real_form(e1), real_form(e2), real_form(e3)};
}

/// Anti-self-dual coordinate basis, in the real chart:
/// { i dxi^conj(dxi),
///   i [dxi^conj(deta) - conj + 2(conj(eta du) + eta du) dxi^conj(dxi)],
///   i (deta + 2 eta du dxi) ^ conj(deta + 2 eta du dxi) }.
inline std::array<Form2, 3> asd_basis_tn(const ConformalGeometry& g, const PointTN& p) {
    g.require_domain(p.xi);
    cx eta_du = p.eta * g.du(p.xi);
    CxCovec4 dxi(1, 0, Basis::chart_tn), deta(0, 1, Basis::chart_tn);

    CxForm2 dxi_dxibar = wedge_conj(dxi, dxi);
    CxForm2 a1 = dxi_dxibar * cx(0, 1);

    CxForm2 dxi_detabar = wedge_conj(dxi, deta);
    CxForm2 a2 = (dxi_detabar + dxi_detabar.conj() * -1.0 +
                          dxi_dxibar * (2.0 * (std::conj(eta_du) + eta_du))) *
                         cx(0, 1);

    CxCovec4 lam(2.0 * eta_du, 1, Basis::chart_tn);  // deta + 2 eta du dxi
    CxForm2 a3 = wedge_conj(lam, lam) * cx(0, 1);

    return {real_form(a1), real_form(a2), real_form(a3)};
}

/// Hodge star of (G, chart orientation) acting on chart 2-forms.
inline StarOperator numeric_star(const ConformalGeometry& g, const PointTN& p) {
    return star_from_metric(metric_G(g, p), chart_orientation);
}

// --- surfaces -----------------------------------------------------------------

/// Parametrized surface (s,t) -> TN with exact or finite-difference Jacobian.
struct SurfaceMap {
    std::function<PointTN(double, double)> f;
    std::function<std::pair<TangentTN, TangentTN>(double, double)> jacobian;
    bool analytic_jacobian = false;

    static SurfaceMap with_fd_jacobian(std::function<PointTN(double, double)> fn) {
        SurfaceMap s;
        s.f = std::move(fn);
        auto g = s.f;
        s.jacobian = [g](double ss, double tt) {
            auto d = [&](auto pick, bool in_s) {
                double h = 1e-5 * (1.0 + std::abs(in_s ? ss : tt));
                auto at = [&](double x) {
                    return in_s ? pick(g(x, tt)) : pick(g(ss, x));
                };
                double base = in_s ? ss : tt;
                return (8.0 * (at(base + h) - at(base - h)) - (at(base + 2 * h) - at(base - 2 * h))) /
                       (12.0 * h);
            };
            auto xi = [](const PointTN& p) { return p.xi; };
            auto eta = [](const PointTN& p) { return p.eta; };
            TangentTN ds{d(xi, true), d(eta, true)};
            TangentTN dt{d(xi, false), d(eta, false)};
            return std::make_pair(ds, dt);
        };
        s.analytic_jacobian = false;
        return s;
    }
};

enum class FormType { SD, ASD };

/// |w_i(ds f, dt f)| for the three basis forms of the requested type,
/// normalized by the Plucker norm of the Jacobian bivector.
inline std::array<double, 3> pullback_residuals(const ConformalGeometry& g,
                                                const SurfaceMap& surf, double s, double t,
                                                FormType which) {
    PointTN p = surf.f(s, t);
    g.require_domain(p.xi);
    auto [ds, dt] = surf.jacobian(s, t);
    Vec4 v = ds.chart(), w = dt.chart();
    double scale = bivector_norm(v, w);
    double vn = v.norm(), wn = w.norm();
    if (scale <= tol::rank_tol * vn * wn)
        throw rank_deficient("pullback_residuals: surface fails immersion at (s,t)=(" +
                             std::to_string(s) + "," + std::to_string(t) + ")");
    auto basis = (which == FormType::SD) ? sd_basis_tn(g, p) : asd_basis_tn(g, p);
    std::array<double, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = std::abs(basis[i](v, w)) / scale;
    return r;
}

struct Grid {
    double s0, s1;
    int ns;
    double t0, t1;
    int nt;

    template <typename F>
    void for_each(F&& fn) const {
        for (int i = 0; i < ns; ++i)
            for (int j = 0; j < nt; ++j) {
                double s = ns == 1 ? s0 : s0 + (s1 - s0) * i / double(ns - 1);
                double t = nt == 1 ? t0 : t0 + (t1 - t0) * j / double(nt - 1);
                fn(s, t);
            }
    }
};

enum class SurfaceClass { alpha, beta, neither };

inline const char* to_string(SurfaceClass c) {
    switch (c) {
        case SurfaceClass::alpha: return "alpha";
        case SurfaceClass::beta: return "beta";
        case SurfaceClass::neither: return "neither";
    }
    return "?";
}

struct ClassifyResult {
    SurfaceClass cls;
    double max_sd;
    double max_asd;
};

inline ClassifyResult classify_surface(const ConformalGeometry& g, const SurfaceMap& surf,
                                       const Grid& grid, double class_tol = tol::class_tol) {
    double max_sd = 0, max_asd = 0;
    grid.for_each([&](double s, double t) {
        for (double r : pullback_residuals(g, surf, s, t, FormType::SD)) max_sd = std::max(max_sd, r);
        for (double r : pullback_residuals(g, surf, s, t, FormType::ASD))
            max_asd = std::max(max_asd, r);
    });
    SurfaceClass cls = SurfaceClass::neither;
    if (max_sd < class_tol && max_asd >= class_tol)
        cls = SurfaceClass::alpha;
    else if (max_asd < class_tol && max_sd >= class_tol)
        cls = SurfaceClass::beta;
    return {cls, max_sd, max_asd};
}

struct BetaParamsTN {
    double C0 = 0;
    cx xi0 = 0;
    cx eta0 = 0;
};

namespace detail {

/// Base geodesic through xi0 with direction e^{iC0}, as the Moebius image
/// of the chart line s e^{iC0} (lines through the origin are geodesics of
/// all three built-in geometries).  Returns gamma, gamma', gamma''.
struct GeodesicPoint {
    cx gamma, d1, d2;
};

inline GeodesicPoint base_geodesic(const ConformalGeometry& g, cx xi0, double C0, double s) {
    cx rot = std::polar(1.0, C0);
    double sigma;
    switch (g.kind) {
        case ConformalGeometry::Kind::flat: sigma = 0; break;
        case ConformalGeometry::Kind::sphere: sigma = 1; break;
        case ConformalGeometry::Kind::hyperbolic: sigma = -1; break;
        default:
            throw domain_violation("beta_surface_tn: closed-form geodesics only for the "
                                   "flat/sphere/hyperbolic geometries");
    }
    cx w = s * rot;
    cx denom = 1.0 - sigma * std::conj(xi0) * w;
    if (std::abs(denom) < 1e-8)
        throw domain_violation("beta_surface_tn: base geodesic leaves the chart at s=" +
                               std::to_string(s));
    double c = 1.0 + sigma * std::norm(xi0);
    GeodesicPoint r;
    r.gamma = (w + xi0) / denom;
    r.d1 = rot * c / (denom * denom);
    r.d2 = rot * rot * c * 2.0 * sigma * std::conj(xi0) / (denom * denom * denom);
    return r;
}

}  // namespace detail

/// The beta-surface through (xi0, eta0) with direction angle C0: the affine
/// tangent line bundle over the base geodesic gamma(s), with the normal
/// offset carried along as q0 e^{u(xi0) - u(gamma)} (constant metric length).
/// At u = 0 this is exactly xi = s e^{iC0} + xi0, eta = t e^{iC0} + eta0.
inline SurfaceMap beta_surface_tn(const ConformalGeometry& g, const BetaParamsTN& par) {
    cx rot = std::polar(1.0, par.C0);
    double p0 = std::real(par.eta0 * std::conj(rot));
    double q0 = std::imag(par.eta0 * std::conj(rot));
    double u0 = g.u(par.xi0);

    auto eval = [g, par, p0, q0, u0](double ss, double tt, bool want_jacobian)
        -> std::pair<PointTN, std::pair<TangentTN, TangentTN>> {
        auto base = detail::base_geodesic(g, par.xi0, par.C0, ss);
        g.require_domain(base.gamma);
        double speed = std::abs(base.d1);
        cx dir = base.d1 / speed;  // e^{i theta(s)}
        double w = q0 * std::exp(u0 - g.u(base.gamma));
        cx fibre = cx(tt + p0, w);
        PointTN p{base.gamma, dir * fibre};
        if (!want_jacobian) return {p, {}};

        // d/ds of the unit direction and of the carried offset
        cx ddir = base.d2 / speed -
                  base.d1 * std::real(std::conj(base.d1) * base.d2) / (speed * speed * speed);
        double u_s = 2.0 * std::real(g.du(base.gamma) * base.d1);
        double w_s = -u_s * w;
        TangentTN ds{base.d1, ddir * fibre + dir * cx(0, w_s)};
        TangentTN dt{0, dir};
        return {p, {ds, dt}};
    };

    SurfaceMap s;
    s.analytic_jacobian = true;
    s.f = [eval](double ss, double tt) { return eval(ss, tt, false).first; };
    s.jacobian = [eval](double ss, double tt) { return eval(ss, tt, true).second; };
    return s;
}

/// Fibre xi = const, an alpha surface.
inline SurfaceMap fibre_surface(const ConformalGeometry& g, cx xi0) {
    g.require_domain(xi0);
    SurfaceMap s;
    s.analytic_jacobian = true;
    s.f = [xi0](double ss, double tt) { return PointTN{xi0, cx(ss, tt)}; };
    s.jacobian = [](double, double) {
        return std::make_pair(TangentTN{0, 1}, TangentTN{0, cx(0, 1)});
    };
    return s;
}

// --- geodesic curvature of base curves ---------------------------------------

struct Curve2 {
    std::function<cx(double)> xi;
    // optional analytic derivatives; finite differences otherwise
    std::function<cx(double)> dxi;
    std::function<cx(double)> ddxi;

    cx d1(double s) const {
        if (dxi) return dxi(s);
        double h = 1e-5 * (1.0 + std::abs(s));
        return (8.0 * (xi(s + h) - xi(s - h)) - (xi(s + 2 * h) - xi(s - 2 * h))) / (12.0 * h);
    }
    cx d2(double s) const {
        if (ddxi) return ddxi(s);
        double h = 1e-4 * (1.0 + std::abs(s));
        return (xi(s + h) - 2.0 * xi(s) + xi(s - h)) / (h * h);
    }
};

enum class CurvatureConvention { unit_frame, paper_frame };

/// Christoffel symbols of e^{2u}(dx^2 + dy^2):
/// G^1_11 = u_x, G^1_12 = u_y, G^1_22 = -u_x, G^2_11 = -u_y, G^2_12 = u_x,
/// G^2_22 = u_y.
inline std::array<double, 2> covariant_accel(const ConformalGeometry& g, cx pos,
                                             const std::array<double, 2>& vel,
                                             const std::array<double, 2>& field,
                                             const std::array<double, 2>& dfield_ds) {
    cx du = g.du(pos);
    double ux = 2.0 * du.real(), uy = -2.0 * du.imag();
    double G111 = ux, G112 = uy, G122 = -ux;
    double G211 = -uy, G212 = ux, G222 = uy;
    double c1 = dfield_ds[0] + G111 * vel[0] * field[0] + G112 * (vel[0] * field[1] + vel[1] * field[0]) +
                G122 * vel[1] * field[1];
    double c2 = dfield_ds[1] + G211 * vel[0] * field[0] + G212 * (vel[0] * field[1] + vel[1] * field[0]) +
                G222 * vel[1] * field[1];
    return {c1, c2};
}

/// Geodesic curvature of s -> xi(s).
///
/// unit_frame: g(N, nabla_T T) with unit tangent T and unit normal N = J T
/// (J = rotation by +pi/2 in the oriented chart).
///
/// paper_frame: the same contraction with both frame fields scaled to
/// squared length 1/2 (the half-length frame fields,
/// T = e^{-u}/sqrt(2) dx-direction for curves along the chart axis); the
/// two conventions differ by the constant factor 1/(2 sqrt 2).
inline double geodesic_curvature(const ConformalGeometry& g, const Curve2& curve, double s,
                                 CurvatureConvention conv) {
    cx pos = curve.xi(s);
    g.require_domain(pos);
    cx v = curve.d1(s), a = curve.d2(s);
    double speed_e = std::abs(v);
    if (speed_e < 1e-12) throw domain_violation("geodesic_curvature: degenerate curve point");
    double eu = std::exp(g.u(pos));

    // Unit tangent along the curve and its s-derivative.
    // T(s) = gamma'(s) / (e^{u} |gamma'|).
    cx du = g.du(pos);
    double ux = 2.0 * du.real(), uy = -2.0 * du.imag();
    double dspeed_e = (v.real() * a.real() + v.imag() * a.imag()) / speed_e;
    double du_ds = ux * v.real() + uy * v.imag();
    double vg = eu * speed_e;          // metric speed
    double dvg = eu * (du_ds * speed_e + dspeed_e);

    std::array<double, 2> T{v.real() / vg, v.imag() / vg};
    std::array<double, 2> dT{(a.real() * vg - v.real() * dvg) / (vg * vg),
                             (a.imag() * vg - v.imag() * dvg) / (vg * vg)};

    // nabla_T T = (1/vg) * (dT/ds + Gamma(gamma', T))
    auto acc = covariant_accel(g, pos, {v.real(), v.imag()}, T, dT);
    std::array<double, 2> nabla{acc[0] / vg, acc[1] / vg};

    std::array<double, 2> N{-T[1], T[0]};  // J T
    double k = eu * eu * (N[0] * nabla[0] + N[1] * nabla[1]);

    if (conv == CurvatureConvention::paper_frame) k *= 1.0 / (2.0 * std::sqrt(2.0));
    return k;
}

// --- Weyl component -----------------------------------------------------------

/// The one potentially non-vanishing conformal curvature component,
/// i (eta d_xi kappa - conj), real-valued; zero for constant curvature.
/// d_xi kappa by 4th-order central differences of the supplied kappa.
inline cx weyl_component(const ConformalGeometry& g, const PointTN& p) {
    g.require_domain(p.xi);
    double h = 1e-5 * (1.0 + std::abs(p.xi));
    auto k = [&](cx z) { return g.kappa(z); };
    cx z = p.xi;
    double kx = (8.0 * (k(z + cx(h, 0)) - k(z - cx(h, 0))) - (k(z + cx(2 * h, 0)) - k(z - cx(2 * h, 0)))) /
                (12.0 * h);
    double ky = (8.0 * (k(z + cx(0, h)) - k(z - cx(0, h))) - (k(z + cx(0, 2 * h)) - k(z - cx(0, 2 * h)))) /
                (12.0 * h);
    cx dkappa = 0.5 * cx(kx, -ky);
    cx w = cx(0, 1) * (p.eta * dkappa - std::conj(p.eta * dkappa));
    return w;
}

// --- u = 0 identification with the flat model ---------------------------------

/// The chart identification of the Note: a TN tangent vector at u = 0
/// corresponds to the R^{2,2} coordinate vector
/// (Re a - Im b, Im a + Re b, Re a + Im b, Im a - Re b), (a,b) = (dxi,deta).
inline Vec4 note_identification(const TangentTN& x) {
    double ra = x.dxi.real(), ia = x.dxi.imag();
    double rb = x.deta.real(), ib = x.deta.imag();
    return {ra - ib, ia + rb, ra + ib, ia - rb, Basis::coordinate};
}

}  // namespace nk::tn
