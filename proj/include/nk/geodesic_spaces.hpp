#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nk/linalg.hpp"
#include "nk/tn_bundle.hpp"

// Oriented geodesic spaces.  L(E^3) is TS^2 over the sphere geometry with
// the correspondence Phi between (line, affine parameter) and points of
// E^3 = C + R.  L(H^3) is P^1 x P^1 minus the anti-diagonal
// {mu1 conj(mu2) = -1}, carrying its own neutral Kahler metric, double null
// coframe, SD/ASD 2-form bases, and beta-surface families, plus the
// boundary-circle geometry and ball-model geodesic arcs used for figures.

namespace nk::e3 {

struct E3Point {
    cx z;
    double t;
};

/// An oriented affine line of E^3 in the TS^2 chart (xi, eta); xi is the
/// direction under inverse stereographic projection.
using OrientedLineE3 = tn::PointTN;

/// Phi((xi,eta), r): the point on the line at affine parameter r from the
/// foot of the perpendicular through the origin.
inline E3Point phi_map(const OrientedLineE3& line, double r) {
    cx xi = line.xi, eta = line.eta;
    double n = 1.0 + std::norm(xi);
    cx z = (2.0 * (eta - std::conj(eta) * xi * xi) + 2.0 * xi * n * r) / (n * n);
    double t = (-2.0 * std::real(eta * std::conj(xi) + std::conj(eta) * xi) +
                (1.0 - std::norm(xi) * std::norm(xi)) * r) /
               (n * n);
    return {z, t};
}

/// Inverse: the line through p with direction xi, and p's affine parameter.
inline std::pair<cx, double> phi_inverse(cx xi, const E3Point& p) {
    cx eta = 0.5 * (p.z - 2.0 * p.t * xi - std::conj(p.z) * xi * xi);
    double r = (std::real(std::conj(xi) * p.z + xi * std::conj(p.z)) +
                (1.0 - std::norm(xi)) * p.t) /
               (1.0 + std::norm(xi));
    return {eta, r};
}

struct PlaneFamilyReport {
    double max_planarity_residual = 0;
    double max_line_fit_residual = 0;
    int lines = 0;
};

/// The oriented lines of the vertical plane Im(z e^{-iC0}) = 0 through the
/// t-axis: the beta surface over the sphere with xi0 = eta0 = 0.  Verifies
/// planarity of every sampled point and straightness of every line.
inline PlaneFamilyReport lines_in_plane(double C0, const tn::Grid& grid,
                                        const std::vector<double>& r_samples = {-2, -1, 0, 1, 2}) {
    auto sph = tn::ConformalGeometry::sphere();
    auto surf = tn::beta_surface_tn(sph, {C0, 0, 0});
    cx rot = std::polar(1.0, C0);
    PlaneFamilyReport rep;
    grid.for_each([&](double s, double t) {
        tn::PointTN line = surf.f(s, t);
        ++rep.lines;
        // collinearity: compare r-samples against the r = 0 / unit-direction fit
        E3Point p0 = phi_map(line, 0.0);
        E3Point p1 = phi_map(line, 1.0);
        cx dz = p1.z - p0.z;
        double dt = p1.t - p0.t;
        for (double r : r_samples) {
            E3Point p = phi_map(line, r);
            double planarity = std::abs(std::imag(p.z * std::conj(rot)));
            rep.max_planarity_residual = std::max(rep.max_planarity_residual, planarity);
            double fit = std::hypot(std::abs(p.z - (p0.z + r * dz)), p.t - (p0.t + r * dt));
            rep.max_line_fit_residual = std::max(rep.max_line_fit_residual, fit);
        }
    });
    return rep;
}

}  // namespace nk::e3

namespace nk::lh3 {

/// Chart (Re mu1, Im mu1, Re mu2, Im mu2) is negatively oriented with
/// respect to the double null frame, as for TN.
inline constexpr double chart_orientation = -1.0;

/// Oriented geodesic of H^3 as a point of P^1 x P^1 off the anti-diagonal.
struct GeodesicH3 {
    cx mu1, mu2;

    cx W() const { return 1.0 + mu1 * std::conj(mu2); }

    bool valid() const {
        return std::abs(W()) > tol::diag_tol && std::abs(mu1) <= 1e8 && std::abs(mu2) <= 1e8;
    }
    void require_valid() const {
        if (std::abs(mu1) > 1e8 || std::abs(mu2) > 1e8)
            throw domain_violation("GeodesicH3: coordinate near the chart pole");
        if (std::abs(W()) <= tol::diag_tol)
            throw domain_violation("GeodesicH3: anti-diagonal point mu1 conj(mu2) = -1");
    }
};

/// Real tangent vector by its (dmu1, dmu2) components; conjugates implied.
struct TangentLH3 {
    cx dmu1, dmu2;

    Vec4 chart() const {
        return {dmu1.real(), dmu1.imag(), dmu2.real(), dmu2.imag(), Basis::chart_lh3};
    }
};

/// G(X,Y) = Im[(m1(X) conj(m2(Y)) + m1(Y) conj(m2(X))) / W^2].
inline double metric_eval(const GeodesicH3& p, const TangentLH3& x, const TangentLH3& y) {
    p.require_valid();
    cx w2 = p.W() * p.W();
    return std::imag((x.dmu1 * std::conj(y.dmu2) + y.dmu1 * std::conj(x.dmu2)) / w2);
}

inline std::array<TangentLH3, 4> chart_frame() {
    return {TangentLH3{1, 0}, TangentLH3{cx(0, 1), 0}, TangentLH3{0, 1}, TangentLH3{0, cx(0, 1)}};
}

inline Bilinear4 metric_LH3(const GeodesicH3& p) {
    auto e = chart_frame();
    std::array<std::array<double, 4>, 4> m{};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            m[i][j] = metric_eval(p, e[i], e[j]);
            m[j][i] = m[i][j];
        }
    return {m, Basis::chart_lh3};
}

/// Double null coframe: with A = dmu1/(1+mu1 conj(mu2)), B = dmu2/(1+conj(mu1) mu2),
/// Theta^1 = Re(A-B), Theta^2 = Re(A+B), Theta^3 = -Im(A-B), Theta^4 = -Im(A+B).
inline std::array<Covec4, 4> theta_frame_LH3(const GeodesicH3& p) {
    p.require_valid();
    cx w = p.W();
    CxCovec4 amb(1.0 / w, -1.0 / std::conj(w), Basis::chart_lh3);
    CxCovec4 apb(1.0 / w, 1.0 / std::conj(w), Basis::chart_lh3);
    return {amb.re, apb.re, amb.im * -1.0, apb.im * -1.0};
}

/// Self-dual basis { A^B + conj, A^conj(B) + conj, i(A^B - conj) }.
inline std::array<Form2, 3> sd_basis_LH3(const GeodesicH3& p) {
    p.require_valid();
    cx w = p.W();
    CxCovec4 a(1.0 / w, 0, Basis::chart_lh3);
    CxCovec4 b(0, 1.0 / std::conj(w), Basis::chart_lh3);
    CxForm2 ab = wedge_c(a, b);
    CxForm2 abbar = wedge_conj(a, b);
    return {real_form(ab + ab.conj()), real_form(abbar + abbar.conj()),
            real_form((ab + ab.conj() * -1.0) * cx(0, 1))};
}

/// Anti-self-dual basis { i A^conj(A), i B^conj(B), i(A^conj(B) - conj) }.
inline std::array<Form2, 3> asd_basis_LH3(const GeodesicH3& p) {
    p.require_valid();
    cx w = p.W();
    CxCovec4 a(1.0 / w, 0, Basis::chart_lh3);
    CxCovec4 b(0, 1.0 / std::conj(w), Basis::chart_lh3);
    CxForm2 abbar = wedge_conj(a, b);
    return {real_form(wedge_conj(a, a) * cx(0, 1)), real_form(wedge_conj(b, b) * cx(0, 1)),
            real_form((abbar + abbar.conj() * -1.0) * cx(0, 1))};
}

inline StarOperator numeric_star(const GeodesicH3& p) {
    return star_from_metric(metric_LH3(p), chart_orientation);
}

// --- surfaces in L(H^3) --------------------------------------------------------

struct SurfaceMapH3 {
    std::function<GeodesicH3(double, double)> f;
    std::function<std::pair<TangentLH3, TangentLH3>(double, double)> jacobian;
    bool analytic_jacobian = false;
};

inline std::array<double, 3> pullback_residuals(const SurfaceMapH3& surf, double u, double v,
                                                tn::FormType which) {
    GeodesicH3 p = surf.f(u, v);
    p.require_valid();
    auto [du, dv] = surf.jacobian(u, v);
    Vec4 x = du.chart(), y = dv.chart();
    double scale = bivector_norm(x, y);
    if (scale <= tol::rank_tol * x.norm() * y.norm())
        throw rank_deficient("pullback_residuals: surface fails immersion at (" +
                             std::to_string(u) + "," + std::to_string(v) + ")");
    auto basis = (which == tn::FormType::SD) ? sd_basis_LH3(p) : asd_basis_LH3(p);
    std::array<double, 3> r{};
    for (int i = 0; i < 3; ++i) r[i] = std::abs(basis[i](x, y)) / scale;
    return r;
}

inline tn::ClassifyResult classify_surface(const SurfaceMapH3& surf, const tn::Grid& grid,
                                           double class_tol = tol::class_tol) {
    double max_sd = 0, max_asd = 0;
    grid.for_each([&](double u, double v) {
        for (double r : pullback_residuals(surf, u, v, tn::FormType::SD))
            max_sd = std::max(max_sd, r);
        for (double r : pullback_residuals(surf, u, v, tn::FormType::ASD))
            max_asd = std::max(max_asd, r);
    });
    tn::SurfaceClass cls = tn::SurfaceClass::neither;
    if (max_sd < class_tol && max_asd >= class_tol)
        cls = tn::SurfaceClass::alpha;
    else if (max_asd < class_tol && max_sd >= class_tol)
        cls = tn::SurfaceClass::beta;
    return {cls, max_sd, max_asd};
}

/// Beta-surface parameters: either L(H^2) (geodesics of a totally geodesic
/// surface) with rotation angle C0, or the product-of-circles torus with
/// C1 != 0.
struct BetaParamsH3 {
    enum class Case { lh2, torus };
    Case kind = Case::lh2;
    double c0 = 0;  // lh2
    double c1 = 1;  // torus

    static BetaParamsH3 lh2(double c0) { return {Case::lh2, c0, 0}; }
    static BetaParamsH3 torus(double c1) {
        if (c1 == 0) throw std::invalid_argument("BetaParamsH3: torus requires C1 != 0");
        return {Case::torus, 0, c1};
    }
};

/// L(H^2) case: (lambda1, lambda2) -> (lambda1 e^{-iC0}, lambda2 e^{-iC0}),
/// radial parameters positive.
///
/// Torus case: (u, v) -> (mu1, mu2) = (sin v e^{iv} / C1, C1 e^{-iu} / sin u),
/// u, u+v away from multiples of pi.  The phase of the C1/sin factor must be
/// conjugated relative to the sin-factor: the variant C1 e^{+iu}/sin u does
/// not give totally null tangent planes (see the tests).
inline SurfaceMapH3 beta_surface_h3(const BetaParamsH3& par) {
    SurfaceMapH3 s;
    s.analytic_jacobian = true;
    if (par.kind == BetaParamsH3::Case::lh2) {
        cx rot = std::polar(1.0, -par.c0);
        s.f = [rot](double l1, double l2) {
            if (l1 <= 0 || l2 <= 0)
                throw domain_violation("beta_surface_h3(lh2): radial parameters must be > 0");
            GeodesicH3 g{l1 * rot, l2 * rot};
            g.require_valid();
            return g;
        };
        s.jacobian = [rot](double, double) {
            return std::make_pair(TangentLH3{rot, 0}, TangentLH3{0, rot});
        };
    } else {
        double c1 = par.c1;
        s.f = [c1](double u, double v) {
            if (std::abs(std::sin(u)) < 1e-12)
                throw domain_violation("beta_surface_h3(torus): sin u = 0 excluded");
            GeodesicH3 g{std::sin(v) * std::polar(1.0, v) / c1,
                         c1 * std::polar(1.0, -u) / std::sin(u)};
            g.require_valid();
            return g;
        };
        s.jacobian = [c1](double u, double v) {
            if (std::abs(std::sin(u)) < 1e-12)
                throw domain_violation("beta_surface_h3(torus): sin u = 0 excluded");
            double su = std::sin(u);
            return std::make_pair(TangentLH3{0, -c1 / (su * su)},
                                  TangentLH3{std::polar(1.0, 2.0 * v) / c1, 0});
        };
    }
    return s;
}

// --- boundary sphere geometry ---------------------------------------------------

struct S2Point {
    std::array<double, 3> p{};

    double norm() const { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }
};

/// x = (mu+conj mu)/(1+|mu|^2), y = -i(mu-conj mu)/(1+|mu|^2), z = (1-|mu|^2)/(1+|mu|^2);
/// the chart pole maps to (0,0,-1).
inline S2Point stereographic(cx mu) {
    if (std::abs(mu) > 1e8) return {{0, 0, -1}};
    double n = 1.0 + std::norm(mu);
    return {{2.0 * mu.real() / n, 2.0 * mu.imag() / n, (1.0 - std::norm(mu)) / n}};
}

inline S2Point antipode(const S2Point& q) { return {{-q.p[0], -q.p[1], -q.p[2]}}; }

/// Endpoints of the geodesic on the boundary sphere: e1 = sigma(mu1),
/// e2 = -sigma(mu2).  This is the convention under which the removed
/// anti-diagonal is exactly the coincident-endpoint locus.
inline std::pair<S2Point, S2Point> endpoints(const GeodesicH3& g) {
    return {stereographic(g.mu1), antipode(stereographic(g.mu2))};
}

/// Plane n . p + d = 0.
struct PlaneS2 {
    std::array<double, 3> n{};
    double d = 0;

    double residual(const S2Point& q) const {
        return std::abs(n[0] * q.p[0] + n[1] * q.p[1] + n[2] * q.p[2] + d);
    }
    /// Euclidean radius of the intersection circle with the unit sphere.
    double circle_radius() const {
        double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        double dist = std::abs(d) / nn;
        return std::sqrt(std::max(0.0, 1.0 - dist * dist));
    }
};

/// The two boundary-sphere circles traced by the torus beta-surface's
/// factors, with their incidence planes:
///   sigma(mu1(v)) in { y + C1 (z - 1) = 0 }   (through the north pole),
///   sigma(mu2(u)) in { y + C1 (z + 1) = 0 }   (through the south pole),
/// and the second circle is the antipodal image of the first.  Reflecting
/// the first circle in the horizontal plane lands in { y - C1 (z + 1) = 0 },
/// which differs from the mu2 circle by a y-flip.
struct TorusCircles {
    double c1;
    PlaneS2 plane_mu1;        // y + C1 z - C1 = 0
    PlaneS2 plane_mu2;        // y + C1 z + C1 = 0
    PlaneS2 plane_reflected;  // y - C1 z - C1 = 0 : image of circle 1 under z -> -z

    cx mu1(double v) const { return std::sin(v) * std::polar(1.0, v) / c1; }
    cx mu2(double u) const { return c1 * std::polar(1.0, -u) / std::sin(u); }
};

inline TorusCircles torus_circles(double c1) {
    if (c1 == 0) throw std::invalid_argument("torus_circles: C1 != 0 required");
    TorusCircles t;
    t.c1 = c1;
    t.plane_mu1 = {{0, 1, c1}, -c1};
    t.plane_mu2 = {{0, 1, c1}, +c1};
    t.plane_reflected = {{0, 1, -c1}, -c1};
    return t;
}

/// Sampled geodesic of the ball model: the circular arc from e1 to e2
/// meeting the boundary sphere orthogonally (a diameter when e2 = -e1).
inline std::vector<std::array<double, 3>> ball_geodesic(const GeodesicH3& g, int n) {
    if (n < 2) throw std::invalid_argument("ball_geodesic: need at least 2 samples");
    g.require_valid();
    auto [e1, e2] = endpoints(g);
    const auto& p = e1.p;
    const auto& q = e2.p;
    double pq = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];

    std::vector<std::array<double, 3>> out;
    out.reserve(static_cast<size_t>(n));
    if (1.0 + pq < 1e-9) {
        // antipodal endpoints: straight diameter
        for (int i = 0; i < n; ++i) {
            double t = double(i) / (n - 1);
            out.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]),
                           p[2] + t * (q[2] - p[2])});
        }
        return out;
    }

    // centre of the orthogonal circle through p and q
    std::array<double, 3> c{(p[0] + q[0]) / (1 + pq), (p[1] + q[1]) / (1 + pq),
                            (p[2] + q[2]) / (1 + pq)};
    double r2 = c[0] * c[0] + c[1] * c[1] + c[2] * c[2] - 1.0;
    double r = std::sqrt(std::max(0.0, r2));
    std::array<double, 3> uhat{(p[0] - c[0]) / r, (p[1] - c[1]) / r, (p[2] - c[2]) / r};
    std::array<double, 3> w{q[0] - c[0], q[1] - c[1], q[2] - c[2]};
    double wu = w[0] * uhat[0] + w[1] * uhat[1] + w[2] * uhat[2];
    std::array<double, 3> vhat{w[0] - wu * uhat[0], w[1] - wu * uhat[1], w[2] - wu * uhat[2]};
    double vn = std::sqrt(vhat[0] * vhat[0] + vhat[1] * vhat[1] + vhat[2] * vhat[2]);
    for (auto& x : vhat) x /= vn;
    double theta = std::atan2(vn / r, wu / r);  // in (0, pi]
    for (int i = 0; i < n; ++i) {
        double a = theta * i / (n - 1);
        out.push_back({c[0] + r * (std::cos(a) * uhat[0] + std::sin(a) * vhat[0]),
                       c[1] + r * (std::cos(a) * uhat[1] + std::sin(a) * vhat[1]),
                       c[2] + r * (std::cos(a) * uhat[2] + std::sin(a) * vhat[2])});
    }
    return out;
}

}  // namespace nk::lh3
