#pragma once

#include <array>
#include <functional>
#include <vector>

#include "nk/geodesic_spaces.hpp"
#include "nk/linalg.hpp"
#include "nk/tn_bundle.hpp"

// Finite-difference curvature kernel for 4-dimensional metric fields:
// Christoffel symbols, the Riemann/Ricci/scalar curvature, and the SD/ASD
// Weyl blocks measured against the metric's own Hodge star.  Used to verify
// anti-self-duality and conformal flatness of the TN and L(H^3) metrics.

namespace nk::curv {

using Point4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Gamma = std::array<Mat4, 4>;              // Gamma[a][b][c]
using Riem4 = std::array<std::array<Mat4, 4>, 4>;  // R[a][b][c][d], lowered

struct MetricField {
    std::function<Bilinear4(const Point4&)> g;
    std::function<bool(const Point4&)> domain = [](const Point4&) { return true; };
    /// optional analytic first derivatives: dg[c] = d g / d x^c
    std::function<std::array<Mat4, 4>(const Point4&)> dg;
    /// sign s such that the positive volume form is s sqrt|det g| dx^1..dx^4
    double orientation_sign = 1.0;
    /// base step for Christoffel derivatives (one Richardson level on top)
    double base_step = 1e-4;
    /// step for the metric first derivatives when dg is not supplied
    double dg_step = 1e-5;
    /// apply one Richardson extrapolation level to d Gamma
    bool richardson = true;

    void require_domain(const Point4& x) const {
        if (!domain(x)) throw domain_violation("MetricField: point outside chart domain");
    }
};

namespace detail {

inline std::array<Mat4, 4> fd_dg(const MetricField& m, const Point4& x) {
    std::array<Mat4, 4> out{};
    for (int c = 0; c < 4; ++c) {
        double h = m.dg_step * (1.0 + std::abs(x[c]));
        auto at = [&](double step) {
            Point4 y = x;
            y[c] += step;
            return m.g(y).m;
        };
        Mat4 p1 = at(h), m1 = at(-h), p2 = at(2 * h), m2 = at(-2 * h);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                out[c][i][j] = (8.0 * (p1[i][j] - m1[i][j]) - (p2[i][j] - m2[i][j])) / (12.0 * h);
    }
    return out;
}

}  // namespace detail

/// Levi-Civita connection coefficients Gamma^a_{bc}.
inline Gamma christoffel(const MetricField& m, const Point4& x) {
    m.require_domain(x);
    Mat4 g = m.g(x).m;
    Mat4 ginv{};
    double det = 0;
    if (!nk::detail::invert4(g, ginv, det) || std::abs(det) < 1e-12)
        throw domain_violation("christoffel: metric degenerate at evaluation point");
    auto dg = m.dg ? m.dg(x) : detail::fd_dg(m, x);
    Gamma out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = b; c < 4; ++c) {
                double s = 0;
                for (int d = 0; d < 4; ++d)
                    s += 0.5 * ginv[a][d] * (dg[b][d][c] + dg[c][b][d] - dg[d][b][c]);
                out[a][b][c] = s;
                out[a][c][b] = s;
            }
    return out;
}

/// max |d_c g_ab - Gamma^e_ca g_eb - Gamma^e_cb g_ae| / |g|: the metric
/// compatibility residual, with an independent finite difference for d g.
inline double metric_compatibility_residual(const MetricField& m, const Point4& x) {
    Mat4 g = m.g(x).m;
    auto dg = detail::fd_dg(m, x);
    Gamma gam = christoffel(m, x);
    double worst = 0, scale = 0;
    for (auto& row : g)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                double r = dg[c][a][b];
                for (int e = 0; e < 4; ++e) r -= gam[e][c][a] * g[e][b] + gam[e][c][b] * g[a][e];
                worst = std::max(worst, std::abs(r));
            }
    return worst / (scale > 0 ? scale : 1.0);
}

struct CurvatureReport {
    Riem4 riemann{};   // lowered R_{abcd}
    Mat4 ricci{};
    double scalar = 0;
    Riem4 weyl{};      // lowered C_{abcd}
    double weyl_plus_norm = 0;
    double weyl_minus_norm = 0;
    double riemann_scale = 0;           // max |R_{abcd}|
    double bianchi_residual = 0;        // |R_{a[bcd]}| / scale
    double pair_symmetry_residual = 0;  // |R_{abcd} - R_{cdab}| / scale
};

namespace detail {

/// d Gamma / d x^c by central differences with one Richardson level.
inline std::array<Gamma, 4> dgamma(const MetricField& m, const Point4& x) {
    std::array<Gamma, 4> out{};
    for (int c = 0; c < 4; ++c) {
        double h = m.base_step * (1.0 + std::abs(x[c]));
        auto diff = [&](double step) {
            Point4 xp = x, xm = x;
            xp[c] += step;
            xm[c] -= step;
            Gamma gp = christoffel(m, xp), gm = christoffel(m, xm);
            Gamma d{};
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int e = 0; e < 4; ++e)
                        d[a][b][e] = (gp[a][b][e] - gm[a][b][e]) / (2 * step);
            return d;
        };
        if (m.richardson) {
            Gamma d1 = diff(h), d2 = diff(h / 2);
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    for (int e = 0; e < 4; ++e)
                        out[c][a][b][e] = (4.0 * d2[a][b][e] - d1[a][b][e]) / 3.0;
        } else {
            out[c] = diff(h);
        }
    }
    return out;
}

/// Deterministic pseudo-orthonormal frame (+,+,-,-) for g, seeded by the
/// chart axes and their pairwise sums.
struct Frame {
    std::array<std::array<double, 4>, 4> e{};  // e[a] = frame vector components
    double det = 0;                            // det of the frame matrix
};

inline Frame pseudo_orthonormal_frame(const Mat4& g) {
    auto ip = [&](const std::array<double, 4>& v, const std::array<double, 4>& w) {
        double s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += g[i][j] * v[i] * w[j];
        return s;
    };
    double gscale = 0;
    for (auto& row : g)
        for (double v : row) gscale = std::max(gscale, std::abs(v));

    std::vector<std::array<double, 4>> candidates;
    for (int i = 0; i < 4; ++i) {
        std::array<double, 4> v{};
        v[i] = 1;
        candidates.push_back(v);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (double s : {1.0, -1.0}) {
                std::array<double, 4> v{};
                v[i] = 1;
                v[j] = s;
                candidates.push_back(v);
            }

    // greedy pivoted Gram-Schmidt: at each step take the candidate whose
    // projection has the largest |q| relative to its euclidean size
    std::vector<std::array<double, 4>> accepted;
    std::vector<double> signs;
    while (accepted.size() < 4) {
        double best = 0;
        std::array<double, 4> bestv{};
        double bestq = 0;
        for (auto v : candidates) {
            for (size_t k = 0; k < accepted.size(); ++k) {
                double c = signs[k] * ip(v, accepted[k]);
                for (int i = 0; i < 4; ++i) v[i] -= c * accepted[k][i];
            }
            double q = ip(v, v);
            double vnorm2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
            if (vnorm2 < 1e-20) continue;
            double merit = std::abs(q) / (gscale * vnorm2);
            if (merit > best) {
                best = merit;
                bestv = v;
                bestq = q;
            }
        }
        if (best < 1e-8)
            throw domain_violation("pseudo_orthonormal_frame: frame construction failed");
        double s = std::sqrt(std::abs(bestq));
        for (double& c : bestv) c /= s;
        accepted.push_back(bestv);
        signs.push_back(bestq > 0 ? 1.0 : -1.0);
    }

    Frame f;
    int pos = 0, neg = 2;
    for (size_t k = 0; k < 4; ++k) {
        if (signs[k] > 0) {
            if (pos > 1) throw domain_violation("pseudo_orthonormal_frame: signature not (2,2)");
            f.e[pos++] = accepted[k];
        } else {
            if (neg > 3) throw domain_violation("pseudo_orthonormal_frame: signature not (2,2)");
            f.e[neg++] = accepted[k];
        }
    }
    if (pos != 2 || neg != 4)
        throw domain_violation("pseudo_orthonormal_frame: signature not (2,2)");
    Mat4 em{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) em[i][j] = f.e[j][i];  // columns are frame vectors
    Mat4 tmp{};
    double det = 0;
    nk::detail::invert4(em, tmp, det);
    f.det = det;
    return f;
}

}  // namespace detail

inline CurvatureReport riemann_report(const MetricField& m, const Point4& x) {
    m.require_domain(x);
    Mat4 g = m.g(x).m;
    Mat4 ginv{};
    double det = 0;
    if (!nk::detail::invert4(g, ginv, det) || std::abs(det) < 1e-12)
        throw domain_violation("riemann_report: metric degenerate at evaluation point");

    Gamma gam = christoffel(m, x);
    auto dgam = detail::dgamma(m, x);

    // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma^a_{ce} Gamma^e_{db}
    //             - Gamma^a_{de} Gamma^e_{cb}
    Riem4 rup{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    double s = dgam[c][a][d][b] - dgam[d][a][c][b];
                    for (int e = 0; e < 4; ++e)
                        s += gam[a][c][e] * gam[e][d][b] - gam[a][d][e] * gam[e][c][b];
                    rup[a][b][c][d] = s;
                }

    CurvatureReport rep;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    double s = 0;
                    for (int e = 0; e < 4; ++e) s += g[a][e] * rup[e][b][c][d];
                    rep.riemann[a][b][c][d] = s;
                    rep.riemann_scale = std::max(rep.riemann_scale, std::abs(s));
                }

    for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d) {
            double s = 0;
            for (int a = 0; a < 4; ++a) s += rup[a][b][a][d];
            rep.ricci[b][d] = s;
        }
    for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d) rep.scalar += ginv[b][d] * rep.ricci[b][d];

    // Weyl in four dimensions
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    double w = rep.riemann[a][b][c][d];
                    w -= 0.5 * (g[a][c] * rep.ricci[b][d] - g[a][d] * rep.ricci[b][c] +
                                g[b][d] * rep.ricci[a][c] - g[b][c] * rep.ricci[a][d]);
                    w += rep.scalar / 6.0 * (g[a][c] * g[b][d] - g[a][d] * g[b][c]);
                    rep.weyl[a][b][c][d] = w;
                }

    // identities
    double scale = rep.riemann_scale > 0 ? rep.riemann_scale : 1.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    double bianchi = rep.riemann[a][b][c][d] + rep.riemann[a][c][d][b] +
                                     rep.riemann[a][d][b][c];
                    rep.bianchi_residual = std::max(rep.bianchi_residual, std::abs(bianchi) / scale);
                    rep.pair_symmetry_residual =
                        std::max(rep.pair_symmetry_residual,
                                 std::abs(rep.riemann[a][b][c][d] - rep.riemann[c][d][a][b]) / scale);
                }

    // Weyl operator blocks in a pseudo-orthonormal frame
    auto frame = detail::pseudo_orthonormal_frame(g);
    std::array<std::array<double, 6>, 6> cf{};  // lowered Weyl on frame 2-form pairs
    for (int i = 0; i < 6; ++i) {
        int a = form2_pairs[i][0], b = form2_pairs[i][1];
        for (int j = 0; j < 6; ++j) {
            int c = form2_pairs[j][0], d = form2_pairs[j][1];
            double s = 0;
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    for (int r = 0; r < 4; ++r)
                        for (int t = 0; t < 4; ++t)
                            s += rep.weyl[p][q][r][t] * frame.e[a][p] * frame.e[b][q] *
                                 frame.e[c][r] * frame.e[d][t];
            cf[i][j] = s;
        }
    }
    // raise the second pair with eta = diag(1,1,-1,-1)
    auto eta = [](int i) { return i < 2 ? 1.0 : -1.0; };
    std::array<std::array<double, 6>, 6> wop{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            int c = form2_pairs[j][0], d = form2_pairs[j][1];
            wop[i][j] = cf[i][j] * eta(c) * eta(d);
        }
    double s_frame = m.orientation_sign * (frame.det > 0 ? 1.0 : -1.0);
    StarOperator st = star_from_metric(flat_metric(Basis::coordinate), s_frame);
    auto apply = [&](const std::array<std::array<double, 6>, 6>& a,
                     const std::array<std::array<double, 6>, 6>& b) {
        std::array<std::array<double, 6>, 6> r{};
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                double s = 0;
                for (int k = 0; k < 6; ++k) s += a[i][k] * b[k][j];
                r[i][j] = s;
            }
        return r;
    };
    std::array<std::array<double, 6>, 6> pp{}, pm{};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            pp[i][j] = 0.5 * ((i == j ? 1.0 : 0.0) + st.m[i][j]);
            pm[i][j] = 0.5 * ((i == j ? 1.0 : 0.0) - st.m[i][j]);
        }
    auto bp = apply(pp, apply(wop, pp));
    auto bm = apply(pm, apply(wop, pm));
    double np = 0, nm = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            np += bp[i][j] * bp[i][j];
            nm += bm[i][j] * bm[i][j];
        }
    // conformal weight normalization: invariant under constant rescaling
    double weight = std::pow(std::abs(det), 0.25);
    rep.weyl_plus_norm = std::sqrt(np) * weight;
    rep.weyl_minus_norm = std::sqrt(nm) * weight;
    return rep;
}

struct AsdReport {
    double max_weyl_plus = 0;
    double max_weyl_minus = 0;
};

inline AsdReport check_asd(const MetricField& m, const std::vector<Point4>& points) {
    if (points.empty()) throw std::invalid_argument("check_asd: empty sample set");
    AsdReport r;
    for (const auto& x : points) {
        auto rep = riemann_report(m, x);
        r.max_weyl_plus = std::max(r.max_weyl_plus, rep.weyl_plus_norm);
        r.max_weyl_minus = std::max(r.max_weyl_minus, rep.weyl_minus_norm);
    }
    return r;
}

/// The complex Weyl component C_{z1 zbar1}^{z2 zbar2} at x, where
/// z1 = x^1 + i x^2 and z2 = x^3 + i x^4 (for TN-wrapped fields this is the
/// component W_{xi xibar}^{eta etabar}); frame-independent cross-check
/// against tn::weyl_component.
inline cx weyl_component_complex(const MetricField& m, const Point4& x) {
    auto rep = riemann_report(m, x);
    Mat4 g = m.g(x).m;
    // complex frame b = (Z1, Zbar1, Z2, Zbar2), Z = (d/dx - i d/dy)/2
    std::array<std::array<cx, 4>, 4> b{};
    b[0] = {cx(0.5, 0), cx(0, -0.5), 0, 0};
    b[1] = {cx(0.5, 0), cx(0, 0.5), 0, 0};
    b[2] = {0, 0, cx(0.5, 0), cx(0, -0.5)};
    b[3] = {0, 0, cx(0.5, 0), cx(0, 0.5)};
    std::array<std::array<cx, 4>, 4> gc{}, gcinv{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            cx s = 0;
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q) s += g[p][q] * b[i][p] * b[j][q];
            gc[i][j] = s;
        }
    cx det;
    if (!nk::detail::invert4(gc, gcinv, det))
        throw domain_violation("weyl_component_complex: degenerate complexified metric");
    // C_{01 mu nu} in the complex frame
    std::array<std::array<cx, 4>, 4> c01{};
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            cx s = 0;
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    for (int r = 0; r < 4; ++r)
                        for (int t = 0; t < 4; ++t)
                            s += rep.weyl[p][q][r][t] * b[0][p] * b[1][q] * b[mu][r] * b[nu][t];
            c01[mu][nu] = s;
        }
    cx out = 0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) out += c01[mu][nu] * gcinv[mu][2] * gcinv[nu][3];
    return out;
}

// --- concrete metric fields -----------------------------------------------------

/// TN metric in the real chart (Re xi, Im xi, Re eta, Im eta).
inline MetricField tn_metric_field(const tn::ConformalGeometry& geom) {
    MetricField m;
    m.g = [geom](const Point4& x) {
        return tn::metric_G(geom, {cx(x[0], x[1]), cx(x[2], x[3])});
    };
    m.domain = [geom](const Point4& x) { return geom.domain(cx(x[0], x[1])); };
    m.orientation_sign = tn::chart_orientation;
    return m;
}

/// L(H^3) metric in the real chart (Re mu1, Im mu1, Re mu2, Im mu2).
inline MetricField lh3_metric_field() {
    MetricField m;
    m.g = [](const Point4& x) {
        return lh3::metric_LH3({cx(x[0], x[1]), cx(x[2], x[3])});
    };
    m.domain = [](const Point4& x) {
        return lh3::GeodesicH3{cx(x[0], x[1]), cx(x[2], x[3])}.valid();
    };
    m.orientation_sign = lh3::chart_orientation;
    return m;
}

/// Flat neutral metric written in curvilinear coordinates (the pullback of
/// diag(1,1,-1,-1) under a polynomial chart map): exactly zero curvature,
/// non-constant coefficients.  Carries analytic first derivatives.
inline MetricField warped_flat_field(double eps = 0.1) {
    auto jac = [eps](const Point4& x) {
        Mat4 j{};
        // phi1 = x1 + e(x2^2/2 + x3 x4/3), phi2 = x2 + e x1 x3 / 2,
        // phi3 = x3 + e(x1 x2 /2 - x4^2/4), phi4 = x4 + e(x1^2/2 + x2 x3/3)
        j[0] = {1, eps * x[1], eps * x[3] / 3, eps * x[2] / 3};
        j[1] = {eps * x[2] / 2, 1, eps * x[0] / 2, 0};
        j[2] = {eps * x[1] / 2, eps * x[0] / 2, 1, -eps * x[3] / 2};
        j[3] = {eps * x[0], eps * x[2] / 3, eps * x[1] / 3, 1};
        return j;
    };
    // second derivatives d j[a][b] / d x^c, constant in x
    auto djac = [eps](int a, int b, int c) -> double {
        // from the jacobian rows above
        static const int idx[4][4] = {{-1, 1, 3, 2}, {2, -1, 0, -1}, {1, 0, -1, 3}, {0, 2, 1, -1}};
        static const double coef[4][4] = {{0, 1, 1.0 / 3, 1.0 / 3},
                                          {0.5, 0, 0.5, 0},
                                          {0.5, 0.5, 0, -0.5},
                                          {1, 1.0 / 3, 1.0 / 3, 0}};
        if (idx[a][b] != c) return 0.0;
        return eps * coef[a][b];
    };
    const double G[4] = {1, 1, -1, -1};
    MetricField m;
    m.g = [jac, G](const Point4& x) {
        Mat4 j = jac(x);
        Mat4 out{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                double s = 0;
                for (int k = 0; k < 4; ++k) s += G[k] * j[k][a] * j[k][b];
                out[a][b] = s;
            }
        return Bilinear4{out, Basis::coordinate};
    };
    m.dg = [jac, djac, G](const Point4& x) {
        Mat4 j = jac(x);
        std::array<Mat4, 4> out{};
        for (int c = 0; c < 4; ++c)
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    double s = 0;
                    for (int k = 0; k < 4; ++k)
                        s += G[k] * (djac(k, a, c) * j[k][b] + j[k][a] * djac(k, b, c));
                    out[c][a][b] = s;
                }
        return out;
    };
    m.orientation_sign = 1.0;
    return m;
}

}  // namespace nk::curv
