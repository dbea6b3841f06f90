#pragma once

#include <array>
#include <stdexcept>

#include "nk/linalg.hpp"

// The flat model: Hodge star of the neutral metric on R^{2,2}, the
// self-dual / anti-self-dual split of 2-forms, totally null planes and
// their alpha/beta classification, the compatible complex structures J, J'
// with their symplectic forms, and the circle families P^eps_phi of
// totally null planes.

namespace nk::flat {

/// Coefficients of the self-dual part:
/// w+ = a1 Theta^1^Theta^2 + b1 Theta^3^Theta^4 + c1 (Theta^1^Theta^4 - Theta^2^Theta^3).
struct SDCoeffs {
    double a1 = 0, b1 = 0, c1 = 0;
};

/// Coefficients of the anti-self-dual part:
/// w- = a2 Theta^1^Theta^3 + b2 Theta^2^Theta^4 + c2 (Theta^1^Theta^4 + Theta^2^Theta^3).
struct ASDCoeffs {
    double a2 = 0, b2 = 0, c2 = 0;
};

inline Form2 sd_form(const SDCoeffs& s) {
    // storage order (12,13,14,23,24,34)
    return {{s.a1, 0, s.c1, -s.c1, 0, s.b1}, Basis::double_null};
}

inline Form2 asd_form(const ASDCoeffs& s) {
    return {{0, s.a2, s.c2, s.c2, s.b2, 0}, Basis::double_null};
}

inline std::array<Form2, 3> sd_basis() {
    return {sd_form({1, 0, 0}), sd_form({0, 1, 0}), sd_form({0, 0, 1})};
}

inline std::array<Form2, 3> asd_basis() {
    return {asd_form({1, 0, 0}), asd_form({0, 1, 0}), asd_form({0, 0, 1})};
}

/// Hodge star of the neutral metric, from its action on the double null
/// 2-form basis:
///   *(T1^T2) = T1^T2        *(T3^T4) = T3^T4
///   *(T1^T3) = -T1^T3       *(T2^T4) = -T2^T4
///   *(T1^T4) = -T2^T3       *(T2^T3) = -T1^T4
/// Input in either registered basis; the result is returned in the same
/// basis the input carried.
inline Form2 hodge_star(const Form2& w) {
    Basis src = w.basis;
    Form2 t = change_basis(w, Basis::double_null);
    // (c12,c13,c14,c23,c24,c34) -> (c12,-c13,-c23,-c14,-c24,c34)
    Form2 r({t.c[0], -t.c[1], -t.c[3], -t.c[2], -t.c[4], t.c[5]}, Basis::double_null);
    return change_basis(r, src);
}

/// w = w+ + w- with *w+ = w+ and *w- = -w-.
inline std::pair<SDCoeffs, ASDCoeffs> sd_asd_decompose(const Form2& w) {
    Form2 t = change_basis(w, Basis::double_null);
    SDCoeffs p{t.c[0], t.c[5], 0.5 * (t.c[2] - t.c[3])};
    ASDCoeffs m{t.c[1], t.c[4], 0.5 * (t.c[2] + t.c[3])};
    return {p, m};
}

inline Bilinear4 G(Basis b = Basis::coordinate) { return flat_metric(b); }

/// Every vector of the plane null and mutually orthogonal, within
/// null_tol * scale^2 where scale is the largest component magnitude.
inline bool is_totally_null(const Plane22& p, double null_tol = tol::null_tol) {
    Bilinear4 g = flat_metric(p.v.basis);
    double scale = std::max(p.v.max_abs(), p.w.max_abs());
    double lim = null_tol * scale * scale;
    return std::abs(g(p.v, p.v)) <= lim && std::abs(g(p.w, p.w)) <= lim &&
           std::abs(g(p.v, p.w)) <= lim;
}

enum class DualityClass { alpha, beta, not_null };

inline const char* to_string(DualityClass c) {
    switch (c) {
        case DualityClass::alpha: return "alpha";
        case DualityClass::beta: return "beta";
        case DualityClass::not_null: return "not_null";
    }
    return "?";
}

struct ClassReport {
    DualityClass cls;
    double sd_residual;   // max |w+_i(v,w)| / |v^w|
    double asd_residual;  // max |w-_i(v,w)| / |v^w|
};

/// Classify by evaluating the three explicit SD and three explicit ASD
/// basis forms on the spanning pair, residuals normalized by the Plucker
/// norm of v^w.
inline ClassReport classify_plane(const Plane22& p, double null_tol = tol::null_tol) {
    Vec4 v = change_basis(p.v, Basis::double_null);
    Vec4 w = change_basis(p.w, Basis::double_null);
    double scale = bivector_norm(v, w);
    double sd = 0, asd = 0;
    for (const Form2& f : sd_basis()) sd = std::max(sd, std::abs(f(v, w)));
    for (const Form2& f : asd_basis()) asd = std::max(asd, std::abs(f(v, w)));
    sd /= scale;
    asd /= scale;
    DualityClass cls = DualityClass::not_null;
    if (sd <= null_tol && asd <= null_tol)
        throw std::logic_error("classify_plane: rank-2 plane cannot kill both eigenspaces");
    if (sd <= null_tol)
        cls = DualityClass::alpha;
    else if (asd <= null_tol)
        cls = DualityClass::beta;
    return {cls, sd, asd};
}

inline DualityClass plane_duality_class(const Plane22& p, double null_tol = tol::null_tol) {
    return classify_plane(p, null_tol).cls;
}

/// Independent route: the metric-lowered bivector of an alpha plane is
/// anti-self-dual, of a beta plane self-dual.  Cross-validates the basis
/// evaluation route.
inline DualityClass plane_duality_class_star(const Plane22& p, double null_tol = tol::null_tol) {
    Vec4 v = change_basis(p.v, Basis::double_null);
    Vec4 w = change_basis(p.w, Basis::double_null);
    Bilinear4 g = flat_metric(Basis::double_null);
    Form2 b = lower_bivector(g, v, w);
    Form2 sb = hodge_star(b);
    double n = b.norm();
    double plus = (sb - b).norm() / n;    // 0 iff self-dual
    double minus = (sb + b).norm() / n;   // 0 iff anti-self-dual
    // residuals here are relative to the bivector norm; same tolerance scale
    double lim = 4.0 * null_tol;
    if (minus <= lim && plus <= lim)
        throw std::logic_error("plane_duality_class_star: degenerate bivector");
    if (minus <= lim) return DualityClass::alpha;  // lowered bivector ASD
    if (plus <= lim) return DualityClass::beta;
    return DualityClass::not_null;
}

/// J(X1,X2,X3,X4) = (-X2, X1, -X4, X3), coordinate basis.
inline Vec4 cx_structure_J(const Vec4& x) {
    require_same_basis(x.basis, Basis::coordinate, "cx_structure_J");
    return {-x[1], x[0], -x[3], x[2], Basis::coordinate};
}

/// J'(X1,X2,X3,X4) = (-X2, X1, X4, -X3), coordinate basis.
inline Vec4 cx_structure_Jp(const Vec4& x) {
    require_same_basis(x.basis, Basis::coordinate, "cx_structure_Jp");
    return {-x[1], x[0], x[3], -x[2], Basis::coordinate};
}

/// Omega = dx^1 ^ dx^2 - dx^3 ^ dx^4 (self-dual, Omega(v,w) = G(Jv,w)).
inline Form2 Omega() { return {{1, 0, 0, 0, 0, -1}, Basis::coordinate}; }

/// Omega' = dx^1 ^ dx^2 + dx^3 ^ dx^4 (anti-self-dual).
inline Form2 OmegaP() { return {{1, 0, 0, 0, 0, 1}, Basis::coordinate}; }

enum class HLMode { J_Omega, Jp_OmegaP };

/// Least-squares residual of writing x in span{v, w}, relative to |x|.
inline double span_residual(const Vec4& v, const Vec4& w, const Vec4& x) {
    double a = 0, b = 0, d = 0, pv = 0, pw = 0, xx = 0;
    for (int i = 0; i < 4; ++i) {
        a += v.c[i] * v.c[i];
        b += v.c[i] * w.c[i];
        d += w.c[i] * w.c[i];
        pv += v.c[i] * x.c[i];
        pw += w.c[i] * x.c[i];
        xx += x.c[i] * x.c[i];
    }
    double det = a * d - b * b;
    double cv = (d * pv - b * pw) / det;
    double cw = (a * pw - b * pv) / det;
    double r2 = 0;
    for (int i = 0; i < 4; ++i) {
        double e = x.c[i] - cv * v.c[i] - cw * w.c[i];
        r2 += e * e;
    }
    return std::sqrt(r2 / (xx > 0 ? xx : 1));
}

/// Holomorphic (J v, J w stay in the plane) and Lagrangian (Omega vanishes)
/// for the requested pair, with the primed pair for the second mode.
inline bool is_holomorphic_lagrangian(const Plane22& p, HLMode mode,
                                      double tolr = 1e-8) {
    Vec4 v = change_basis(p.v, Basis::coordinate);
    Vec4 w = change_basis(p.w, Basis::coordinate);
    Vec4 jv = (mode == HLMode::J_Omega) ? cx_structure_J(v) : cx_structure_Jp(v);
    Vec4 jw = (mode == HLMode::J_Omega) ? cx_structure_J(w) : cx_structure_Jp(w);
    Form2 om = (mode == HLMode::J_Omega) ? Omega() : OmegaP();
    bool holomorphic = span_residual(v, w, jv) <= tolr && span_residual(v, w, jw) <= tolr;
    bool lagrangian = std::abs(om(v, w)) <= tolr * bivector_norm(v, w);
    return holomorphic && lagrangian;
}

/// V^eps_phi(a,b) = (a cos phi + b sin phi, a sin phi - b cos phi, a, -eps b).
struct NullPlaneParam {
    int epsilon = +1;   // +1 or -1
    double phi = 0.0;   // [0, 2 pi)
};

inline Vec4 null_vector(const NullPlaneParam& p, double a, double b) {
    if (p.epsilon != 1 && p.epsilon != -1)
        throw std::invalid_argument("null_vector: epsilon must be +1 or -1");
    return {a * std::cos(p.phi) + b * std::sin(p.phi), a * std::sin(p.phi) - b * std::cos(p.phi),
            a, -static_cast<double>(p.epsilon) * b, Basis::coordinate};
}

/// span{V^eps_phi(1,0), V^eps_phi(0,1)}; alpha iff eps = +1.
inline Plane22 null_plane(const NullPlaneParam& p) {
    return {null_vector(p, 1, 0), null_vector(p, 0, 1)};
}

}  // namespace nk::flat
