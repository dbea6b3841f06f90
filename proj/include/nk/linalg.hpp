#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

// Small fixed-shape linear algebra for 4-dimensional charts: vectors,
// covectors, symmetric bilinear forms and antisymmetric 2-forms, with
// explicit basis bookkeeping.  Everything is a value type and every
// operation is pure.

namespace nk {

using cx = std::complex<double>;

struct basis_mismatch : std::invalid_argument {
    explicit basis_mismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct rank_deficient : std::invalid_argument {
    explicit rank_deficient(const std::string& what) : std::invalid_argument(what) {}
};
struct domain_violation : std::invalid_argument {
    explicit domain_violation(const std::string& what) : std::invalid_argument(what) {}
};

/// Which frame the components of a vector/covector/form refer to.
/// coordinate / double_null are the two registered frames on R^{2,2};
/// chart_tn / chart_lh3 tag the real charts (Re xi, Im xi, Re eta, Im eta)
/// and (Re mu1, Im mu1, Re mu2, Im mu2) of the curved models.
enum class Basis { coordinate, double_null, chart_tn, chart_lh3 };

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::coordinate: return "coordinate";
        case Basis::double_null: return "double-null";
        case Basis::chart_tn: return "chart-tn";
        case Basis::chart_lh3: return "chart-lh3";
    }
    return "?";
}

inline void require_same_basis(Basis a, Basis b, const char* op) {
    if (a != b)
        throw basis_mismatch(std::string(op) + ": basis mismatch (" + basis_name(a) +
                             " vs " + basis_name(b) + ")");
}

namespace tol {
// Relative tolerance for plane independence (singular value ratio).
inline constexpr double rank_tol = 1e-9;
// Scale-normalized tolerance for nullity / duality-class residuals.
inline constexpr double null_tol = 1e-10;
// Scale-normalized separation between vanishing and non-vanishing
// pullback residuals in surface classification.
inline constexpr double class_tol = 1e-6;
// Scale-normalized tolerance for finite-difference curvature identities.
inline constexpr double fd_tol = 1e-5;
// Anti-diagonal guard for L(H^3).
inline constexpr double diag_tol = 1e-10;
// Hyperbolic chart boundary: reject |xi| >= 1 - hyp_margin.
inline constexpr double hyp_margin = 1e-8;
}  // namespace tol

struct Vec4 {
    std::array<double, 4> c{};
    Basis basis = Basis::coordinate;

    Vec4() = default;
    Vec4(double c1, double c2, double c3, double c4, Basis b)
        : c{c1, c2, c3, c4}, basis(b) {}

    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<size_t>(i)]; }

    Vec4 operator+(const Vec4& o) const {
        require_same_basis(basis, o.basis, "Vec4+");
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3], basis};
    }
    Vec4 operator-(const Vec4& o) const {
        require_same_basis(basis, o.basis, "Vec4-");
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3], basis};
    }
    Vec4 operator*(double s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s, basis}; }

    double norm() const {
        return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
    }
    double max_abs() const {
        double m = 0;
        for (double x : c) m = std::max(m, std::abs(x));
        return m;
    }
};

inline Vec4 operator*(double s, const Vec4& v) { return v * s; }

struct Covec4 {
    std::array<double, 4> c{};
    Basis basis = Basis::coordinate;

    Covec4() = default;
    Covec4(double c1, double c2, double c3, double c4, Basis b)
        : c{c1, c2, c3, c4}, basis(b) {}

    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<size_t>(i)]; }

    Covec4 operator+(const Covec4& o) const {
        require_same_basis(basis, o.basis, "Covec4+");
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3], basis};
    }
    Covec4 operator-(const Covec4& o) const {
        require_same_basis(basis, o.basis, "Covec4-");
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3], basis};
    }
    Covec4 operator*(double s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s, basis}; }

    /// Natural pairing alpha(V).
    double operator()(const Vec4& v) const {
        require_same_basis(basis, v.basis, "Covec4(Vec4)");
        return c[0] * v.c[0] + c[1] * v.c[1] + c[2] * v.c[2] + c[3] * v.c[3];
    }
    double norm() const {
        return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]);
    }
};

inline Covec4 operator*(double s, const Covec4& a) { return a * s; }

/// Symmetric bilinear form on a 4-dimensional tangent space.
struct Bilinear4 {
    std::array<std::array<double, 4>, 4> m{};
    Basis basis = Basis::coordinate;

    Bilinear4() = default;
    Bilinear4(const std::array<std::array<double, 4>, 4>& mm, Basis b) : m(mm), basis(b) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < i; ++j)
                if (m[i][j] != m[j][i])
                    throw std::invalid_argument("Bilinear4: matrix not symmetric");
    }

    double operator()(const Vec4& v, const Vec4& w) const {
        require_same_basis(basis, v.basis, "Bilinear4(v,.)");
        require_same_basis(basis, w.basis, "Bilinear4(.,w)");
        double s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += m[i][j] * v.c[i] * w.c[j];
        return s;
    }

    double frobenius() const {
        double s = 0;
        for (auto& row : m)
            for (double x : row) s += x * x;
        return std::sqrt(s);
    }
};

/// Ordered index pairs for 2-form storage: (12,13,14,23,24,34).
inline constexpr std::array<std::array<int, 2>, 6> form2_pairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Antisymmetric 2-form, six components over theta^a ^ theta^b, a < b.
struct Form2 {
    std::array<double, 6> c{};
    Basis basis = Basis::coordinate;

    Form2() = default;
    Form2(const std::array<double, 6>& cc, Basis b) : c(cc), basis(b) {}

    double operator[](int i) const { return c[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c[static_cast<size_t>(i)]; }

    Form2 operator+(const Form2& o) const {
        require_same_basis(basis, o.basis, "Form2+");
        Form2 r;
        r.basis = basis;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Form2 operator-(const Form2& o) const {
        require_same_basis(basis, o.basis, "Form2-");
        Form2 r;
        r.basis = basis;
        for (int i = 0; i < 6; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Form2 operator*(double s) const {
        Form2 r = *this;
        for (double& x : r.c) x *= s;
        return r;
    }

    /// omega(V, W) = sum_{a<b} c_ab (V^a W^b - V^b W^a).
    double operator()(const Vec4& v, const Vec4& w) const {
        require_same_basis(basis, v.basis, "Form2(v,.)");
        require_same_basis(basis, w.basis, "Form2(.,w)");
        double s = 0;
        for (int k = 0; k < 6; ++k) {
            int a = form2_pairs[k][0], b = form2_pairs[k][1];
            s += c[k] * (v.c[a] * w.c[b] - v.c[b] * w.c[a]);
        }
        return s;
    }

    double norm() const {
        double s = 0;
        for (double x : c) s += x * x;
        return std::sqrt(s);
    }
};

inline Form2 operator*(double s, const Form2& f) { return f * s; }

/// wedge(a, b)(V, W) = a(V) b(W) - a(W) b(V).
inline Form2 wedge(const Covec4& a, const Covec4& b) {
    require_same_basis(a.basis, b.basis, "wedge");
    Form2 r;
    r.basis = a.basis;
    for (int k = 0; k < 6; ++k) {
        int i = form2_pairs[k][0], j = form2_pairs[k][1];
        r.c[k] = a.c[i] * b.c[j] - a.c[j] * b.c[i];
    }
    return r;
}

/// Plucker components of v ^ w (same storage order as Form2).
inline std::array<double, 6> bivector(const Vec4& v, const Vec4& w) {
    require_same_basis(v.basis, w.basis, "bivector");
    std::array<double, 6> r{};
    for (int k = 0; k < 6; ++k) {
        int a = form2_pairs[k][0], b = form2_pairs[k][1];
        r[k] = v.c[a] * w.c[b] - v.c[b] * w.c[a];
    }
    return r;
}

inline double bivector_norm(const Vec4& v, const Vec4& w) {
    auto b = bivector(v, w);
    double s = 0;
    for (double x : b) s += x * x;
    return std::sqrt(s);
}

// --- change of basis on R^{2,2} ---------------------------------------------
//
// Theta^1 = dx^1 + dx^3, Theta^2 = dx^2 - dx^4,
// Theta^3 = -dx^2 - dx^4, Theta^4 = dx^1 - dx^3.

namespace detail {

using Mat4 = std::array<std::array<double, 4>, 4>;

// theta_from_dx[a][b]: Theta^a = sum_b M[a][b] dx^b
inline constexpr Mat4 theta_from_dx{{{1, 0, 1, 0}, {0, 1, 0, -1}, {0, -1, 0, -1}, {1, 0, -1, 0}}};
// dx_from_theta[b][a]: dx^b = sum_a Minv[b][a] Theta^a
inline constexpr Mat4 dx_from_theta{
    {{0.5, 0, 0, 0.5}, {0, 0.5, -0.5, 0}, {0.5, 0, 0, -0.5}, {0, -0.5, -0.5, 0}}};

inline std::array<double, 4> matvec(const Mat4& m, const std::array<double, 4>& x) {
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[i][j] * x[j];
    return r;
}

inline std::array<double, 4> matTvec(const Mat4& m, const std::array<double, 4>& x) {
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += m[j][i] * x[j];
    return r;
}

// 2-form coefficients rewritten through S, where the source basis covectors
// expand as src^c = sum_a S[c][a] tgt^a.
inline std::array<double, 6> form_transform(const std::array<double, 6>& c, const Mat4& s) {
    std::array<double, 6> r{};
    for (int kt = 0; kt < 6; ++kt) {
        int a = form2_pairs[kt][0], b = form2_pairs[kt][1];
        double acc = 0;
        for (int ks = 0; ks < 6; ++ks) {
            int cc = form2_pairs[ks][0], d = form2_pairs[ks][1];
            acc += c[ks] * (s[cc][a] * s[d][b] - s[cc][b] * s[d][a]);
        }
        r[kt] = acc;
    }
    return r;
}

inline void require_r22(Basis b, const char* op) {
    if (b != Basis::coordinate && b != Basis::double_null)
        throw basis_mismatch(std::string(op) + ": basis " + basis_name(b) +
                             " has no registered transformations");
}

}  // namespace detail

inline Vec4 change_basis(const Vec4& v, Basis to) {
    detail::require_r22(v.basis, "change_basis(Vec4)");
    detail::require_r22(to, "change_basis(Vec4)");
    if (v.basis == to) return v;
    // frame components: tilde V = M . V_coord, V_coord = Minv . tilde V
    auto r = (to == Basis::double_null) ? detail::matvec(detail::theta_from_dx, v.c)
                                        : detail::matvec(detail::dx_from_theta, v.c);
    return {r[0], r[1], r[2], r[3], to};
}

inline Covec4 change_basis(const Covec4& a, Basis to) {
    detail::require_r22(a.basis, "change_basis(Covec4)");
    detail::require_r22(to, "change_basis(Covec4)");
    if (a.basis == to) return a;
    // coordinate comps = M^T theta comps; theta comps = Minv^T coordinate comps
    auto r = (to == Basis::coordinate) ? detail::matTvec(detail::theta_from_dx, a.c)
                                       : detail::matTvec(detail::dx_from_theta, a.c);
    return {r[0], r[1], r[2], r[3], to};
}

inline Form2 change_basis(const Form2& f, Basis to) {
    detail::require_r22(f.basis, "change_basis(Form2)");
    detail::require_r22(to, "change_basis(Form2)");
    if (f.basis == to) return f;
    auto r = (to == Basis::double_null) ? detail::form_transform(f.c, detail::dx_from_theta)
                                        : detail::form_transform(f.c, detail::theta_from_dx);
    return {r, to};
}

inline Bilinear4 change_basis(const Bilinear4& g, Basis to) {
    detail::require_r22(g.basis, "change_basis(Bilinear4)");
    detail::require_r22(to, "change_basis(Bilinear4)");
    if (g.basis == to) return g;
    // g_tgt = S^T g_src S with src^c = S[c][a] tgt^a
    const auto& s = (to == Basis::double_null) ? detail::dx_from_theta : detail::theta_from_dx;
    std::array<std::array<double, 4>, 4> r{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            double acc = 0;
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) acc += s[c][a] * g.m[c][d] * s[d][b];
            r[a][b] = acc;
        }
    return {r, to};
}

/// ds^2 = (dx^1)^2 + (dx^2)^2 - (dx^3)^2 - (dx^4)^2 in the requested basis.
inline Bilinear4 flat_metric(Basis b = Basis::coordinate) {
    if (b == Basis::coordinate)
        return {{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}}, b};
    if (b == Basis::double_null)
        return {{{{0, 0, 0, 0.5}, {0, 0, -0.5, 0}, {0, -0.5, 0, 0}, {0.5, 0, 0, 0}}}, b};
    throw basis_mismatch("flat_metric: only defined on R^{2,2} bases");
}

inline double eval_bilinear(const Bilinear4& g, const Vec4& v, const Vec4& w) {
    return g(v, w);
}

// --- generic dense helpers ---------------------------------------------------

namespace detail {

/// Gauss-Jordan inverse with partial pivoting; also reports det.
template <typename T>
bool invert4(const std::array<std::array<T, 4>, 4>& a, std::array<std::array<T, 4>, 4>& inv,
             T& det) {
    std::array<std::array<T, 8>, 4> w{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) w[i][j] = a[i][j];
        w[i][4 + i] = T(1);
    }
    det = T(1);
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        double best = std::abs(w[col][col]);
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(w[r][col]) > best) {
                best = std::abs(w[r][col]);
                piv = r;
            }
        if (best < 1e-300) return false;
        if (piv != col) {
            std::swap(w[piv], w[col]);
            det = -det;
        }
        det *= w[col][col];
        T d = w[col][col];
        for (int j = 0; j < 8; ++j) w[col][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col) continue;
            T f = w[r][col];
            if (f == T(0)) continue;
            for (int j = 0; j < 8; ++j) w[r][j] -= f * w[col][j];
        }
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = w[i][4 + j];
    return true;
}

inline constexpr int levi_civita(int a, int b, int c, int d) {
    int p[4] = {a, b, c, d};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) sign = -sign;
        }
    return sign;
}

}  // namespace detail

/// Hodge star on 2-forms built numerically from a metric and an orientation.
/// orientation_sign = +1 declares the working basis positively oriented;
/// the star matrix acts on Form2 coefficient vectors in that basis.
struct StarOperator {
    std::array<std::array<double, 6>, 6> m{};
    Basis basis = Basis::coordinate;

    Form2 operator()(const Form2& f) const {
        require_same_basis(basis, f.basis, "StarOperator");
        Form2 r;
        r.basis = basis;
        for (int i = 0; i < 6; ++i) {
            double s = 0;
            for (int j = 0; j < 6; ++j) s += m[i][j] * f.c[j];
            r.c[i] = s;
        }
        return r;
    }
};

inline StarOperator star_from_metric(const Bilinear4& g, double orientation_sign) {
    std::array<std::array<double, 4>, 4> ginv{};
    double det = 0;
    if (!detail::invert4(g.m, ginv, det))
        throw std::invalid_argument("star_from_metric: degenerate metric");
    double vol = orientation_sign * std::sqrt(std::abs(det));

    StarOperator st;
    st.basis = g.basis;
    // (*w)_{ab} = (vol/2) eps_{abcd} w^{cd},  w^{cd} = g^{ce} g^{df} w_{ef}
    for (int i = 0; i < 6; ++i) {
        int a = form2_pairs[i][0], b = form2_pairs[i][1];
        for (int j = 0; j < 6; ++j) {
            int e = form2_pairs[j][0], f = form2_pairs[j][1];
            double acc = 0;
            for (int cc = 0; cc < 4; ++cc)
                for (int d = 0; d < 4; ++d) {
                    int eps = detail::levi_civita(a, b, cc, d);
                    if (!eps) continue;
                    acc += eps * (ginv[cc][e] * ginv[d][f] - ginv[cc][f] * ginv[d][e]);
                }
            st.m[i][j] = 0.5 * vol * acc;
        }
    }
    return st;
}

/// Lowered bivector (v ^ w)_flat: beta_ab = g_ac g_bd (v^c w^d - v^d w^c).
inline Form2 lower_bivector(const Bilinear4& g, const Vec4& v, const Vec4& w) {
    require_same_basis(g.basis, v.basis, "lower_bivector");
    require_same_basis(g.basis, w.basis, "lower_bivector");
    auto biv = bivector(v, w);
    std::array<std::array<double, 4>, 4> full{};
    for (int k = 0; k < 6; ++k) {
        int a = form2_pairs[k][0], b = form2_pairs[k][1];
        full[a][b] = biv[k];
        full[b][a] = -biv[k];
    }
    Form2 r;
    r.basis = g.basis;
    for (int k = 0; k < 6; ++k) {
        int a = form2_pairs[k][0], b = form2_pairs[k][1];
        double acc = 0;
        for (int cc = 0; cc < 4; ++cc)
            for (int d = 0; d < 4; ++d) acc += g.m[a][cc] * g.m[b][d] * full[cc][d];
        r.c[k] = acc;
    }
    return r;
}

// --- complex covectors and 2-forms over a real chart (x1+ix2, x3+ix4) -------

/// alpha dz1 + beta dz2 as a pair of real covectors (real and imaginary
/// parts), where z1 = x1 + i x2 and z2 = x3 + i x4 are the complex chart
/// coordinates.
struct CxCovec4 {
    Covec4 re, im;

    CxCovec4(cx alpha, cx beta, Basis b)
        : re(alpha.real(), -alpha.imag(), beta.real(), -beta.imag(), b),
          im(alpha.imag(), alpha.real(), beta.imag(), beta.real(), b) {}
};

struct CxForm2 {
    Form2 re, im;

    explicit CxForm2(Basis b = Basis::coordinate) {
        re.basis = b;
        im.basis = b;
    }
    CxForm2(const Form2& r, const Form2& i) : re(r), im(i) {}

    CxForm2 operator+(const CxForm2& o) const { return {re + o.re, im + o.im}; }
    CxForm2 operator*(cx z) const {
        return {re * z.real() - im * z.imag(), re * z.imag() + im * z.real()};
    }
    CxForm2 conj() const { return {re, im * -1.0}; }

    /// value on a real vector pair
    cx operator()(const Vec4& v, const Vec4& w) const { return {re(v, w), im(v, w)}; }
};

inline CxForm2 wedge_c(const CxCovec4& a, const CxCovec4& b) {
    return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}

/// a ^ conj(b)
inline CxForm2 wedge_conj(const CxCovec4& a, const CxCovec4& b) {
    return {wedge(a.re, b.re) + wedge(a.im, b.im), wedge(a.im, b.re) - wedge(a.re, b.im)};
}

/// Real part of a complex 2-form known to be real; asserts the imaginary
/// part vanished.
inline Form2 real_form(const CxForm2& f) {
    if (f.im.norm() > 1e-12 * (1.0 + f.re.norm()))
        throw std::logic_error("real_form: form has a non-vanishing imaginary part");
    return f.re;
}

/// Singular values of the 4x2 matrix [v w] via its 2x2 Gram matrix.
inline std::array<double, 2> plane_singular_values(const Vec4& v, const Vec4& w) {
    double a = 0, b = 0, d = 0;
    for (int i = 0; i < 4; ++i) {
        a += v.c[i] * v.c[i];
        b += v.c[i] * w.c[i];
        d += w.c[i] * w.c[i];
    }
    double tr = a + d;
    double disc = std::sqrt(std::max(0.0, (a - d) * (a - d) + 4 * b * b));
    double l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    return {std::sqrt(std::max(0.0, l1)), std::sqrt(std::max(0.0, l2))};
}

/// 2-plane spanned by two vectors; construction enforces numerical rank 2.
struct Plane22 {
    Vec4 v, w;

    Plane22(const Vec4& vv, const Vec4& ww) : v(vv), w(ww) {
        require_same_basis(v.basis, w.basis, "Plane22");
        auto sv = plane_singular_values(v, w);
        if (sv[0] <= 0 || sv[1] <= tol::rank_tol * sv[0])
            throw rank_deficient("Plane22: spanning vectors are numerically dependent");
    }
};

}  // namespace nk
