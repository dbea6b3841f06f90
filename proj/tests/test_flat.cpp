#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nk/flat.hpp"
#include "nk/rng.hpp"

using namespace nk;
using namespace nk::flat;

static Form2 theta_wedge(int a, int b) {
    Covec4 ta(0, 0, 0, 0, Basis::double_null), tb(0, 0, 0, 0, Basis::double_null);
    ta[a] = 1;
    tb[b] = 1;
    return wedge(ta, tb);
}

TEST_CASE("hodge star reproduces the double-null table exactly") {
    auto expect = [](const Form2& in, const Form2& out) {
        Form2 s = hodge_star(in);
        for (int i = 0; i < 6; ++i) CHECK(s[i] == out[i]);
    };
    expect(theta_wedge(0, 3), theta_wedge(1, 2) * -1.0);   // *(T1^T4) = -T2^T3
    expect(theta_wedge(1, 3), theta_wedge(1, 3) * -1.0);   // *(T2^T4) = -T2^T4
    expect(theta_wedge(0, 2), theta_wedge(0, 2) * -1.0);   // *(T1^T3) = -T1^T3
    expect(theta_wedge(2, 3), theta_wedge(2, 3));          // *(T3^T4) = T3^T4
    expect(theta_wedge(0, 1), theta_wedge(0, 1));          // *(T1^T2) = T1^T2
    expect(theta_wedge(1, 2), theta_wedge(0, 3) * -1.0);   // involution partner
}

TEST_CASE("hodge star is an involution") {
    Rng rng(3);
    for (int k = 0; k < 10000; ++k) {
        Form2 f({rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2)},
                Basis::double_null);
        Form2 ss = hodge_star(hodge_star(f));
        CHECK((ss - f).norm() <= 1e-13 * std::max(1.0, f.norm()));
    }
}

TEST_CASE("hodge star agrees with the metric-built star") {
    Rng rng(17);
    StarOperator st = star_from_metric(flat_metric(Basis::double_null), +1.0);
    for (int k = 0; k < 500; ++k) {
        Form2 f({rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2)},
                Basis::double_null);
        Form2 a = hodge_star(f);
        Form2 b = st(f);
        CHECK((a - b).norm() <= 1e-12 * std::max(1.0, f.norm()));
    }
}

TEST_CASE("decomposition into +-1 eigenvectors") {
    Rng rng(29);
    for (int k = 0; k < 2000; ++k) {
        Form2 f({rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2)},
                Basis::double_null);
        auto [p, m] = sd_asd_decompose(f);
        Form2 fp = sd_form(p), fm = asd_form(m);
        CHECK((fp + fm - f).norm() <= 1e-13 * std::max(1.0, f.norm()));
        CHECK((hodge_star(fp) - fp).norm() <= 1e-12 * std::max(1.0, f.norm()));
        CHECK((hodge_star(fm) + fm).norm() <= 1e-12 * std::max(1.0, f.norm()));
    }
}

TEST_CASE("Omega is self-dual, Omega' anti-self-dual") {
    auto [p1, m1] = sd_asd_decompose(Omega());
    CHECK(asd_form(m1).norm() == 0.0);  // dyadic coefficients: exactly zero
    CHECK(p1.a1 == doctest::Approx(0.5));
    CHECK(p1.b1 == doctest::Approx(0.5));
    CHECK(p1.c1 == doctest::Approx(0.0));

    auto [p2, m2] = sd_asd_decompose(OmegaP());
    CHECK(sd_form(p2).norm() == 0.0);
    CHECK(m2.a2 == doctest::Approx(-0.5));
    CHECK(m2.b2 == doctest::Approx(-0.5));
}

TEST_CASE("Theta1^Theta4 splits evenly") {
    auto [p, m] = sd_asd_decompose(theta_wedge(0, 3));
    CHECK(p.c1 == doctest::Approx(0.5));
    CHECK(m.c2 == doctest::Approx(0.5));
    CHECK(p.a1 == doctest::Approx(0.0));
    CHECK(p.b1 == doctest::Approx(0.0));
    CHECK(m.a2 == doctest::Approx(0.0));
    CHECK(m.b2 == doctest::Approx(0.0));
}

TEST_CASE("totally null planes") {
    // span{e1, e2} of the double-null dual frame is totally null
    Plane22 p(Vec4(1, 0, 0, 0, Basis::double_null), Vec4(0, 1, 0, 0, Basis::double_null));
    CHECK(is_totally_null(p));

    // span{e1, e4} is not: G(e1,e4) = 1/2
    Plane22 q(Vec4(1, 0, 0, 0, Basis::double_null), Vec4(0, 0, 0, 1, Basis::double_null));
    CHECK_FALSE(is_totally_null(q));
    CHECK(classify_plane(q).cls == DualityClass::not_null);

    // P^+_{pi/3} is totally null
    CHECK(is_totally_null(null_plane({+1, M_PI / 3})));
}

TEST_CASE("null plane family values and classes") {
    Plane22 p = null_plane({+1, 0.0});
    CHECK(p.v[0] == doctest::Approx(1));
    CHECK(p.v[1] == doctest::Approx(0));
    CHECK(p.v[2] == doctest::Approx(1));
    CHECK(p.v[3] == doctest::Approx(0));
    CHECK(p.w[0] == doctest::Approx(0));
    CHECK(p.w[1] == doctest::Approx(-1));
    CHECK(p.w[2] == doctest::Approx(0));
    CHECK(p.w[3] == doctest::Approx(-1));
    CHECK(plane_duality_class(p) == DualityClass::alpha);
    CHECK(plane_duality_class(null_plane({-1, 0.0})) == DualityClass::beta);

    // (-1, pi/2): V(1,0) = (0,1,1,0), class beta
    Vec4 v = null_vector({-1, M_PI / 2}, 1, 0);
    CHECK(v[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(v[1] == doctest::Approx(1));
    CHECK(v[2] == doctest::Approx(1));
    CHECK(std::abs(v[3]) <= 1e-15);
    CHECK(plane_duality_class(null_plane({-1, M_PI / 2})) == DualityClass::beta);

    // every generated vector is null
    Rng rng(41);
    Bilinear4 g = flat_metric(Basis::coordinate);
    for (int k = 0; k < 200; ++k) {
        NullPlaneParam par{rng.uniform() < 0.5 ? +1 : -1, rng.uniform(0, 2 * M_PI)};
        Vec4 x = null_vector(par, rng.sym(3), rng.sym(3));
        CHECK(std::abs(g(x, x)) <= 1e-12 * std::max(1.0, x.norm() * x.norm()));
    }
}

TEST_CASE("family planes classify by epsilon, random planes not_null") {
    Rng rng(59);
    for (int k = 0; k < 1000; ++k) {
        int eps = rng.uniform() < 0.5 ? +1 : -1;
        double phi = rng.uniform(0, 2 * M_PI);
        // random GL(2) reparametrization of the spanning pair
        double a, b, c, d;
        do {
            a = rng.sym(2);
            b = rng.sym(2);
            c = rng.sym(2);
            d = rng.sym(2);
        } while (std::abs(a * d - b * c) < 0.1);
        Vec4 v0 = null_vector({eps, phi}, 1, 0), w0 = null_vector({eps, phi}, 0, 1);
        Plane22 p(v0 * a + w0 * b, v0 * c + w0 * d);
        CHECK(is_totally_null(p));
        auto cls = plane_duality_class(p);
        CHECK(cls == (eps == +1 ? DualityClass::alpha : DualityClass::beta));
        CHECK(plane_duality_class_star(p) == cls);
    }
    int nonnull = 0;
    while (nonnull < 1000) {
        Vec4 v(rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), Basis::coordinate);
        Vec4 w(rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), Basis::coordinate);
        auto sv = plane_singular_values(v, w);
        if (sv[1] < 1e-3 * sv[0]) continue;
        Plane22 p(v, w);
        if (is_totally_null(p, 1e-6)) continue;  // skip near-null accidents
        ++nonnull;
        CHECK(plane_duality_class(p) == DualityClass::not_null);
        CHECK(plane_duality_class_star(p) == DualityClass::not_null);
    }
}

TEST_CASE("complex structures and compatibility") {
    Rng rng(61);
    Bilinear4 g = flat_metric(Basis::coordinate);
    Vec4 e1(1, 0, 0, 0, Basis::coordinate);
    Vec4 je1 = cx_structure_J(e1);
    CHECK(je1[0] == 0);
    CHECK(je1[1] == 1);
    Vec4 e3(0, 0, 1, 0, Basis::coordinate);
    Vec4 jpe3 = cx_structure_Jp(e3);
    CHECK(jpe3[2] == 0);
    CHECK(jpe3[3] == -1);

    for (int k = 0; k < 500; ++k) {
        Vec4 v(rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), Basis::coordinate);
        Vec4 w(rng.sym(2), rng.sym(2), rng.sym(2), rng.sym(2), Basis::coordinate);
        // J^2 = -id
        CHECK((cx_structure_J(cx_structure_J(v)) + v).norm() <= 1e-15 * std::max(1.0, v.norm()));
        CHECK((cx_structure_Jp(cx_structure_Jp(v)) + v).norm() <= 1e-15 * std::max(1.0, v.norm()));
        // G(Jv, Jw) = G(v, w); Omega(v,w) = G(Jv, w); primed analogues
        CHECK(g(cx_structure_J(v), cx_structure_J(w)) ==
              doctest::Approx(g(v, w)).epsilon(1e-13));
        CHECK(g(cx_structure_Jp(v), cx_structure_Jp(w)) ==
              doctest::Approx(g(v, w)).epsilon(1e-13));
        CHECK(Omega()(v, w) == doctest::Approx(g(cx_structure_J(v), w)).epsilon(1e-13));
        CHECK(OmegaP()(v, w) == doctest::Approx(g(cx_structure_Jp(v), w)).epsilon(1e-13));
    }
}

TEST_CASE("alpha iff holomorphic-Lagrangian for (J, Omega)") {
    CHECK(is_holomorphic_lagrangian(null_plane({+1, 0.0}), HLMode::J_Omega));
    CHECK(is_holomorphic_lagrangian(null_plane({-1, 0.0}), HLMode::Jp_OmegaP));
    CHECK_FALSE(is_holomorphic_lagrangian(null_plane({-1, 0.0}), HLMode::J_Omega));

    Rng rng(71);
    for (int k = 0; k < 300; ++k) {
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
        bool alpha = plane_duality_class(p) == DualityClass::alpha;
        CHECK(is_holomorphic_lagrangian(p, HLMode::J_Omega) == alpha);
        CHECK(is_holomorphic_lagrangian(p, HLMode::Jp_OmegaP) == !alpha);
    }
}
