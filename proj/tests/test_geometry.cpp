#include "polyineq/geometry.hpp"
#include "polyineq/random_bodies.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace polyineq;
using Catch::Approx;

namespace {

Vec v2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

ConvexBody unit_box2() { return ConvexBody::box(v2(-1, -1), v2(1, 1)); }

ConvexBody tri_vpoly() {
    Mat V(3, 2);
    V << 0, 0, 1, 0, 0, 1;
    return ConvexBody::vpolytope(V);
}

}  // namespace

TEST_CASE("support values on reference bodies") {
    CHECK(support(unit_box2(), v2(1, 0)) == Approx(1.0).margin(1e-12));
    CHECK(support(tri_vpoly(), Vec(v2(1, 1) / std::sqrt(2.0))) ==
          Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
    ConvexBody B = ConvexBody::ball(Vec(Vec::Zero(2)), 2.0);
    auto g = rng_stream(1, 1);
    for (int i = 0; i < 8; ++i)
        CHECK(support(B, random_unit(g, 2)) == Approx(2.0).margin(1e-12));
}

TEST_CASE("support via LP on H-polytopes matches vertex maximum") {
    auto g = rng_stream(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        ConvexBody K = random_hpolytope(g, 2, 5);
        SupportEval fast(K);
        for (int i = 0; i < 10; ++i) {
            Vec u = random_unit(g, 2);
            CHECK(support(K, u) == Approx(fast(u)).margin(1e-7));
        }
    }
}

TEST_CASE("width values") {
    CHECK(width(unit_box2(), v2(1, 0)) == Approx(2.0).margin(1e-12));
    ConvexBody S = ConvexBody::simplex(2);
    CHECK(width(S, v2(1, 0)) == Approx(1.0).margin(1e-12));
    CHECK(width(S, Vec(v2(1, 1) / std::sqrt(2.0))) ==
          Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("minimal width") {
    CHECK(minimal_width(ConvexBody::ball(Vec(Vec::Zero(2)), 1.0)) ==
          Approx(2.0).margin(1e-10));
    CHECK(minimal_width(ConvexBody::simplex(2)) ==
          Approx(1.0 / std::sqrt(2.0)).margin(1e-8));
    CHECK(minimal_width(ConvexBody::box(v2(-1, -2), v2(1, 2))) ==
          Approx(2.0).margin(1e-8));
}

TEST_CASE("minimal width in 3d via multistart matches box/ellipsoid forms") {
    ConvexBody bx = ConvexBody::box(Vec(Vec::Constant(3, -0.5)),
                                    Vec(Vec::Constant(3, 0.7)));
    CHECK(minimal_width(bx) == Approx(1.2).margin(1e-7));
    Vec diag(3);
    diag << 4.0, 1.0, 9.0;
    ConvexBody el = ConvexBody::ellipsoid(Vec(Vec::Zero(3)), Mat(diag.asDiagonal()));
    CHECK(minimal_width(el) == Approx(2.0).margin(1e-8));
}

TEST_CASE("maximal chord") {
    CHECK(maximal_chord(ConvexBody::ball(Vec(Vec::Zero(2)), 1.0),
                        Direction(v2(0, 1))) == Approx(2.0).margin(1e-12));
    CHECK(maximal_chord(unit_box2(), Direction(v2(1, 0))) ==
          Approx(2.0).margin(1e-9));
    CHECK(maximal_chord(ConvexBody::simplex(2),
                        Direction(Vec(v2(1, -1) / std::sqrt(2.0)))) ==
          Approx(std::sqrt(2.0)).margin(1e-8));
    // V-polytope route gives the same values as the H-route
    auto g = rng_stream(3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexBody K = random_vpolytope(g, 2, 6);
        ConvexBody H = to_hpolytope(K);
        Vec y = random_unit(g, 2);
        CHECK(maximal_chord(K, Direction(y)) ==
              Approx(maximal_chord(H, Direction(y))).margin(1e-7));
    }
}

TEST_CASE("contains and gauge") {
    ConvexBody B = ConvexBody::ball(Vec(Vec::Zero(2)), 1.0);
    CHECK(gauge(B, v2(0.3, 0.4)) == Approx(0.5).margin(1e-9));
    ConvexBody bx = unit_box2();
    CHECK(gauge(bx, v2(2, 0)) == Approx(2.0).margin(1e-9));
    CHECK_FALSE(contains(bx, v2(2, 0)));
    Mat Q(2, 2);
    Q << 4, 0, 0, 1;
    ConvexBody el = ConvexBody::ellipsoid(Vec(Vec::Zero(2)), Q);
    CHECK(gauge(el, v2(2, 0)) == Approx(1.0).margin(1e-9));
    CHECK(contains(el, v2(2, 0)));
}

TEST_CASE("gauge rejects non-symmetric bodies") {
    CHECK_THROWS_AS(gauge(ConvexBody::simplex(2), v2(0.1, 0.1)),
                    std::domain_error);
}

TEST_CASE("construction rejects invalid bodies") {
    Mat A(2, 2);  // open wedge
    A << 1, 0, 0, 1;
    Vec b(2);
    b << 1, 1;
    CHECK_THROWS_AS(ConvexBody::hpolytope(A, b), std::invalid_argument);

    Mat V(3, 2);  // collinear
    V << 0, 0, 1, 1, 2, 2;
    CHECK_THROWS_AS(ConvexBody::vpolytope(V), std::invalid_argument);

    CHECK_THROWS_AS(ConvexBody::ball(Vec(Vec::Zero(2)), -1.0),
                    std::invalid_argument);
    Mat Qbad(2, 2);
    Qbad << 1, 0, 0, -1;
    CHECK_THROWS_AS(ConvexBody::ellipsoid(Vec(Vec::Zero(2)), Qbad),
                    std::invalid_argument);
}

TEST_CASE("support is positively homogeneous and Minkowski additive") {
    auto g = rng_stream(4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        ConvexBody K = random_vpolytope(g, 2, 5);
        ConvexBody L = random_vpolytope(g, 2, 5);
        auto vk = vertices(K);
        auto vl = vertices(L);
        Mat V(vk.size() * vl.size(), 2);
        int r = 0;
        for (const Vec& a : vk)
            for (const Vec& b : vl) V.row(r++) = (a + b).transpose();
        ConvexBody Sum = ConvexBody::vpolytope(V);
        Vec u = random_unit(g, 2);
        double lam = uniform(g, 0.1, 5.0);
        CHECK(support(K, Vec(lam * u)) == Approx(lam * support(K, u)).margin(1e-10));
        CHECK(support(Sum, u) ==
              Approx(support(K, u) + support(L, u)).margin(1e-9));
    }
}

TEST_CASE("chord bounds: tau <= diameter and tau >= minimal width") {
    auto g = rng_stream(5, 5);
    for (int trial = 0; trial < 12; ++trial) {
        ConvexBody K = random_vpolytope(g, 2, 6);
        auto vs = vertices(K);
        double diam = 0.0;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = 0; j < vs.size(); ++j)
                diam = std::max(diam, (vs[i] - vs[j]).norm());
        double wmin = minimal_width(K);
        for (int i = 0; i < 6; ++i) {
            double tau = maximal_chord(K, Direction(random_unit(g, 2)));
            CHECK(tau <= diam + 1e-8);
            CHECK(tau >= wmin - 1e-8);
        }
    }
}

TEST_CASE("gauge <= 1 iff contains, symmetric bodies") {
    auto g = rng_stream(6, 6);
    for (int trial = 0; trial < 15; ++trial) {
        ConvexBody K = random_symmetric_body(g, 2);
        Vec x = 2.5 * gaussian_vec(g, 2);
        double gx = gauge(K, x);
        if (gx < 1.0 - 1e-8) CHECK(contains(K, x));
        if (gx > 1.0 + 1e-8) CHECK_FALSE(contains(K, x));
    }
}

TEST_CASE("support(u) + support(-u) stays positive (nonempty interior)") {
    auto g = rng_stream(7, 7);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexBody K = random_vpolytope(g, 3, 7);
        for (int i = 0; i < 8; ++i) {
            Vec u = random_unit(g, 3);
            CHECK(width(K, u) > 1e-6);
        }
    }
}

TEST_CASE("ellipse_fits: box and segment cases") {
    ConvexBody bx = unit_box2();
    // degenerate vertical segment through the origin
    InscribedEllipse seg{v2(0, 0), Direction(v2(0, 1)), v2(0, 0), 1.0};
    CHECK(ellipse_fits(bx, seg));
    InscribedEllipse seg2{v2(0, 0), Direction(v2(0, 1)), v2(0, 0), 1.5};
    CHECK_FALSE(ellipse_fits(bx, seg2));
    // genuine unit circle anchored at (1,0)
    InscribedEllipse circ{v2(1, 0), Direction(v2(0, 1)), v2(1, 0), 1.0};
    CHECK(ellipse_fits(bx, circ));
    InscribedEllipse circ2{v2(1, 0), Direction(v2(0, 1)), v2(1, 0), 1.0 + 1e-6};
    CHECK_FALSE(ellipse_fits(bx, circ2));
}

TEST_CASE("ellipse_fits agrees with dense sampling + membership") {
    auto g = rng_stream(8, 8);
    for (int trial = 0; trial < 40; ++trial) {
        ConvexBody K = (trial % 2 == 0) ? random_hpolytope(g, 2, 4)
                                        : random_ellipsoid(g, 2, false);
        Vec x = interior_point(K);
        Vec a = 0.5 * gaussian_vec(g, 2);
        double b = uniform(g, 0.05, 1.0);
        InscribedEllipse E{x, Direction(random_unit(g, 2)), a, b};
        bool fits = ellipse_fits(K, E);
        bool sampled_ok = true;
        for (int i = 0; i < 10000; ++i) {
            Vec p = ellipse_point(E, 2 * M_PI * i / 10000.0);
            if (!contains(K, p)) {
                sampled_ok = false;
                break;
            }
        }
        if (fits) CHECK(sampled_ok);
        if (!sampled_ok) CHECK_FALSE(fits);
    }
}

TEST_CASE("sample_points stay inside the body") {
    auto g = rng_stream(9, 9);
    ConvexBody K = random_hpolytope(g, 2, 5);
    auto pts = sample_points(K, 500);
    REQUIRE(static_cast<int>(pts.size()) >= 500);
    for (const Vec& p : pts) CHECK(contains(K, p));
}

TEST_CASE("to_hpolytope of a V-polygon preserves support") {
    auto g = rng_stream(10, 10);
    for (int trial = 0; trial < 10; ++trial) {
        ConvexBody K = random_vpolytope(g, 2, 7);
        ConvexBody H = to_hpolytope(K);
        for (int i = 0; i < 12; ++i) {
            Vec u = random_unit(g, 2);
            CHECK(support(H, u) == Approx(support(K, u)).margin(1e-8));
        }
    }
}
