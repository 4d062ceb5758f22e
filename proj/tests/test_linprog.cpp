#include "polyineq/linprog.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace polyineq;
using Catch::Approx;

TEST_CASE("simple 2d maximize over polygon") {
    // max x + y  s.t.  x <= 2, y <= 3, x + 2y <= 4  -> x = 2, y = 1
    Mat A(3, 2);
    A << 1, 0, 0, 1, 1, 2;
    Vec b(3);
    b << 2, 3, 4;
    Vec c(2);
    c << 1, 1;
    auto s = lp::maximize_le(c, A, b);
    REQUIRE(s.status == lp::Status::optimal);
    CHECK(s.value == Approx(3.0).margin(1e-9));
    CHECK(s.x[0] == Approx(2.0).margin(1e-9));
    CHECK(s.x[1] == Approx(1.0).margin(1e-9));
}

TEST_CASE("free variables and negative rhs") {
    // max x  s.t. -x <= -1 (x >= 1), x <= 5
    Mat A(2, 1);
    A << -1, 1;
    Vec b(2);
    b << -1, 5;
    Vec c(1);
    c << 1;
    auto s = lp::maximize_le(c, A, b);
    REQUIRE(s.status == lp::Status::optimal);
    CHECK(s.value == Approx(5.0).margin(1e-9));

    Vec cmin(1);
    cmin << -1;  // now minimize -x ... same thing through lp::solve directly
    lp::Problem p;
    p.c = cmin;
    p.A = A;
    p.b = b;
    p.sense = {lp::Sense::le, lp::Sense::le};
    p.nonneg = {false};
    auto s2 = lp::solve(p);
    REQUIRE(s2.status == lp::Status::optimal);
    CHECK(s2.x[0] == Approx(5.0).margin(1e-9));
}

TEST_CASE("unbounded and infeasible detection") {
    Mat A(1, 2);
    A << 1, 0;
    Vec b(1);
    b << 1;
    Vec c(2);
    c << 0, 1;  // y unconstrained above
    auto s = lp::maximize_le(c, A, b);
    CHECK(s.status == lp::Status::unbounded);

    lp::Problem p;  // x >= 0, x <= -1
    p.c = Vec::Ones(1);
    p.A = Mat::Ones(1, 1);
    p.b = Vec::Constant(1, -1.0);
    p.sense = {lp::Sense::le};
    p.nonneg = {true};
    auto s2 = lp::solve(p);
    CHECK(s2.status == lp::Status::infeasible);
}

TEST_CASE("equality constraints and duals") {
    // min 2x + 3y  s.t.  x + y = 4, x - y <= 2, x,y >= 0
    lp::Problem p;
    p.c = Vec(2);
    p.c << 2, 3;
    p.A = Mat(2, 2);
    p.A << 1, 1, 1, -1;
    p.b = Vec(2);
    p.b << 4, 2;
    p.sense = {lp::Sense::eq, lp::Sense::le};
    p.nonneg = {true, true};
    auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::optimal);
    // optimum at x = 3, y = 1 (x - y = 2 active): value 9
    CHECK(s.value == Approx(9.0).margin(1e-9));
    CHECK(s.x[0] == Approx(3.0).margin(1e-9));
    // strong duality: b . y == value
    CHECK(p.b.dot(s.dual) == Approx(s.value).margin(1e-8));
}

TEST_CASE("random bounded 2d LPs agree with vertex enumeration") {
    std::mt19937_64 g(12345);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 6;
        Mat A(m + 4, 2);
        Vec b(m + 4);
        for (int i = 0; i < m; ++i) {
            double ang = u(g) * M_PI;
            A(i, 0) = std::cos(ang);
            A(i, 1) = std::sin(ang);
            b[i] = 0.3 + std::abs(u(g));
        }
        // box to guarantee boundedness
        A.row(m) << 1, 0;
        A.row(m + 1) << -1, 0;
        A.row(m + 2) << 0, 1;
        A.row(m + 3) << 0, -1;
        b.segment(m, 4).setConstant(2.0);
        Vec c(2);
        c << u(g), u(g);

        auto s = lp::maximize_le(c, A, b);
        REQUIRE(s.status == lp::Status::optimal);

        // oracle: enumerate all facet-pair intersections, keep feasible
        double best = -1e100;
        int rows = static_cast<int>(A.rows());
        for (int i = 0; i < rows; ++i) {
            for (int j = i + 1; j < rows; ++j) {
                Mat M(2, 2);
                M << A(i, 0), A(i, 1), A(j, 0), A(j, 1);
                if (std::abs(M.determinant()) < 1e-9) continue;
                Vec rhs(2);
                rhs << b[i], b[j];
                Vec x = M.fullPivLu().solve(rhs);
                if (((A * x).array() <= b.array() + 1e-8).all())
                    best = std::max(best, c.dot(x));
            }
        }
        CHECK(s.value == Approx(best).margin(1e-6));
    }
}

TEST_CASE("zero-sum game value of a symmetric payoff matrix") {
    // 3-node circle game with chordal-like distances; by symmetry the value
    // is the row average of any row.
    int n = 3;
    Mat R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            R(i, j) = std::abs(std::sin(M_PI * (i - j) / n));
    // max v s.t. R^T p >= v, sum p = 1, p >= 0  ->  min -v
    lp::Problem p;
    p.c = Vec::Zero(n + 1);
    p.c[n] = -1.0;
    p.A = Mat::Zero(n + 1, n + 1);
    p.b = Vec::Zero(n + 1);
    p.sense.assign(n + 1, lp::Sense::ge);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) p.A(j, i) = R(i, j);
        p.A(j, n) = -1.0;
    }
    p.A.row(n).head(n).setOnes();
    p.b[n] = 1.0;
    p.sense[n] = lp::Sense::eq;
    p.nonneg.assign(n + 1, true);
    p.nonneg[n] = false;
    auto s = lp::solve(p);
    REQUIRE(s.status == lp::Status::optimal);
    double avg = R.row(0).sum() / n;
    CHECK(-s.value == Approx(avg).margin(1e-9));
}
