// Convex bodies in low dimension and the elementary functionals on them:
// support, width, chords, membership, gauge, and the inscribed-ellipse
// feasibility test. All operations are pure; bodies are immutable after
// construction and validate their invariants up front.
#pragma once

#include "polyineq/linprog.hpp"
#include "polyineq/optimize.hpp"
#include "polyineq/util.hpp"

#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

namespace polyineq {

inline constexpr double kGeomTol = 1e-10;

class Direction {
  public:
    explicit Direction(Vec v) : v_(std::move(v)) {
        if (std::abs(v_.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("Direction: vector is not unit length");
    }
    static Direction normalized(const Vec& v) {
        double n = v.norm();
        if (n < 1e-14) throw std::invalid_argument("Direction: zero vector");
        return Direction(Vec(v / n));
    }
    const Vec& vec() const { return v_; }
    int dim() const { return static_cast<int>(v_.size()); }
    Direction operator-() const { return Direction(Vec(-v_)); }

  private:
    Vec v_;
};

struct HPolyData {
    Mat A;   // rows are outward normals (not necessarily unit)
    Vec b;
    std::vector<Vec> vertices;   // enumerated at construction for d <= 3
    Vec interior;                // Chebyshev center
    double inradius = 0.0;
};

struct VPolyData {
    Mat V;   // rows are vertices
};

struct EllipsoidData {
    Vec center;
    Mat Q;      // support form: h(u) = <u,c> + sqrt(u' Q u)
    Mat Qinv;
};

struct BallData {
    Vec center;
    double radius;
};

struct BoxData {
    Vec lo, hi;
};

struct SimplexData {
    int d;
};

class ConvexBody {
  public:
    enum class Kind { hpolytope, vpolytope, ellipsoid, ball, box, simplex };

    static ConvexBody hpolytope(Mat A, Vec b);
    static ConvexBody vpolytope(Mat V);
    static ConvexBody ellipsoid(Vec center, Mat Q);
    static ConvexBody ball(Vec center, double radius);
    static ConvexBody box(Vec lo, Vec hi);
    static ConvexBody simplex(int d);

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }

    const HPolyData& hpoly() const { return std::get<HPolyData>(data_); }
    const VPolyData& vpoly() const { return std::get<VPolyData>(data_); }
    const EllipsoidData& ell() const { return std::get<EllipsoidData>(data_); }
    const BallData& ball_data() const { return std::get<BallData>(data_); }
    const BoxData& box_data() const { return std::get<BoxData>(data_); }

  private:
    using Data = std::variant<HPolyData, VPolyData, EllipsoidData, BallData,
                              BoxData, SimplexData>;
    ConvexBody(Kind k, int dim, Data d)
        : kind_(k), dim_(dim), data_(std::move(d)) {}

    Kind kind_;
    int dim_;
    Data data_;
};

// ---------------------------------------------------------------------------
// construction

namespace geom_detail {

inline std::vector<Vec> enumerate_hpoly_vertices(const Mat& A, const Vec& b) {
    const int d = static_cast<int>(A.cols());
    const int m = static_cast<int>(A.rows());
    std::vector<Vec> out;
    auto feasible = [&](const Vec& x) {
        return ((A * x - b).array() <= 1e-8).all();
    };
    auto push_unique = [&](const Vec& x) {
        for (const Vec& y : out)
            if ((x - y).norm() < 1e-9) return;
        out.push_back(x);
    };
    if (d == 1) {
        for (int i = 0; i < m; ++i) {
            if (std::abs(A(i, 0)) < 1e-12) continue;
            Vec x(1);
            x << b[i] / A(i, 0);
            if (feasible(x)) push_unique(x);
        }
    } else if (d == 2) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                Mat M(2, 2);
                M.row(0) = A.row(i);
                M.row(1) = A.row(j);
                if (std::abs(M.determinant()) < 1e-12) continue;
                Vec rhs(2);
                rhs << b[i], b[j];
                Vec x = M.partialPivLu().solve(rhs);
                if (feasible(x)) push_unique(x);
            }
    } else if (d == 3) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k) {
                    Mat M(3, 3);
                    M.row(0) = A.row(i);
                    M.row(1) = A.row(j);
                    M.row(2) = A.row(k);
                    if (std::abs(M.determinant()) < 1e-10) continue;
                    Vec rhs(3);
                    rhs << b[i], b[j], b[k];
                    Vec x = M.partialPivLu().solve(rhs);
                    if (feasible(x)) push_unique(x);
                }
    }
    return out;
}

}  // namespace geom_detail

inline ConvexBody ConvexBody::hpolytope(Mat A, Vec b) {
    const int m = static_cast<int>(A.rows());
    const int d = static_cast<int>(A.cols());
    if (m == 0 || d == 0 || b.size() != m)
        throw std::invalid_argument("hpolytope: empty or inconsistent data");
    for (int i = 0; i < m; ++i)
        if (A.row(i).norm() < 1e-12)
            throw std::invalid_argument("hpolytope: zero normal row");

    // Boundedness: every coordinate direction must have a finite support value.
    for (int j = 0; j < d; ++j) {
        for (double sgn : {1.0, -1.0}) {
            Vec c = Vec::Zero(d);
            c[j] = sgn;
            auto s = lp::maximize_le(c, A, b);
            if (s.status == lp::Status::unbounded)
                throw std::invalid_argument(
                    "hpolytope: unbounded (recession cone is nontrivial)");
            if (s.status != lp::Status::optimal)
                throw std::invalid_argument("hpolytope: empty feasible set");
        }
    }
    // Strict feasibility via the Chebyshev center.
    Mat Ac(m, d + 1);
    Ac.leftCols(d) = A;
    for (int i = 0; i < m; ++i) Ac(i, d) = A.row(i).norm();
    Vec c = Vec::Zero(d + 1);
    c[d] = 1.0;
    auto cs = lp::maximize_le(c, Ac, b);
    if (cs.status != lp::Status::optimal || cs.value <= 1e-9)
        throw std::invalid_argument("hpolytope: interior is empty");

    HPolyData data;
    data.A = std::move(A);
    data.b = std::move(b);
    data.interior = cs.x.head(d);
    data.inradius = cs.value;
    if (d <= 3)
        data.vertices = geom_detail::enumerate_hpoly_vertices(data.A, data.b);
    return ConvexBody(Kind::hpolytope, d, Data(std::move(data)));
}

inline ConvexBody ConvexBody::vpolytope(Mat V) {
    const int n = static_cast<int>(V.rows());
    const int d = static_cast<int>(V.cols());
    if (n < d + 1)
        throw std::invalid_argument("vpolytope: needs at least d+1 vertices");
    Mat rel(n - 1, d);
    for (int i = 1; i < n; ++i) rel.row(i - 1) = V.row(i) - V.row(0);
    Eigen::FullPivLU<Mat> lu(rel);
    if (lu.rank() < d)
        throw std::invalid_argument(
            "vpolytope: vertices are affinely dependent (empty interior)");
    return ConvexBody(Kind::vpolytope, d, Data(VPolyData{std::move(V)}));
}

inline ConvexBody ConvexBody::ellipsoid(Vec center, Mat Q) {
    const int d = static_cast<int>(center.size());
    if (Q.rows() != d || Q.cols() != d)
        throw std::invalid_argument("ellipsoid: dimension mismatch");
    Mat Qs = 0.5 * (Q + Q.transpose());
    Eigen::LLT<Mat> llt(Qs);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("ellipsoid: shape matrix not positive definite");
    EllipsoidData data;
    data.center = std::move(center);
    data.Q = Qs;
    data.Qinv = llt.solve(Mat::Identity(d, d));
    return ConvexBody(Kind::ellipsoid, d, Data(std::move(data)));
}

inline ConvexBody ConvexBody::ball(Vec center, double radius) {
    if (!(radius > 0))
        throw std::invalid_argument("ball: radius must be positive");
    int d = static_cast<int>(center.size());
    return ConvexBody(Kind::ball, d, Data(BallData{std::move(center), radius}));
}

inline ConvexBody ConvexBody::box(Vec lo, Vec hi) {
    if (lo.size() != hi.size() || lo.size() == 0)
        throw std::invalid_argument("box: dimension mismatch");
    if (!((hi - lo).array() > 0).all())
        throw std::invalid_argument("box: upper bound must exceed lower bound");
    int d = static_cast<int>(lo.size());
    return ConvexBody(Kind::box, d, Data(BoxData{std::move(lo), std::move(hi)}));
}

inline ConvexBody ConvexBody::simplex(int d) {
    if (d < 1) throw std::invalid_argument("simplex: dimension must be >= 1");
    return ConvexBody(Kind::simplex, d, Data(SimplexData{d}));
}

// ---------------------------------------------------------------------------
// support / width / chords / membership

// Support functional sup_K <u,.>; positively homogeneous in u.
inline double support(const ConvexBody& K, const Vec& u);
inline Vec support_point(const ConvexBody& K, const Vec& u);

namespace geom_detail {

inline double support_hpoly_lp(const HPolyData& P, const Vec& u) {
    auto s = lp::maximize_le(u, P.A, P.b);
    if (s.status != lp::Status::optimal)
        throw std::runtime_error("support: LP failed on a validated H-polytope");
    return s.value;
}

inline std::pair<double, int> vertex_max(const Mat& V, const Vec& u) {
    int best = 0;
    double bv = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < V.rows(); ++i) {
        double v = V.row(i).dot(u);
        if (v > bv) { bv = v; best = i; }
    }
    return {bv, best};
}

}  // namespace geom_detail

inline double support(const ConvexBody& K, const Vec& u) {
    switch (K.kind()) {
        case ConvexBody::Kind::hpolytope:
            return geom_detail::support_hpoly_lp(K.hpoly(), u);
        case ConvexBody::Kind::vpolytope:
            return geom_detail::vertex_max(K.vpoly().V, u).first;
        case ConvexBody::Kind::ellipsoid: {
            const auto& e = K.ell();
            return u.dot(e.center) + std::sqrt(std::max(0.0, u.dot(e.Q * u)));
        }
        case ConvexBody::Kind::ball:
            return u.dot(K.ball_data().center) + K.ball_data().radius * u.norm();
        case ConvexBody::Kind::box: {
            const auto& bx = K.box_data();
            double s = 0.0;
            for (int i = 0; i < u.size(); ++i)
                s += u[i] >= 0 ? u[i] * bx.hi[i] : u[i] * bx.lo[i];
            return s;
        }
        case ConvexBody::Kind::simplex: {
            double s = 0.0;  // vertices: origin and the e_i
            for (int i = 0; i < u.size(); ++i) s = std::max(s, u[i]);
            return s;
        }
    }
    throw std::logic_error("support: unreachable");
}

inline double support(const ConvexBody& K, const Direction& u) {
    return support(K, u.vec());
}

inline Vec support_point(const ConvexBody& K, const Vec& u) {
    switch (K.kind()) {
        case ConvexBody::Kind::hpolytope: {
            const auto& P = K.hpoly();
            if (!P.vertices.empty()) {
                int best = 0;
                double bv = -std::numeric_limits<double>::infinity();
                for (size_t i = 0; i < P.vertices.size(); ++i) {
                    double v = P.vertices[i].dot(u);
                    if (v > bv) { bv = v; best = static_cast<int>(i); }
                }
                return P.vertices[best];
            }
            auto s = lp::maximize_le(u, P.A, P.b);
            if (s.status != lp::Status::optimal)
                throw std::runtime_error("support_point: LP failed");
            return s.x;
        }
        case ConvexBody::Kind::vpolytope: {
            const auto& V = K.vpoly().V;
            return V.row(geom_detail::vertex_max(V, u).second).transpose();
        }
        case ConvexBody::Kind::ellipsoid: {
            const auto& e = K.ell();
            Vec Qu = e.Q * u;
            double denom = std::sqrt(std::max(1e-300, u.dot(Qu)));
            return e.center + Qu / denom;
        }
        case ConvexBody::Kind::ball: {
            const auto& bl = K.ball_data();
            double n = u.norm();
            if (n < 1e-14) return bl.center;
            return bl.center + (bl.radius / n) * u;
        }
        case ConvexBody::Kind::box: {
            const auto& bx = K.box_data();
            Vec p(u.size());
            for (int i = 0; i < u.size(); ++i) p[i] = u[i] >= 0 ? bx.hi[i] : bx.lo[i];
            return p;
        }
        case ConvexBody::Kind::simplex: {
            int d = K.dim();
            int arg = -1;
            double bv = 0.0;
            for (int i = 0; i < d; ++i)
                if (u[i] > bv) { bv = u[i]; arg = i; }
            Vec p = Vec::Zero(d);
            if (arg >= 0) p[arg] = 1.0;
            return p;
        }
    }
    throw std::logic_error("support_point: unreachable");
}

inline double width(const ConvexBody& K, const Vec& u) {
    return support(K, u) + support(K, Vec(-u));
}

inline double width(const ConvexBody& K, const Direction& u) {
    return width(K, u.vec());
}

inline bool contains(const ConvexBody& K, const Vec& x) {
    switch (K.kind()) {
        case ConvexBody::Kind::hpolytope: {
            const auto& P = K.hpoly();
            return ((P.A * x - P.b).array() <= kGeomTol).all();
        }
        case ConvexBody::Kind::vpolytope: {
            // membership as LP feasibility over convex weights
            const Mat& V = K.vpoly().V;
            const int n = static_cast<int>(V.rows());
            const int d = static_cast<int>(V.cols());
            lp::Problem p;
            p.c = Vec::Zero(n);
            p.A = Mat::Zero(d + 1, n);
            p.A.topRows(d) = V.transpose();
            p.A.row(d).setOnes();
            p.b = Vec(d + 1);
            p.b.head(d) = x;
            p.b[d] = 1.0;
            p.sense.assign(d + 1, lp::Sense::eq);
            p.nonneg.assign(n, true);
            return lp::solve(p).status == lp::Status::optimal;
        }
        case ConvexBody::Kind::ellipsoid: {
            const auto& e = K.ell();
            Vec r = x - e.center;
            return r.dot(e.Qinv * r) <= 1.0 + kGeomTol;
        }
        case ConvexBody::Kind::ball:
            return (x - K.ball_data().center).norm() <=
                   K.ball_data().radius + kGeomTol;
        case ConvexBody::Kind::box: {
            const auto& bx = K.box_data();
            return (x.array() >= bx.lo.array() - kGeomTol).all() &&
                   (x.array() <= bx.hi.array() + kGeomTol).all();
        }
        case ConvexBody::Kind::simplex:
            return (x.array() >= -kGeomTol).all() && x.sum() <= 1.0 + kGeomTol;
    }
    throw std::logic_error("contains: unreachable");
}

// ---------------------------------------------------------------------------
// vertices / conversions / interior data

inline std::vector<Vec> vertices(const ConvexBody& K) {
    switch (K.kind()) {
        case ConvexBody::Kind::hpolytope: {
            if (K.hpoly().vertices.empty())
                throw std::invalid_argument(
                    "vertices: enumeration only available for d <= 3 H-polytopes");
            return K.hpoly().vertices;
        }
        case ConvexBody::Kind::vpolytope: {
            std::vector<Vec> out;
            const Mat& V = K.vpoly().V;
            out.reserve(V.rows());
            for (int i = 0; i < V.rows(); ++i) out.push_back(V.row(i).transpose());
            return out;
        }
        case ConvexBody::Kind::box: {
            const auto& bx = K.box_data();
            int d = K.dim();
            if (d > 20) throw std::invalid_argument("vertices: box dimension too large");
            std::vector<Vec> out;
            for (int mask = 0; mask < (1 << d); ++mask) {
                Vec v(d);
                for (int i = 0; i < d; ++i)
                    v[i] = (mask >> i) & 1 ? bx.hi[i] : bx.lo[i];
                out.push_back(v);
            }
            return out;
        }
        case ConvexBody::Kind::simplex: {
            int d = K.dim();
            std::vector<Vec> out;
            out.push_back(Vec::Zero(d));
            for (int i = 0; i < d; ++i) {
                Vec v = Vec::Zero(d);
                v[i] = 1.0;
                out.push_back(v);
            }
            return out;
        }
        default:
            throw std::invalid_argument("vertices: body is not polytopal");
    }
}

inline bool is_polytopal(const ConvexBody& K) {
    switch (K.kind()) {
        case ConvexBody::Kind::ellipsoid:
        case ConvexBody::Kind::ball:
            return false;
        default:
            return true;
    }
}

// Explicit conversion to an H-representation. V-polytopes are converted via
// convex hull in d <= 2 only.
inline ConvexBody to_hpolytope(const ConvexBody& K) {
    switch (K.kind()) {
        case ConvexBody::Kind::hpolytope:
            return K;
        case ConvexBody::Kind::box: {
            const auto& bx = K.box_data();
            int d = K.dim();
            Mat A = Mat::Zero(2 * d, d);
            Vec b(2 * d);
            for (int i = 0; i < d; ++i) {
                A(2 * i, i) = 1.0;
                b[2 * i] = bx.hi[i];
                A(2 * i + 1, i) = -1.0;
                b[2 * i + 1] = -bx.lo[i];
            }
            return ConvexBody::hpolytope(A, b);
        }
        case ConvexBody::Kind::simplex: {
            int d = K.dim();
            Mat A = Mat::Zero(d + 1, d);
            Vec b = Vec::Zero(d + 1);
            for (int i = 0; i < d; ++i) A(i, i) = -1.0;
            A.row(d).setOnes();
            b[d] = 1.0;
            return ConvexBody::hpolytope(A, b);
        }
        case ConvexBody::Kind::vpolytope: {
            if (K.dim() == 1) {
                const Mat& V = K.vpoly().V;
                Mat A(2, 1);
                A << 1, -1;
                Vec b(2);
                b << V.col(0).maxCoeff(), -V.col(0).minCoeff();
                return ConvexBody::hpolytope(A, b);
            }
            if (K.dim() != 2)
                throw std::invalid_argument(
                    "to_hpolytope: V-polytope conversion implemented for d <= 2");
            auto hull = convex_hull_2d(vertices(K));
            int n = static_cast<int>(hull.size());
            if (n < 3) throw std::invalid_argument("to_hpolytope: degenerate hull");
            Mat A(n, 2);
            Vec b(n);
            for (int i = 0; i < n; ++i) {
                Vec e = hull[(i + 1) % n] - hull[i];
                Vec nrm(2);
                nrm << e[1], -e[0];   // outward for CCW order
                nrm.normalize();
                A.row(i) = nrm.transpose();
                b[i] = nrm.dot(hull[i]);
            }
            return ConvexBody::hpolytope(A, b);
        }
        default:
            throw std::invalid_argument("to_hpolytope: body is not polytopal");
    }
}

inline Vec interior_point(const ConvexBody& K) {
    switch (K.kind()) {
        case ConvexBody::Kind::hpolytope:
            return K.hpoly().interior;
        case ConvexBody::Kind::vpolytope: {
            const Mat& V = K.vpoly().V;
            return V.colwise().mean().transpose();
        }
        case ConvexBody::Kind::ellipsoid:
            return K.ell().center;
        case ConvexBody::Kind::ball:
            return K.ball_data().center;
        case ConvexBody::Kind::box:
            return 0.5 * (K.box_data().lo + K.box_data().hi);
        case ConvexBody::Kind::simplex:
            return Vec::Constant(K.dim(), 1.0 / (K.dim() + 1));
    }
    throw std::logic_error("interior_point: unreachable");
}

// Axis-aligned bounding box via supports.
inline std::pair<Vec, Vec> bounding_box(const ConvexBody& K) {
    int d = K.dim();
    Vec lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
        Vec e = Vec::Zero(d);
        e[i] = 1.0;
        hi[i] = support(K, e);
        lo[i] = -support(K, Vec(-e));
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------------
// gauge (Minkowski functional of a 0-symmetric body)

inline bool is_origin_symmetric(const ConvexBody& K, double tol = 1e-9) {
    int d = K.dim();
    std::vector<Vec> dirs;
    if (d == 2) dirs = circle_points(32);
    else if (d == 3) dirs = fibonacci_sphere(64);
    else {
        auto g = rng_stream(2024, 77);
        for (int i = 0; i < 16 * d; ++i) dirs.push_back(random_unit(g, d));
        for (int i = 0; i < d; ++i) {
            Vec e = Vec::Zero(d);
            e[i] = 1.0;
            dirs.push_back(e);
        }
    }
    for (const Vec& u : dirs)
        if (std::abs(support(K, u) - support(K, Vec(-u))) > tol) return false;
    return true;
}

// gauge(K,x) = inf { lambda >= 0 : x in lambda K }, bisected to 1e-10.
inline double gauge(const ConvexBody& K, const Vec& x) {
    if (!is_origin_symmetric(K))
        throw std::domain_error("gauge: body is not symmetric about the origin");
    if (x.norm() < 1e-300) return 0.0;
    auto inside_scaled = [&](double lam) { return contains(K, Vec(x / lam)); };
    double hi = 1.0;
    while (!inside_scaled(hi)) {
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("gauge: point escapes all dilates");
    }
    double lo = hi / 2.0;
    if (hi == 1.0) {
        lo = 1e-12;
        // shrink until lo K no longer contains x
        while (inside_scaled(lo) && lo > 1e-300) lo *= 0.5;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        double mid = 0.5 * (lo + hi);
        if (inside_scaled(mid)) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// maximal chord tau(K,y)

inline double maximal_chord(const ConvexBody& K, const Direction& y) {
    const Vec& u = y.vec();
    switch (K.kind()) {
        case ConvexBody::Kind::ball:
            return 2.0 * K.ball_data().radius;
        case ConvexBody::Kind::ellipsoid: {
            const auto& e = K.ell();
            return 2.0 / std::sqrt(u.dot(e.Qinv * u));
        }
        case ConvexBody::Kind::box: {
            const auto& bx = K.box_data();
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < u.size(); ++i)
                if (std::abs(u[i]) > 1e-14)
                    best = std::min(best, (bx.hi[i] - bx.lo[i]) / std::abs(u[i]));
            return best;
        }
        case ConvexBody::Kind::hpolytope:
        case ConvexBody::Kind::simplex: {
            ConvexBody H = K.kind() == ConvexBody::Kind::simplex ? to_hpolytope(K) : K;
            const auto& P = H.hpoly();
            const int d = H.dim();
            const int m = static_cast<int>(P.A.rows());
            // max t  s.t.  A x <= b,  A(x + t y) <= b
            Mat A(2 * m, d + 1);
            Vec b(2 * m);
            A.topLeftCorner(m, d) = P.A;
            A.topRightCorner(m, 1).setZero();
            A.bottomLeftCorner(m, d) = P.A;
            A.bottomRightCorner(m, 1) = P.A * u;
            b.head(m) = P.b;
            b.tail(m) = P.b;
            Vec c = Vec::Zero(d + 1);
            c[d] = 1.0;
            auto s = lp::maximize_le(c, A, b);
            if (s.status != lp::Status::optimal)
                throw std::runtime_error("maximal_chord: LP failed");
            return s.value;
        }
        case ConvexBody::Kind::vpolytope: {
            // max t with x = V'mu, x + t y = V'nu over convex weights mu, nu
            const Mat& V = K.vpoly().V;
            const int n = static_cast<int>(V.rows());
            const int d = static_cast<int>(V.cols());
            lp::Problem p;
            p.c = Vec::Zero(2 * n + 1);
            p.c[2 * n] = -1.0;  // minimize -t
            p.A = Mat::Zero(d + 2, 2 * n + 1);
            p.b = Vec::Zero(d + 2);
            // V'nu - V'mu - t y = 0
            p.A.topLeftCorner(d, n) = -V.transpose();
            p.A.block(0, n, d, n) = V.transpose();
            p.A.topRightCorner(d, 1) = -u;
            p.A.row(d).segment(0, n).setOnes();
            p.b[d] = 1.0;
            p.A.row(d + 1).segment(n, n).setOnes();
            p.b[d + 1] = 1.0;
            p.sense.assign(d + 2, lp::Sense::eq);
            p.nonneg.assign(2 * n + 1, true);
            p.nonneg[2 * n] = false;
            auto s = lp::solve(p);
            if (s.status != lp::Status::optimal)
                throw std::runtime_error("maximal_chord: LP failed");
            return std::max(0.0, -s.value);
        }
    }
    throw std::logic_error("maximal_chord: unreachable");
}

// ---------------------------------------------------------------------------
// fast repeated support queries (used by direction searches)

class SupportEval {
  public:
    explicit SupportEval(const ConvexBody& K) : K_(&K) {
        if (is_polytopal(K) &&
            !(K.kind() == ConvexBody::Kind::hpolytope && K.dim() > 3)) {
            auto vs = vertices(K);
            V_.resize(vs.size(), K.dim());
            for (size_t i = 0; i < vs.size(); ++i) V_.row(i) = vs[i].transpose();
            use_vertices_ = true;
        }
    }

    double operator()(const Vec& u) const {
        if (use_vertices_) return (V_ * u).maxCoeff();
        return support(*K_, u);
    }

  private:
    const ConvexBody* K_;
    Mat V_;
    bool use_vertices_ = false;
};

// ---------------------------------------------------------------------------
// inscribed ellipse r(t) = cos(t) a + b sin(t) y + x - a

struct InscribedEllipse {
    Vec x;        // anchor, r(0) = x
    Direction y;  // direction of the minor semi-axis coefficient b
    Vec a;        // offset from the center to the anchor
    double b;     // semi-axis along y, > 0
};

inline Vec ellipse_point(const InscribedEllipse& E, double t) {
    return std::cos(t) * E.a + E.b * std::sin(t) * E.y.vec() + E.x - E.a;
}

// Exact facet test for polytopal K: max_t <a_i, r(t)> has a closed form.
// For balls/ellipsoids the quadratic form along r(t) is a degree-2
// trigonometric polynomial whose maximum is located numerically to ~1e-14.
inline bool ellipse_fits(const ConvexBody& K, const InscribedEllipse& E,
                         double tol = kGeomTol) {
    if (is_polytopal(K)) {
        ConvexBody H = K.kind() == ConvexBody::Kind::hpolytope ? K : to_hpolytope(K);
        const auto& P = H.hpoly();
        for (int i = 0; i < P.A.rows(); ++i) {
            Vec ai = P.A.row(i).transpose();
            double base = ai.dot(E.x - E.a);
            double amp = std::hypot(ai.dot(E.a), E.b * ai.dot(E.y.vec()));
            double scale = ai.norm();
            if (base + amp > P.b[i] + tol * std::max(1.0, scale)) return false;
        }
        return true;
    }
    // smooth case: maximize q(t) = (r(t)-c)' Qinv (r(t)-c)
    Vec c;
    Mat Qinv;
    if (K.kind() == ConvexBody::Kind::ball) {
        c = K.ball_data().center;
        double r = K.ball_data().radius;
        Qinv = Mat::Identity(K.dim(), K.dim()) / (r * r);
    } else {
        c = K.ell().center;
        Qinv = K.ell().Qinv;
    }
    Vec p0 = E.x - E.a - c;
    Vec u = E.a;
    Vec v = E.b * E.y.vec();
    double qpp = p0.dot(Qinv * p0);
    double qpu = p0.dot(Qinv * u);
    double qpv = p0.dot(Qinv * v);
    double quu = u.dot(Qinv * u);
    double qvv = v.dot(Qinv * v);
    double quv = u.dot(Qinv * v);
    // q(t) = a0 + 2 qpu cos t + 2 qpv sin t + ((quu-qvv)/2) cos 2t + quv sin 2t
    double a0 = qpp + 0.5 * (quu + qvv);
    auto q = [&](double t) {
        return a0 + 2 * qpu * std::cos(t) + 2 * qpv * std::sin(t) +
               0.5 * (quu - qvv) * std::cos(2 * t) + quv * std::sin(2 * t);
    };
    auto dq = [&](double t) {
        return -2 * qpu * std::sin(t) + 2 * qpv * std::cos(t) -
               (quu - qvv) * std::sin(2 * t) + 2 * quv * std::cos(2 * t);
    };
    auto ddq = [&](double t) {
        return -2 * qpu * std::cos(t) - 2 * qpv * std::sin(t) -
               2 * (quu - qvv) * std::cos(2 * t) - 4 * quv * std::sin(2 * t);
    };
    double best = -std::numeric_limits<double>::infinity();
    const int n = 256;
    for (int i = 0; i < n; ++i) {
        double t = 2 * M_PI * i / n;
        for (int it = 0; it < 30; ++it) {  // Newton on q'
            double h = ddq(t);
            if (std::abs(h) < 1e-300) break;
            double tn = t - dq(t) / h;
            if (std::abs(tn - t) < 1e-15) { t = tn; break; }
            t = tn;
        }
        best = std::max(best, q(t));
        best = std::max(best, q(2 * M_PI * i / n));
    }
    return best <= 1.0 + tol;
}

// ---------------------------------------------------------------------------
// minimal width

// Directions at which piecewise-linear width/layer quotients can attain their
// extrema for a polytope: a superset of the facet normals of K + (-K).
// In d = 2 these are perpendiculars of vertex differences; in d = 3 facet
// normals arise from cross products of vertex-difference pairs. Extra
// candidates are harmless since callers only evaluate and compare.
inline std::vector<Vec> extremal_direction_candidates(const ConvexBody& K) {
    std::vector<Vec> out;
    const int d = K.dim();
    for (int i = 0; i < d; ++i) out.push_back(Vec::Unit(d, i));
    if (!is_polytopal(K)) return out;
    if (K.kind() == ConvexBody::Kind::hpolytope) {
        const Mat& A = K.hpoly().A;
        for (int i = 0; i < A.rows(); ++i)
            out.push_back(A.row(i).normalized().transpose());
    }
    if (d > 3) return out;
    auto vs = vertices(K);
    const int n = static_cast<int>(vs.size());
    std::vector<Vec> diffs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec e = vs[i] - vs[j];
            if (e.norm() > 1e-12) diffs.push_back(e.normalized());
        }
    if (d == 1) {
        out.push_back(Vec::Ones(1));
    } else if (d == 2) {
        for (const Vec& e : diffs) {
            Vec nrm(2);
            nrm << e[1], -e[0];
            out.push_back(nrm);
        }
    } else {
        for (size_t i = 0; i < diffs.size(); ++i)
            for (size_t j = i + 1; j < diffs.size(); ++j) {
                Vec c = diffs[i].head<3>().cross(diffs[j].head<3>());
                double nn = c.norm();
                if (nn > 1e-10) out.push_back(c / nn);
            }
    }
    return out;
}

// Minimal width over all directions; exhaustive grid + golden refinement in
// d = 2, candidate-seeded multistart pattern descent in d >= 3.
inline double minimal_width(const ConvexBody& K) {
    const int d = K.dim();
    if (d == 1) return width(K, Vec(Vec::Ones(1)));
    if (K.kind() == ConvexBody::Kind::ball) return 2.0 * K.ball_data().radius;
    if (K.kind() == ConvexBody::Kind::ellipsoid) {
        Eigen::SelfAdjointEigenSolver<Mat> es(K.ell().Q);
        return 2.0 * std::sqrt(std::max(0.0, es.eigenvalues().minCoeff()));
    }
    SupportEval h(K);
    auto w = [&](const Vec& u) { return h(u) + h(Vec(-u)); };
    if (d == 2) {
        auto f = [&](double th) {
            Vec u(2);
            u << std::cos(th), std::sin(th);
            return -w(u);
        };
        std::vector<double> seeds;
        for (const Vec& c : extremal_direction_candidates(K))
            seeds.push_back(std::atan2(c[1], c[0]));
        auto [th, negw] = opt::grid_golden_max(f, 0.0, M_PI, 2048, seeds, 1e-10);
        (void)th;
        return -negw;
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<Vec> starts = extremal_direction_candidates(K);
    if (d == 3) {
        auto fib = fibonacci_sphere(64);
        starts.insert(starts.end(), fib.begin(), fib.end());
    } else {
        auto g = rng_stream(7, 11);
        for (int i = 0; i < 64; ++i) starts.push_back(random_unit(g, d));
    }
    auto negw = [&](const Vec& u) { return -w(u); };
    for (const Vec& s : starts) {
        auto [v, fv] = opt::sphere_pattern_max(negw, s, {0.3, 1e-9, 4000});
        (void)v;
        best = std::min(best, -fv);
    }
    return best;
}

// ---------------------------------------------------------------------------
// deterministic interior point samples (Halton with rejection, plus vertices)

inline std::vector<Vec> sample_points(const ConvexBody& K, int n,
                                      std::uint64_t skip = 0) {
    auto [lo, hi] = bounding_box(K);
    int d = K.dim();
    std::vector<Vec> out;
    out.reserve(n);
    if (is_polytopal(K)) {
        auto vs = vertices(K);
        out.insert(out.end(), vs.begin(), vs.end());
    }
    std::uint64_t idx = 1 + skip;
    int guard = 0;
    while (static_cast<int>(out.size()) < n && guard < 1000 * n + 100000) {
        Vec h = halton_point(idx++, d);
        ++guard;
        Vec x = lo + (hi - lo).cwiseProduct(h);
        if (contains(K, x)) out.push_back(x);
    }
    return out;
}

}  // namespace polyineq
