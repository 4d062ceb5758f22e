// Seeded generators of random test bodies and affine maps. Shared by the
// property-test suites and the verification harness.
#pragma once

#include "polyineq/geometry.hpp"

namespace polyineq {

// Random V-polytope with vertices on a distorted sphere shell; rank-checked.
inline ConvexBody random_vpolytope(std::mt19937_64& g, int d, int npts) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat V(npts, d);
        for (int i = 0; i < npts; ++i)
            V.row(i) = (random_unit(g, d) * (0.4 + uniform(g, 0.0, 1.2))).transpose();
        try {
            return ConvexBody::vpolytope(V);
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random_vpolytope: generation failed");
}

// Random origin-symmetric V-polytope (vertex set closed under negation).
inline ConvexBody random_symmetric_vpolytope(std::mt19937_64& g, int d, int npairs) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat V(2 * npairs, d);
        for (int i = 0; i < npairs; ++i) {
            Vec v = random_unit(g, d) * (0.4 + uniform(g, 0.0, 1.2));
            V.row(2 * i) = v.transpose();
            V.row(2 * i + 1) = -v.transpose();
        }
        try {
            return ConvexBody::vpolytope(V);
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random_symmetric_vpolytope: generation failed");
}

inline ConvexBody random_ellipsoid(std::mt19937_64& g, int d, bool centered) {
    Mat M(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) M(i, j) = uniform(g, -1.0, 1.0);
    Mat Q = M * M.transpose() + 0.05 * Mat::Identity(d, d);
    Vec c = centered ? Vec(Vec::Zero(d)) : Vec(0.3 * gaussian_vec(g, d));
    return ConvexBody::ellipsoid(c, Q);
}

inline ConvexBody random_symmetric_box(std::mt19937_64& g, int d) {
    Vec h(d);
    for (int i = 0; i < d; ++i) h[i] = 0.3 + uniform(g, 0.0, 1.7);
    return ConvexBody::box(Vec(-h), h);
}

// Random bounded H-polytope containing the origin strictly inside: random
// outward normals with offsets bounded away from zero, axis rows appended so
// the recession cone is trivial.
inline ConvexBody random_hpolytope(std::mt19937_64& g, int d, int extra_rows) {
    Mat A(extra_rows + 2 * d, d);
    Vec b(extra_rows + 2 * d);
    for (int i = 0; i < extra_rows; ++i) {
        A.row(i) = random_unit(g, d).transpose();
        b[i] = 0.4 + uniform(g, 0.0, 1.2);
    }
    for (int i = 0; i < d; ++i) {
        A.row(extra_rows + 2 * i) = Vec::Unit(d, i).transpose();
        b[extra_rows + 2 * i] = 0.8 + uniform(g, 0.0, 1.2);
        A.row(extra_rows + 2 * i + 1) = -Vec::Unit(d, i).transpose();
        b[extra_rows + 2 * i + 1] = 0.8 + uniform(g, 0.0, 1.2);
    }
    return ConvexBody::hpolytope(A, b);
}

// Random symmetric body of mixed kind for the alpha/gauge property suites.
inline ConvexBody random_symmetric_body(std::mt19937_64& g, int d) {
    switch (static_cast<int>(uniform(g, 0.0, 3.0))) {
        case 0: return random_symmetric_vpolytope(g, d, d == 2 ? 4 : 5);
        case 1: return random_ellipsoid(g, d, true);
        default: return random_symmetric_box(g, d);
    }
}

struct AffineMap {
    Mat M;
    Vec t;
    Vec apply(const Vec& x) const { return M * x + t; }
};

inline AffineMap random_affine(std::mt19937_64& g, int d) {
    for (;;) {
        Mat M(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) M(i, j) = uniform(g, -1.0, 1.0);
        if (std::abs(M.determinant()) > 0.1) {
            return AffineMap{M, 0.5 * gaussian_vec(g, d)};
        }
    }
}

// Image of a body under an invertible affine map; stays within the kinds that
// alpha can evaluate (polytopes map by vertices, ellipsoids in closed form).
inline ConvexBody map_body(const ConvexBody& K, const AffineMap& T) {
    switch (K.kind()) {
        case ConvexBody::Kind::ellipsoid: {
            const auto& e = K.ell();
            return ConvexBody::ellipsoid(T.apply(e.center),
                                         Mat(T.M * e.Q * T.M.transpose()));
        }
        case ConvexBody::Kind::ball: {
            const auto& bl = K.ball_data();
            Mat Q = bl.radius * bl.radius * Mat::Identity(K.dim(), K.dim());
            return ConvexBody::ellipsoid(T.apply(bl.center),
                                         Mat(T.M * Q * T.M.transpose()));
        }
        default: {
            auto vs = vertices(K);
            Mat V(vs.size(), K.dim());
            for (size_t i = 0; i < vs.size(); ++i)
                V.row(i) = T.apply(vs[i]).transpose();
            return ConvexBody::vpolytope(V);
        }
    }
}

}  // namespace polyineq
