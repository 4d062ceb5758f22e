// Derivative-free optimization building blocks: certified 1-D grid+golden
// maximization, Nelder-Mead, and pattern search on spheres. These back the
// direction searches (alpha, minimal width) and the min-max estimators.
#pragma once

#include "polyineq/util.hpp"

#include <functional>

namespace polyineq::opt {

using Fn1 = std::function<double(double)>;

// Golden-section maximization on [lo, hi]; assumes a single interior maximum
// in the bracket (which grid scanning guarantees locally).
inline std::pair<double, double> golden_max(const Fn1& f, double lo, double hi,
                                            double xtol = 1e-12) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    double xm = 0.5 * (a + b), fm = f(xm);
    if (fc > fm) { xm = c; fm = fc; }
    if (fd > fm) { xm = d; fm = fd; }
    return {xm, fm};
}

// Dense scan of [lo, hi) with n nodes, golden refinement of every local
// maximum bracket, plus optional extra seed abscissae. Returns (x*, f*).
inline std::pair<double, double> grid_golden_max(
    const Fn1& f, double lo, double hi, int n,
    const std::vector<double>& seeds = {}, double xtol = 1e-12) {
    std::vector<double> xs(n), fs(n);
    double h = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
        xs[i] = lo + i * h;
        fs[i] = f(xs[i]);
    }
    double bx = xs[0], bf = fs[0];
    auto refine = [&](double a, double b) {
        auto [x, v] = golden_max(f, a, b, xtol);
        if (v > bf) { bf = v; bx = x; }
    };
    for (int i = 0; i < n; ++i) {
        double fm = fs[(i - 1 + n) % n], fp = fs[(i + 1) % n];
        if (fs[i] >= fm && fs[i] >= fp)
            refine(xs[i] - h, xs[i] + h);
    }
    for (double s : seeds) refine(s - h, s + h);
    return {bx, bf};
}

using FnD = std::function<double(const Vec&)>;

struct NmOptions {
    int max_iter = 4000;
    double ftol = 1e-14;
    double xtol = 1e-12;
};

// Nelder-Mead minimization with one shrink-restart around the best point.
inline std::pair<Vec, double> nelder_mead_min(const FnD& f, const Vec& x0,
                                              double scale,
                                              NmOptions options = {}) {
    const int d = static_cast<int>(x0.size());
    auto run = [&](Vec start, double sc) {
        std::vector<Vec> simplex(d + 1, start);
        std::vector<double> val(d + 1);
        for (int i = 0; i < d; ++i) simplex[i + 1][i] += sc;
        for (int i = 0; i <= d; ++i) val[i] = f(simplex[i]);
        for (int it = 0; it < options.max_iter; ++it) {
            std::vector<int> ord(d + 1);
            for (int i = 0; i <= d; ++i) ord[i] = i;
            std::sort(ord.begin(), ord.end(),
                      [&](int a, int b) { return val[a] < val[b]; });
            std::vector<Vec> s2(d + 1);
            std::vector<double> v2(d + 1);
            for (int i = 0; i <= d; ++i) {
                s2[i] = simplex[ord[i]];
                v2[i] = val[ord[i]];
            }
            simplex = s2;
            val = v2;
            double spread = 0.0;
            for (int i = 1; i <= d; ++i)
                spread = std::max(spread, (simplex[i] - simplex[0]).norm());
            if (spread < options.xtol && std::abs(val[d] - val[0]) < options.ftol)
                break;
            Vec centroid = Vec::Zero(d);
            for (int i = 0; i < d; ++i) centroid += simplex[i];
            centroid /= d;
            Vec xr = centroid + (centroid - simplex[d]);
            double fr = f(xr);
            if (fr < val[0]) {
                Vec xe = centroid + 2.0 * (centroid - simplex[d]);
                double fe = f(xe);
                if (fe < fr) { simplex[d] = xe; val[d] = fe; }
                else { simplex[d] = xr; val[d] = fr; }
            } else if (fr < val[d - 1]) {
                simplex[d] = xr;
                val[d] = fr;
            } else {
                Vec xc = centroid + 0.5 * (simplex[d] - centroid);
                double fc = f(xc);
                if (fc < val[d]) { simplex[d] = xc; val[d] = fc; }
                else {
                    for (int i = 1; i <= d; ++i) {
                        simplex[i] = simplex[0] + 0.5 * (simplex[i] - simplex[0]);
                        val[i] = f(simplex[i]);
                    }
                }
            }
        }
        int best = 0;
        for (int i = 1; i <= d; ++i)
            if (val[i] < val[best]) best = i;
        return std::make_pair(simplex[best], val[best]);
    };
    auto [x1, f1] = run(x0, scale);
    auto [x2, f2] = run(x1, scale * 1e-3);  // restart tightens the final digits
    return f2 < f1 ? std::make_pair(x2, f2) : std::make_pair(x1, f1);
}

// Orthonormal basis of the tangent space at unit vector v.
inline Mat tangent_basis(const Vec& v) {
    const int d = static_cast<int>(v.size());
    Mat M(d, d);
    M.col(0) = v;
    for (int i = 1; i < d; ++i) M.col(i) = Vec::Unit(d, (i - 1) % d);
    Eigen::HouseholderQR<Mat> qr(M);
    Mat Q = qr.householderQ();
    Mat T = Q.rightCols(d - 1);
    return T;
}

struct SpherePatternOptions {
    double init_step = 0.4;
    double min_step = 1e-10;
    int max_evals = 20000;
};

// Compass/pattern ascent of f over the unit sphere starting at v0.
inline std::pair<Vec, double> sphere_pattern_max(const FnD& f, const Vec& v0,
                                                 SpherePatternOptions o = {}) {
    Vec v = v0.normalized();
    double fv = f(v);
    double step = o.init_step;
    int evals = 1;
    const int d = static_cast<int>(v.size());
    while (step > o.min_step && evals < o.max_evals) {
        Mat T = tangent_basis(v);
        bool improved = false;
        for (int i = 0; i < d - 1 && !improved; ++i) {
            for (double sgn : {1.0, -1.0}) {
                Vec cand = (v + sgn * step * T.col(i)).normalized();
                double fc = f(cand);
                ++evals;
                if (fc > fv + 1e-16) {
                    v = cand;
                    fv = fc;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return {v, fv};
}

}  // namespace polyineq::opt
