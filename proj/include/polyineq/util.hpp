// Small shared helpers: deterministic RNG streams, low-discrepancy point
// sets, 2-D convex hulls, and a bounded parallel map.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace polyineq {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Derives an independent RNG stream from a user seed and a stream tag, so
// that adding a consumer never shifts the draws of another.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return std::mt19937_64(z ^ (z >> 31));
}

inline double uniform(std::mt19937_64& g, double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline Vec gaussian_vec(std::mt19937_64& g, int d) {
    std::normal_distribution<double> n;
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = n(g);
    return v;
}

inline Vec random_unit(std::mt19937_64& g, int d) {
    for (;;) {
        Vec v = gaussian_vec(g, d);
        double n = v.norm();
        if (n > 1e-12) return v / n;
    }
}

// Halton sequence (1-based index), bases = first primes.
inline double halton(std::uint64_t index, int base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= base;
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

inline Vec halton_point(std::uint64_t index, int dim) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    Vec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = halton(index, primes[i % 8]);
    return p;
}

// Deterministic, roughly equidistributed points on S^2.
inline std::vector<Vec> fibonacci_sphere(int n) {
    std::vector<Vec> pts;
    pts.reserve(n);
    const double ga = M_PI * (1.0 + std::sqrt(5.0));
    for (int i = 0; i < n; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / n;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double t = ga * (i + 0.5);
        Vec p(3);
        p << r * std::cos(t), r * std::sin(t), z;
        pts.push_back(p);
    }
    return pts;
}

// Equispaced unit vectors on S^1 over [0, 2*pi).
inline std::vector<Vec> circle_points(int n) {
    std::vector<Vec> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        double t = 2.0 * M_PI * i / n;
        Vec p(2);
        p << std::cos(t), std::sin(t);
        pts.push_back(p);
    }
    return pts;
}

// Andrew monotone chain; returns hull vertices in CCW order.
inline std::vector<Vec> convex_hull_2d(std::vector<Vec> pts) {
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec& a, const Vec& b) {
                              return (a - b).norm() < 1e-14;
                          }),
              pts.end());
    int n = static_cast<int>(pts.size());
    if (n < 3) return pts;
    std::vector<Vec> h(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-15) --k;
        h[k++] = pts[i];
    }
    for (int i = n - 2, t = k + 1; i >= 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-15) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline double polygon_area(const std::vector<Vec>& hull) {
    double a = 0.0;
    int n = static_cast<int>(hull.size());
    for (int i = 0; i < n; ++i) {
        const Vec& p = hull[i];
        const Vec& q = hull[(i + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(a);
}

inline int thread_cap() {
    if (const char* env = std::getenv("POLYINEQ_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(i) for i in [0, n) on up to thread_cap() threads. Each task writes
// only its own slot, so results do not depend on scheduling.
inline void parallel_for(int n, const std::function<void(int)>& fn) {
    int nt = std::min(thread_cap(), n);
    if (nt <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        workers.emplace_back([&, t] {
            for (int i = t; i < n; i += nt) fn(i);
        });
    }
    for (auto& w : workers) w.join();
}

// Fixed-format numeric printing shared by CSV/JSON emitters so repeated runs
// are byte-identical.
inline std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
}

}  // namespace polyineq
