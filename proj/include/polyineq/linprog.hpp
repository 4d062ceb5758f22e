// Dense two-phase primal simplex for the small/medium LPs that appear in
// this project: support functionals and chords of H-polytopes, discrete
// zero-sum game values, and the Harris semi-infinite LP after constraint
// discretization. Minimization only; callers negate for max problems.
#pragma once

#include "polyineq/util.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace polyineq::lp {

enum class Status { optimal, infeasible, unbounded, iteration_limit };

enum class Sense { le, ge, eq };

struct Problem {
    Vec c;                        // objective, min c.x
    Mat A;                        // row i: A.row(i) (sense_i) b[i]
    std::vector<Sense> sense;
    Vec b;
    std::vector<bool> nonneg;     // per variable; false = free (split internally)
};

struct Solution {
    Status status = Status::infeasible;
    double value = std::numeric_limits<double>::quiet_NaN();
    Vec x;        // original variables
    Vec dual;     // one multiplier per row of the min-form problem
    int iterations = 0;
};

namespace detail {

struct Standard {
    Mat A;                 // m x n, all rows equalities, b >= 0
    Vec b, c;
    std::vector<int> split_pos;   // column of x_j+ for original var j
    std::vector<int> split_neg;   // column of x_j- (or -1 if nonneg)
    int n_struct = 0;             // structural columns (before artificials)
    std::vector<int> basis_hint;  // per row: +1 slack column usable as basis, or -1
};

inline Standard to_standard(const Problem& p) {
    const int m = static_cast<int>(p.A.rows());
    const int nv = static_cast<int>(p.A.cols());
    Standard s;
    s.split_pos.resize(nv);
    s.split_neg.assign(nv, -1);

    int ncols = 0;
    for (int j = 0; j < nv; ++j) {
        s.split_pos[j] = ncols++;
        if (!p.nonneg[j]) s.split_neg[j] = ncols++;
    }
    // one slack/surplus per inequality row
    std::vector<int> slack_col(m, -1);
    Vec brow = p.b;
    std::vector<double> row_sign(m, 1.0);
    std::vector<Sense> sense = p.sense;
    for (int i = 0; i < m; ++i) {
        if (brow[i] < 0) {   // flip row so b >= 0
            row_sign[i] = -1.0;
            brow[i] = -brow[i];
            if (sense[i] == Sense::le) sense[i] = Sense::ge;
            else if (sense[i] == Sense::ge) sense[i] = Sense::le;
        }
        if (sense[i] != Sense::eq) slack_col[i] = ncols++;
    }
    s.n_struct = ncols;

    s.A = Mat::Zero(m, ncols);
    s.b = brow;
    s.c = Vec::Zero(ncols);
    for (int j = 0; j < nv; ++j) {
        s.c[s.split_pos[j]] = p.c[j];
        if (s.split_neg[j] >= 0) s.c[s.split_neg[j]] = -p.c[j];
    }
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nv; ++j) {
            double a = row_sign[i] * p.A(i, j);
            if (a == 0.0) continue;
            s.A(i, s.split_pos[j]) = a;
            if (s.split_neg[j] >= 0) s.A(i, s.split_neg[j]) = -a;
        }
        if (slack_col[i] >= 0)
            s.A(i, slack_col[i]) = (sense[i] == Sense::le) ? 1.0 : -1.0;
    }
    s.basis_hint.assign(m, -1);
    for (int i = 0; i < m; ++i)
        if (slack_col[i] >= 0 && sense[i] == Sense::le) s.basis_hint[i] = slack_col[i];
    return s;
}

// Tableau in canonical form: basic columns are unit vectors. `cost` holds
// reduced costs; `obj` the (negated) objective contribution of the basis.
struct Tableau {
    Mat T;      // m x (n+1), last column = rhs
    Vec cost;   // n reduced costs
    double obj = 0.0;
    std::vector<int> basis;
    std::vector<bool> banned;  // columns barred from entering (artificials in phase 2)
};

inline void pivot(Tableau& t, int row, int col) {
    const int n = static_cast<int>(t.cost.size());
    double piv = t.T(row, col);
    t.T.row(row) /= piv;
    for (int i = 0; i < static_cast<int>(t.T.rows()); ++i) {
        if (i == row) continue;
        double f = t.T(i, col);
        if (f != 0.0) t.T.row(i) -= f * t.T.row(row);
    }
    double f = t.cost[col];
    if (f != 0.0) {
        t.cost.head(n) -= f * t.T.row(row).head(n).transpose();
        t.obj -= f * t.T(row, n);
    }
    t.basis[row] = col;
}

// Returns optimal(true)/unbounded(false); stops early on iteration budget.
inline Status run_simplex(Tableau& t, int max_iter, int& iters) {
    const int m = static_cast<int>(t.T.rows());
    const int n = static_cast<int>(t.cost.size());
    const double cost_tol = 1e-10;
    const double piv_tol = 1e-11;
    const int bland_after = 4 * (m + n) + 200;
    for (; iters < max_iter; ++iters) {
        int enter = -1;
        if (iters < bland_after) {
            double best = -cost_tol;
            for (int j = 0; j < n; ++j)
                if (!t.banned[j] && t.cost[j] < best) { best = t.cost[j]; enter = j; }
        } else {  // Bland's rule
            for (int j = 0; j < n; ++j)
                if (!t.banned[j] && t.cost[j] < -cost_tol) { enter = j; break; }
        }
        if (enter < 0) return Status::optimal;
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            double a = t.T(i, enter);
            if (a > piv_tol) {
                double r = t.T(i, n) / a;
                if (r < best_ratio - 1e-12 ||
                    (r < best_ratio + 1e-12 &&
                     (leave < 0 || t.basis[i] < t.basis[leave]))) {
                    best_ratio = r;
                    leave = i;
                }
            }
        }
        if (leave < 0) return Status::unbounded;
        pivot(t, leave, enter);
    }
    return Status::iteration_limit;
}

}  // namespace detail

inline Solution solve(const Problem& p) {
    if (p.A.rows() != p.b.size() || p.A.cols() != p.c.size() ||
        p.sense.size() != static_cast<size_t>(p.A.rows()) ||
        p.nonneg.size() != static_cast<size_t>(p.A.cols()))
        throw std::invalid_argument("lp::solve: inconsistent problem dimensions");

    detail::Standard s = detail::to_standard(p);
    const int m = static_cast<int>(s.A.rows());
    const int n0 = s.n_struct;

    // Attach artificials where no slack can serve as the initial basic column.
    detail::Tableau t;
    t.basis.assign(m, -1);
    std::vector<int> art_cols;
    for (int i = 0; i < m; ++i) {
        t.basis[i] = s.basis_hint[i];
        if (t.basis[i] < 0) art_cols.push_back(i);
    }
    const int n = n0 + static_cast<int>(art_cols.size());
    t.T = Mat::Zero(m, n + 1);
    t.T.leftCols(n0) = s.A;
    t.T.col(n) = s.b;
    {
        int k = n0;
        for (int i : art_cols) t.T(i, k) = 1.0, t.basis[i] = k, ++k;
    }
    t.banned.assign(n, false);

    Solution sol;
    sol.iterations = 0;
    const int max_iter = 200 * (m + n) + 5000;

    // Phase 1: minimize the sum of artificials.
    if (!art_cols.empty()) {
        t.cost = Vec::Zero(n);
        for (int j = n0; j < n; ++j) t.cost[j] = 1.0;
        t.obj = 0.0;
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] >= n0) {  // price out basic artificials
                t.cost.head(n) -= t.T.row(i).head(n).transpose();
                t.obj -= t.T(i, n);
            }
        }
        Status st = detail::run_simplex(t, max_iter, sol.iterations);
        if (st == Status::iteration_limit) { sol.status = st; return sol; }
        if (-t.obj > 1e-7) { sol.status = Status::infeasible; return sol; }
        // Drive leftover basic artificials out (rows with no pivot are redundant).
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] >= n0) {
                int piv = -1;
                for (int j = 0; j < n0; ++j)
                    if (std::abs(t.T(i, j)) > 1e-9) { piv = j; break; }
                if (piv >= 0) detail::pivot(t, i, piv);
            }
        }
        for (int j = n0; j < n; ++j) t.banned[j] = true;
    } else {
        for (int j = n0; j < n; ++j) t.banned[j] = true;
    }

    // Phase 2: reduced costs for the true objective under the current basis.
    t.cost = Vec::Zero(n);
    t.cost.head(n0) = s.c;
    t.obj = 0.0;
    for (int i = 0; i < m; ++i) {
        int bj = t.basis[i];
        double cb = (bj < n0) ? s.c[bj] : 0.0;
        if (cb != 0.0) {
            t.cost.head(n) -= cb * t.T.row(i).head(n).transpose();
            t.obj -= cb * t.T(i, n);
        }
    }
    Status st = detail::run_simplex(t, max_iter, sol.iterations);
    if (st != Status::optimal) { sol.status = st; return sol; }

    // Recover x and duals.
    Vec xs = Vec::Zero(n);
    for (int i = 0; i < m; ++i) xs[t.basis[i]] = t.T(i, n);
    const int nv = static_cast<int>(p.c.size());
    sol.x = Vec::Zero(nv);
    for (int j = 0; j < nv; ++j) {
        sol.x[j] = xs[s.split_pos[j]];
        if (s.split_neg[j] >= 0) sol.x[j] -= xs[s.split_neg[j]];
    }
    sol.value = p.c.dot(sol.x);

    // dual = solve(B^T y = c_B) with columns of the standard-form matrix.
    Mat B = Mat::Zero(m, m);
    Vec cb = Vec::Zero(m);
    for (int i = 0; i < m; ++i) {
        int bj = t.basis[i];
        if (bj < n0) {
            B.col(i) = s.A.col(bj);
            cb[i] = s.c[bj];
        } else {
            B(art_cols[bj - n0], i) = 1.0;
            cb[i] = 0.0;
        }
    }
    Eigen::FullPivLU<Mat> lu(B.transpose());
    Vec y = lu.isInvertible() ? Vec(lu.solve(cb)) : Vec::Zero(m);
    // Undo the sign flips applied to rows with negative rhs.
    sol.dual = Vec::Zero(m);
    for (int i = 0; i < m; ++i) sol.dual[i] = (p.b[i] < 0 ? -y[i] : y[i]);

    sol.status = Status::optimal;
    return sol;
}

// max c.x subject to A x <= b with x free; the workhorse for support
// functionals and maximal chords of H-polytopes.
inline Solution maximize_le(const Vec& c, const Mat& A, const Vec& b) {
    Problem p;
    p.c = -c;
    p.A = A;
    p.b = b;
    p.sense.assign(A.rows(), Sense::le);
    p.nonneg.assign(A.cols(), false);
    Solution s = solve(p);
    if (s.status == Status::optimal) s.value = -s.value;
    return s;
}

}  // namespace polyineq::lp
