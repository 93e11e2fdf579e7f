#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "geom/scalar.hpp"

namespace geo {

// Stable real quadratic: a t^2 + b t + c = 0. Near-vanishing leading
// coefficient degrades gracefully to the linear root (the second root
// walks off to infinity and is dropped by the caller's residual checks).
template <class R>
inline std::vector<R> solve_quadratic(const R& a, const R& b, const R& c) {
    using std::sqrt;
    std::vector<R> out;
    R mag = max_v(abs_v(b), abs_v(c));
    if (abs_v(a) <= R(1e-14) * max_v(mag, R(1e-300))) {
        if (b != R(0)) out.push_back(-c / b);
        return out;
    }
    R disc = b * b - R(4) * a * c;
    if (disc < R(0)) return out;
    R rt = sqrt(disc);
    R q = b >= R(0) ? -(b + rt) / R(2) : -(b - rt) / R(2);
    out.push_back(q / a);
    if (q != R(0)) out.push_back(c / q);
    return out;
}

// All real roots of c3 t^3 + c2 t^2 + c1 t + c0, Newton-polished.
template <class R>
inline std::vector<R> solve_cubic(R c3, R c2, R c1, R c0) {
    using std::cbrt;
    using std::pow;
    using std::sqrt;
    R mx = max_v(max_v(abs_v(c3), abs_v(c2)), max_v(abs_v(c1), abs_v(c0)));
    if (mx == R(0)) return {};
    c3 /= mx; c2 /= mx; c1 /= mx; c0 /= mx;
    if (abs_v(c3) < R(1e-13)) return solve_quadratic(c2, c1, c0);

    // depressed form t = s - c2/(3 c3):  s^3 + p s + q = 0
    R b = c2 / c3, c = c1 / c3, d = c0 / c3;
    R p = c - b * b / R(3);
    R q = R(2) * b * b * b / R(27) - b * c / R(3) + d;
    std::vector<R> roots;
    R disc = q * q / R(4) + p * p * p / R(27);
    auto cbrt_r = [](const R& x) -> R {
        using std::pow;
        if (x == R(0)) return R(0);
        R a = abs_v(x);
        R r = pow(a, R(1) / R(3));
        return x < R(0) ? -r : r;
    };
    if (disc > R(0)) {
        R rt = sqrt(disc);
        R u = cbrt_r(-q / R(2) + rt);
        R v = cbrt_r(-q / R(2) - rt);
        roots.push_back(u + v);
    } else {
        // three real roots
        using std::acos;
        using std::cos;
        R m = R(2) * sqrt(max_v(-p / R(3), R(0)));
        if (m == R(0)) {
            roots.push_back(R(0));
        } else {
            R arg = R(3) * q / (p * m);
            if (arg > R(1)) arg = R(1);
            if (arg < R(-1)) arg = R(-1);
            R theta = acos(arg) / R(3);
            R twopi3 = R(2) * pi_v<R>() / R(3);
            for (int k = 0; k < 3; ++k) {
                using std::cos;
                roots.push_back(m * cos(theta - twopi3 * R(k)));
            }
        }
    }
    // undo depression, polish
    std::vector<R> out;
    for (R s : roots) {
        R t = s - b / R(3);
        for (int it = 0; it < 3; ++it) {
            R f = ((c3 * t + c2) * t + c1) * t + c0;
            R fp = (R(3) * c3 * t + R(2) * c2) * t + c1;
            if (abs_v(fp) > R(0)) t -= f / fp;
        }
        bool dup = false;
        for (const R& u : out)
            if (abs_v(u - t) <= R(1e-12) * max_v(R(1), abs_v(t))) dup = true;
        if (!dup) out.push_back(t);
    }
    return out;
}

// Kernel of an m x n matrix (row major), via Gauss-Jordan with full
// pivoting. Returns a basis of the null space; `rank_out` gets the
// numerical rank at relative threshold `rel_eps`.
template <class R>
inline std::vector<std::vector<R>> nullspace(std::vector<std::vector<R>> m, int n,
                                             double rel_eps, int* rank_out = nullptr) {
    int rows = int(m.size());
    std::vector<int> col_of_row;          // pivot column of each eliminated row
    std::vector<bool> col_used(n, false);
    R maxabs(0);
    for (auto& r : m)
        for (auto& v : r) maxabs = max_v(maxabs, abs_v(v));
    if (maxabs == R(0)) maxabs = R(1);
    R eps = maxabs * R(rel_eps);

    int rank = 0;
    for (int step = 0; step < rows; ++step) {
        int pr = -1, pc = -1;
        R best(0);
        for (int i = rank; i < rows; ++i)
            for (int j = 0; j < n; ++j)
                if (!col_used[j] && abs_v(m[i][j]) > best) { best = abs_v(m[i][j]); pr = i; pc = j; }
        if (pr < 0 || best <= eps) break;
        std::swap(m[pr], m[rank]);
        R piv = m[rank][pc];
        for (int j = 0; j < n; ++j) m[rank][j] /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            R f = m[i][pc];
            if (f == R(0)) continue;
            for (int j = 0; j < n; ++j) m[i][j] -= f * m[rank][j];
        }
        col_used[pc] = true;
        col_of_row.push_back(pc);
        ++rank;
    }
    if (rank_out) *rank_out = rank;

    std::vector<std::vector<R>> basis;
    for (int j = 0; j < n; ++j) {
        if (col_used[j]) continue;
        std::vector<R> v(n, R(0));
        v[j] = R(1);
        for (int i = 0; i < rank; ++i) v[col_of_row[i]] = -m[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

// eigen-decomposition of a symmetric 2x2 [[a, b], [b, c]]
template <class R>
struct Eigen2 {
    R lambda1, lambda2;              // lambda1 <= lambda2
    R v1x, v1y, v2x, v2y;            // unit eigenvectors
};

template <class R>
inline Eigen2<R> sym_eigen2(const R& a, const R& b, const R& c) {
    using std::sqrt;
    Eigen2<R> e{};
    R tr = a + c;
    R d = sqrt(max_v(sq(a - c) + R(4) * b * b, R(0)));
    e.lambda1 = (tr - d) / R(2);
    e.lambda2 = (tr + d) / R(2);
    // eigenvector for lambda2: pick the better-conditioned column
    R vx1 = b, vy1 = e.lambda2 - a;
    R vx2 = e.lambda2 - c, vy2 = b;
    R vx, vy;
    if (vx1 * vx1 + vy1 * vy1 >= vx2 * vx2 + vy2 * vy2) { vx = vx1; vy = vy1; }
    else { vx = vx2; vy = vy2; }
    if (abs_v(vx) + abs_v(vy) == R(0)) { vx = R(1); vy = R(0); }
    R n = sqrt(vx * vx + vy * vy);
    e.v2x = vx / n; e.v2y = vy / n;
    e.v1x = -e.v2y; e.v1y = e.v2x;
    return e;
}

}  // namespace geo
