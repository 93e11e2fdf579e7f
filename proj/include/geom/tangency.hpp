#pragma once

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include "geom/euclid.hpp"

namespace geo {

// One Apollonius-style tangency constraint. Line constraints may carry a
// fixed center side (sign of the line form at the center); circle
// constraints may fix the tangency sense (+1 external, -1 internal).
template <class R>
struct TangencyConstraint {
    enum Kind { PointK, LineK, CircleK } kind;
    Pt<R> point{};
    Ln<R> line{};
    Circ<R> circle{};
    int sign = 0;  // 0 = both

    static TangencyConstraint through(const Pt<R>& p) {
        TangencyConstraint c; c.kind = PointK; c.point = p; return c;
    }
    static TangencyConstraint to_line(const Ln<R>& l, int side = 0) {
        TangencyConstraint c; c.kind = LineK; c.line = l; c.sign = side; return c;
    }
    static TangencyConstraint to_line_side_of(const Ln<R>& l, const Pt<R>& side_pt) {
        TangencyConstraint c; c.kind = LineK; c.line = l;
        c.sign = l.eval(side_pt) >= R(0) ? +1 : -1;
        return c;
    }
    static TangencyConstraint to_circle(const Circ<R>& cc, int sense = 0) {
        TangencyConstraint c; c.kind = CircleK; c.circle = cc; c.sign = sense; return c;
    }
};

// Reduce each sign pattern to a linear system in (x, y, r, w) with
// w = x^2 + y^2 - r^2, then close with the quadratic relation. Solutions
// are residual-verified against all three constraints and deduplicated.
template <class R>
inline std::vector<Circ<R>> apollonius(const std::array<TangencyConstraint<R>, 3>& cons) {
    using std::sqrt;
    std::vector<Circ<R>> sols;

    R sc(1);
    for (const auto& c : cons) {
        if (c.kind == TangencyConstraint<R>::PointK) sc = max_v(sc, local_scale<R>({c.point}));
        if (c.kind == TangencyConstraint<R>::CircleK)
            sc = max_v(sc, max_v(local_scale<R>({c.circle.center}), c.circle.radius));
    }
    R verify_tol = R(1e-9) * sc;
    R rmin = R(1e-9) * sc;

    std::array<std::vector<int>, 3> choice;
    for (int i = 0; i < 3; ++i) {
        if (cons[i].kind == TangencyConstraint<R>::PointK)
            choice[i] = {0};
        else if (cons[i].sign != 0)
            choice[i] = {cons[i].sign};
        else
            choice[i] = {+1, -1};
    }

    for (int s0 : choice[0])
        for (int s1 : choice[1])
            for (int s2 : choice[2]) {
                int signs[3] = {s0, s1, s2};
                // rows over unknowns (x, y, r, w), rhs in col 4
                R A[3][5];
                bool uses_w = false;
                for (int i = 0; i < 3; ++i) {
                    const auto& c = cons[i];
                    R s = R(signs[i]);
                    if (c.kind == TangencyConstraint<R>::PointK) {
                        A[i][0] = R(-2) * c.point.x;
                        A[i][1] = R(-2) * c.point.y;
                        A[i][2] = R(0);
                        A[i][3] = R(1);
                        A[i][4] = -(sq(c.point.x) + sq(c.point.y));
                        uses_w = true;
                    } else if (c.kind == TangencyConstraint<R>::LineK) {
                        A[i][0] = c.line.a;
                        A[i][1] = c.line.b;
                        A[i][2] = -s;
                        A[i][3] = R(0);
                        A[i][4] = -c.line.c;
                    } else {
                        A[i][0] = R(-2) * c.circle.center.x;
                        A[i][1] = R(-2) * c.circle.center.y;
                        A[i][2] = R(-2) * s * c.circle.radius;
                        A[i][3] = R(1);
                        A[i][4] = sq(c.circle.radius) - dot(c.circle.center, c.circle.center);
                        uses_w = true;
                    }
                }

                auto try_push = [&](const Pt<R>& o, const R& r) {
                    if (!(r > rmin)) return;
                    for (int i = 0; i < 3; ++i) {
                        const auto& c = cons[i];
                        R res;
                        if (c.kind == TangencyConstraint<R>::PointK)
                            res = abs_v(dist(o, c.point) - r);
                        else if (c.kind == TangencyConstraint<R>::LineK)
                            res = abs_v(c.line.eval(o) - R(signs[i]) * r);
                        else
                            res = abs_v(dist(o, c.circle.center) -
                                        abs_v(r + R(signs[i]) * c.circle.radius));
                        if (res > verify_tol) return;
                    }
                    for (const auto& s : sols)
                        if (dist(s.center, o) < R(1e-7) * sc && abs_v(s.radius - r) < R(1e-7) * sc)
                            return;
                    sols.push_back({o, r});
                };

                if (!uses_w) {
                    // plain 3x3 in (x, y, r)
                    std::vector<std::vector<R>> m(3, std::vector<R>(4));
                    for (int i = 0; i < 3; ++i)
                        for (int j = 0; j < 4; ++j)
                            m[i][j] = j < 3 ? A[i][j] : -A[i][4];  // homogeneous: [M | -rhs] kernel
                    // solve directly via Cramer
                    R det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                            A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                            A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
                    if (abs_v(det) <= R(1e-13)) continue;
                    auto det3 = [&](int col) {
                        R M[3][3];
                        for (int i = 0; i < 3; ++i)
                            for (int j = 0; j < 3; ++j) M[i][j] = j == col ? A[i][4] : A[i][j];
                        return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                               M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                               M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
                    };
                    Pt<R> o{det3(0) / det, det3(1) / det};
                    try_push(o, det3(2) / det);
                    continue;
                }

                // eliminate to parameterize the solution line xi0 + t n
                std::vector<std::vector<R>> m(3, std::vector<R>(5));
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 5; ++j) m[i][j] = A[i][j];
                // Gauss-Jordan on 4 unknown columns with partial pivoting
                int piv_col[3] = {-1, -1, -1};
                bool used[4] = {false, false, false, false};
                int rank = 0;
                for (int step = 0; step < 3; ++step) {
                    int pr = -1, pc = -1;
                    R best(0);
                    for (int i = rank; i < 3; ++i)
                        for (int j = 0; j < 4; ++j)
                            if (!used[j] && abs_v(m[i][j]) > best) {
                                best = abs_v(m[i][j]); pr = i; pc = j;
                            }
                    if (pr < 0 || best <= R(1e-13) * max_v(sc, R(1))) break;
                    std::swap(m[pr], m[rank]);
                    R pv = m[rank][pc];
                    for (int j = 0; j < 5; ++j) m[rank][j] /= pv;
                    for (int i = 0; i < 3; ++i) {
                        if (i == rank) continue;
                        R f = m[i][pc];
                        if (f == R(0)) continue;
                        for (int j = 0; j < 5; ++j) m[i][j] -= f * m[rank][j];
                    }
                    used[pc] = true;
                    piv_col[rank] = pc;
                    ++rank;
                }
                if (rank < 3) continue;
                int free_col = 0;
                while (free_col < 4 && used[free_col]) ++free_col;
                if (free_col == 4) continue;
                R xi0[4] = {R(0), R(0), R(0), R(0)};
                R nv[4] = {R(0), R(0), R(0), R(0)};
                nv[free_col] = R(1);
                for (int i = 0; i < rank; ++i) {
                    xi0[piv_col[i]] = m[i][4];
                    nv[piv_col[i]] = -m[i][free_col];
                }
                // f(t) = x^2 + y^2 - r^2 - w on the line, a quadratic in t
                R a2 = nv[0] * nv[0] + nv[1] * nv[1] - nv[2] * nv[2];
                R a1 = R(2) * (xi0[0] * nv[0] + xi0[1] * nv[1] - xi0[2] * nv[2]) - nv[3];
                R a0 = xi0[0] * xi0[0] + xi0[1] * xi0[1] - xi0[2] * xi0[2] - xi0[3];
                for (const R& t : solve_quadratic(a2, a1, a0)) {
                    Pt<R> o{xi0[0] + t * nv[0], xi0[1] + t * nv[1]};
                    try_push(o, xi0[2] + t * nv[2]);
                }
            }
    return sols;
}

// convenience forms used by the construction language
template <class R>
inline std::vector<Circ<R>> tangent_circles_lll(const Ln<R>& l1, const Ln<R>& l2,
                                                const Ln<R>& l3) {
    return apollonius<R>({TangencyConstraint<R>::to_line(l1),
                          TangencyConstraint<R>::to_line(l2),
                          TangencyConstraint<R>::to_line(l3)});
}

template <class R>
inline Circ<R> inscribed_in_lines(const Ln<R>& l1, const Ln<R>& l2, const Ln<R>& l3,
                                  const Pt<R>& side) {
    auto sols = apollonius<R>({TangencyConstraint<R>::to_line_side_of(l1, side),
                               TangencyConstraint<R>::to_line_side_of(l2, side),
                               TangencyConstraint<R>::to_line_side_of(l3, side)});
    if (sols.empty()) throw GeomError(ErrKind::NoSolution, "inscribed_in_lines");
    return sols.front();
}

// circle tangent to c at t (t on c) passing through p
template <class R>
inline Circ<R> circle_tangent_at_through(const Circ<R>& c, const Pt<R>& t, const Pt<R>& p) {
    Ln<R> axis = line_through(c.center, t);
    Pt<R> o = intersect_lines(axis, perp_bisector(t, p));
    return {o, dist(o, t)};
}

// The segment-pair radical line: for oriented segments (a1, a2), (b1, b2)
// take the circle tangent to line a1a2 (touching inside the segment, on
// the b-side), to line b1a1 and to line a2b2; swap roles for the second
// circle; return the radical axis. Side and containment rules fixed by
// regression against the reference drawing.
template <class R>
inline Circ<R> segment_tangent_circle(const Pt<R>& a1, const Pt<R>& a2, const Pt<R>& b1,
                                      const Pt<R>& b2) {
    Ln<R> la = line_through(a1, a2);
    Ln<R> l2 = line_through(b1, a1);
    Ln<R> l3 = line_through(a2, b2);
    Pt<R> mb = midpoint(b1, b2);
    if (abs_v(la.eval(mb)) <= R(1e-10) * local_scale<R>({a1, a2, b1, b2}))
        throw GeomError(ErrKind::NoTangentCircle, "segment_tangent_circle: b-midpoint on base");
    auto sols = apollonius<R>({TangencyConstraint<R>::to_line_side_of(la, mb),
                               TangencyConstraint<R>::to_line(l2),
                               TangencyConstraint<R>::to_line(l3)});
    std::vector<Circ<R>> good;
    R seg2 = dot(a2 - a1, a2 - a1);
    for (const auto& s : sols) {
        Pt<R> t = foot(s.center, la);
        R u = dot(t - a1, a2 - a1) / seg2;
        if (u > R(-1e-9) && u < R(1) + R(1e-9)) good.push_back(s);
    }
    if (good.size() != 1)
        throw GeomError(ErrKind::NoTangentCircle, "segment_tangent_circle: selection not unique");
    return good.front();
}

template <class R>
inline Ln<R> segment_pair_radical_line(const Pt<R>& a1, const Pt<R>& a2, const Pt<R>& b1,
                                       const Pt<R>& b2) {
    Circ<R> wa = segment_tangent_circle(a1, a2, b1, b2);
    Circ<R> wb = segment_tangent_circle(b1, b2, a1, a2);
    return radical_axis(wa, wb);
}

}  // namespace geo
