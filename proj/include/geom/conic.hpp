#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "geom/euclid.hpp"
#include "geom/linalg.hpp"

namespace geo {

enum class ConicKind { Ellipse, Parabola, Hyperbola, RectangularHyperbola, Degenerate };

inline const char* conic_kind_name(ConicKind k) {
    switch (k) {
        case ConicKind::Ellipse: return "ellipse";
        case ConicKind::Parabola: return "parabola";
        case ConicKind::Hyperbola: return "hyperbola";
        case ConicKind::RectangularHyperbola: return "rectangular_hyperbola";
        case ConicKind::Degenerate: return "degenerate";
    }
    return "?";
}

// Symmetric homogeneous 3x3 form, Frobenius norm 1, largest-magnitude
// entry positive. Row/column order (x, y, w).
template <class R>
struct ConicT {
    std::array<std::array<R, 3>, 3> m{};
    ConicKind kind = ConicKind::Degenerate;

    ConicT() = default;
    explicit ConicT(std::array<std::array<R, 3>, 3> mm) {
        using std::sqrt;
        // symmetrize + normalize
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                R v = (mm[i][j] + mm[j][i]) / R(2);
                mm[i][j] = v; mm[j][i] = v;
            }
        R n(0);
        for (auto& row : mm)
            for (auto& v : row) n += v * v;
        n = sqrt(n);
        if (n == R(0)) throw GeomError(ErrKind::DegenerateConic, "zero conic");
        int bi = 0, bj = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (abs_v(mm[i][j]) > abs_v(mm[bi][bj])) { bi = i; bj = j; }
        R s = mm[bi][bj] >= R(0) ? n : -n;
        for (auto& row : mm)
            for (auto& v : row) v /= s;
        m = mm;
        kind = classify();
    }

    R eval(const Pt<R>& p) const {
        R h[3] = {p.x, p.y, R(1)};
        R acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += h[i] * m[i][j] * h[j];
        return acc;
    }

    R det3() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    ConicKind classify() const {
        R det = det3();
        R d2 = m[0][0] * m[1][1] - m[0][1] * m[0][1];
        if (abs_v(det) < R(1e-12)) return ConicKind::Degenerate;
        if (abs_v(m[0][0] + m[1][1]) < R(1e-10)) return ConicKind::RectangularHyperbola;
        if (d2 < R(-1e-12)) return ConicKind::Hyperbola;
        if (abs_v(d2) <= R(1e-12)) return ConicKind::Parabola;
        return ConicKind::Ellipse;
    }

    bool central() const {
        return kind == ConicKind::Ellipse || kind == ConicKind::Hyperbola ||
               kind == ConicKind::RectangularHyperbola;
    }
};

template <class R>
inline R res_on_conic(const ConicT<R>& c, const Pt<R>& p, const R& scale) {
    return abs_v(c.eval(p)) / (scale * scale);
}

template <class R>
inline R res_tangent_conic_line(const ConicT<R>& c, const Ln<R>& l, const R& scale) {
    Pt<R> p0 = l.some_point(), d = l.direction();
    R dh[3] = {d.x, d.y, R(0)};
    R ph[3] = {p0.x, p0.y, R(1)};
    R a(0), b(0), cc(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a += dh[i] * c.m[i][j] * dh[j];
            b += ph[i] * c.m[i][j] * dh[j];
            cc += ph[i] * c.m[i][j] * ph[j];
        }
    b *= R(2);
    return abs_v(b * b - R(4) * a * cc) / sq(scale);
}

namespace detail {

// congruence transform back from a centered/scaled frame:
// x' = (x - cx)/s  =>  M = T^T M' T
template <class R>
inline std::array<std::array<R, 3>, 3> uncenter(const std::array<std::array<R, 3>, 3>& mp,
                                                const Pt<R>& c, const R& s) {
    std::array<std::array<R, 3>, 3> t{{{R(1) / s, R(0), -c.x / s},
                                       {R(0), R(1) / s, -c.y / s},
                                       {R(0), R(0), R(1)}}};
    std::array<std::array<R, 3>, 3> tmp{}, out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            tmp[i][j] = R(0);
            for (int k = 0; k < 3; ++k) tmp[i][j] += mp[i][k] * t[k][j];
        }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            out[i][j] = R(0);
            for (int k = 0; k < 3; ++k) out[i][j] += t[k][i] * tmp[k][j];
        }
    return out;
}

template <class R>
inline void frame_of(const std::vector<Pt<R>>& pts, Pt<R>& c, R& s) {
    using std::sqrt;
    c = {R(0), R(0)};
    for (const auto& p : pts) c = c + p;
    c = c / R(pts.size());
    R acc(0);
    for (const auto& p : pts) acc += dot(p - c, p - c);
    s = sqrt(acc / R(pts.size()));
    if (s <= R(0)) s = R(1);
}

template <class R>
inline ConicT<R> conic_from_rows(const std::vector<Pt<R>>& pts, bool force_rectangular) {
    Pt<R> c; R s;
    frame_of(pts, c, s);
    std::vector<std::vector<R>> rows;
    for (const auto& p : pts) {
        R x = (p.x - c.x) / s, y = (p.y - c.y) / s;
        rows.push_back({x * x, x * y, y * y, x, y, R(1)});
    }
    if (force_rectangular) rows.push_back({R(1), R(0), R(1), R(0), R(0), R(0)});
    auto basis = nullspace(rows, 6, 1e-11);
    if (basis.empty()) throw GeomError(ErrKind::DegeneratePointSet, "conic fit: no kernel");
    auto build = [&](const std::vector<R>& v) {
        std::array<std::array<R, 3>, 3> mp{{{v[0], v[1] / R(2), v[3] / R(2)},
                                            {v[1] / R(2), v[2], v[4] / R(2)},
                                            {v[3] / R(2), v[4] / R(2), v[5]}}};
        return ConicT<R>(uncenter(mp, c, s));
    };
    if (basis.size() == 1) return build(basis[0]);
    if (!force_rectangular || basis.size() > 2)
        throw GeomError(force_rectangular ? ErrKind::DegenerateFamily : ErrKind::DegeneratePointSet,
                        "conic fit: rank deficient");
    // orthocentric quadruples leave a whole rectangular pencil; return a
    // deterministic nondegenerate member of it
    std::vector<R> sum(6);
    for (int i = 0; i < 6; ++i) sum[i] = basis[0][i] + basis[1][i];
    for (const auto& v : {basis[0], basis[1], sum}) {
        ConicT<R> cand = build(v);
        if (cand.kind != ConicKind::Degenerate) return cand;
    }
    throw GeomError(ErrKind::DegenerateFamily, "conic fit: only degenerate members");
}

}  // namespace detail

template <class R>
inline ConicT<R> conic_through5(const std::array<Pt<R>, 5>& pts) {
    return detail::conic_from_rows(std::vector<Pt<R>>(pts.begin(), pts.end()), false);
}

template <class R>
inline ConicT<R> rectangular_hyperbola_through4(const std::array<Pt<R>, 4>& pts) {
    return detail::conic_from_rows(std::vector<Pt<R>>(pts.begin(), pts.end()), true);
}

template <class R>
inline Pt<R> conic_center(const ConicT<R>& c) {
    R det = c.m[0][0] * c.m[1][1] - c.m[0][1] * c.m[0][1];
    if (abs_v(det) <= R(1e-13)) throw GeomError(ErrKind::ParabolicConic, "conic_center");
    R bx = -c.m[0][2], by = -c.m[1][2];
    return {(bx * c.m[1][1] - by * c.m[0][1]) / det, (by * c.m[0][0] - bx * c.m[0][1]) / det};
}

// squared semi axes along the principal directions, in increasing
// eigenvalue order of the quadratic part
template <class R>
struct ConicAxes {
    Pt<R> center;
    R semi_major, semi_minor;   // hyperbola: transverse, conjugate
    Pt<R> major_dir;
    bool is_ellipse;
};

template <class R>
inline ConicAxes<R> conic_axes(const ConicT<R>& c) {
    using std::sqrt;
    if (c.kind == ConicKind::Parabola) throw GeomError(ErrKind::ParabolicConic, "conic_axes");
    if (c.kind == ConicKind::Degenerate) throw GeomError(ErrKind::DegenerateConic, "conic_axes");
    ConicAxes<R> out;
    out.center = conic_center(c);
    R k = c.eval(out.center);
    auto e = sym_eigen2(c.m[0][0], c.m[0][1], c.m[1][1]);
    // lam * t^2 + k = 0 along each principal direction
    R q1 = e.lambda1 == R(0) ? R(-1) : -k / e.lambda1;
    R q2 = e.lambda2 == R(0) ? R(-1) : -k / e.lambda2;
    out.is_ellipse = (q1 > R(0) && q2 > R(0));
    if (out.is_ellipse) {
        if (q1 >= q2) {
            out.semi_major = sqrt(q1); out.semi_minor = sqrt(q2);
            out.major_dir = {e.v1x, e.v1y};
        } else {
            out.semi_major = sqrt(q2); out.semi_minor = sqrt(q1);
            out.major_dir = {e.v2x, e.v2y};
        }
    } else {
        // hyperbola: transverse along the positive q
        if (q1 > R(0)) {
            if (q2 > R(0)) throw GeomError(ErrKind::DegenerateConic, "conic_axes: empty conic");
            out.semi_major = sqrt(q1); out.semi_minor = sqrt(-q2);
            out.major_dir = {e.v1x, e.v1y};
        } else if (q2 > R(0)) {
            out.semi_major = sqrt(q2); out.semi_minor = sqrt(-q1);
            out.major_dir = {e.v2x, e.v2y};
        } else {
            throw GeomError(ErrKind::DegenerateConic, "conic_axes: empty conic");
        }
    }
    return out;
}

template <class R>
inline std::pair<Pt<R>, Pt<R>> conic_foci(const ConicT<R>& c) {
    using std::sqrt;
    auto ax = conic_axes(c);
    R c2 = ax.is_ellipse ? sq(ax.semi_major) - sq(ax.semi_minor)
                         : sq(ax.semi_major) + sq(ax.semi_minor);
    R cc = sqrt(max_v(c2, R(0)));
    Pt<R> f1 = ax.center + ax.major_dir * cc;
    Pt<R> f2 = ax.center - ax.major_dir * cc;
    if (f2.x < f1.x || (f2.x == f1.x && f2.y < f1.y)) std::swap(f1, f2);
    return {f1, f2};
}

template <class R>
inline bool conic_has_real_points(const ConicT<R>& c) {
    if (c.kind == ConicKind::Degenerate) return true;  // handled elsewhere
    if (c.kind != ConicKind::Ellipse) return true;
    return c.det3() * (c.m[0][0] + c.m[1][1]) < R(0);
}

// locus |PF1| op |PF2| = 2a through a given point
template <class R>
inline ConicT<R> conic_from_foci(const Pt<R>& f1, const Pt<R>& f2, const Pt<R>& through,
                                 bool sum_branch) {
    R sc = local_scale<R>({f1, f2, through});
    R d1 = dist(through, f1), d2 = dist(through, f2);
    R a = sum_branch ? (d1 + d2) / R(2) : abs_v(d1 - d2) / R(2);
    R cdist = dist(f1, f2) / R(2);
    Pt<R> o = midpoint(f1, f2);
    if (cdist <= R(1e-12) * sc) {
        // circle limit
        std::array<std::array<R, 3>, 3> m{{{R(1), R(0), -o.x},
                                           {R(0), R(1), -o.y},
                                           {-o.x, -o.y, dot(o, o) - a * a}}};
        return ConicT<R>(m);
    }
    R b2 = sum_branch ? a * a - cdist * cdist : cdist * cdist - a * a;
    if (b2 <= R(1e-14) * sc * sc || a <= R(1e-12) * sc)
        throw GeomError(ErrKind::InvalidBranch, "conic_from_foci");
    Pt<R> u = unit(f2 - f1);
    Pt<R> w = rot90(u);
    R lu[3] = {u.x, u.y, -dot(u, o)};
    R lw[3] = {w.x, w.y, -dot(w, o)};
    R s = sum_branch ? R(1) : R(-1);
    std::array<std::array<R, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = lu[i] * lu[j] / (a * a) + s * lw[i] * lw[j] / b2;
    m[2][2] -= R(1);
    return ConicT<R>(m);
}

template <class R>
inline ConicT<R> parabola_from_focus_directrix(const Pt<R>& f, const Ln<R>& d) {
    if (abs_v(d.eval(f)) <= R(1e-12) * local_scale<R>({f}))
        throw GeomError(ErrKind::FocusOnDirectrix, "parabola_from_focus_directrix");
    // |PF|^2 = dist(P, d)^2
    R ld[3] = {d.a, d.b, d.c};
    std::array<std::array<R, 3>, 3> m{{{R(1), R(0), -f.x},
                                       {R(0), R(1), -f.y},
                                       {-f.x, -f.y, dot(f, f)}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] -= ld[i] * ld[j];
    return ConicT<R>(m);
}

template <class R>
inline std::vector<Pt<R>> intersect_conic_line(const ConicT<R>& c, const Ln<R>& l) {
    Pt<R> p0 = l.some_point(), d = l.direction();
    R dh[3] = {d.x, d.y, R(0)};
    R ph[3] = {p0.x, p0.y, R(1)};
    R a(0), b(0), cc(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a += dh[i] * c.m[i][j] * dh[j];
            b += ph[i] * c.m[i][j] * dh[j];
            cc += ph[i] * c.m[i][j] * ph[j];
        }
    std::vector<Pt<R>> out;
    for (const R& t : solve_quadratic(a, R(2) * b, cc)) out.push_back(p0 + d * t);
    return out;
}

namespace detail {

// split a rank-2 symmetric matrix into its two lines (returns false for
// complex pairs)
template <class R>
inline bool split_degenerate(const std::array<std::array<R, 3>, 3>& m, Ln<R>& g_out,
                             Ln<R>& h_out) {
    using std::sqrt;
    // adjugate
    std::array<std::array<R, 3>, 3> adj{};
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    adj[0][0] = det2(1, 2, 1, 2); adj[0][1] = -det2(1, 2, 0, 2); adj[0][2] = det2(1, 2, 0, 1);
    adj[1][0] = -det2(0, 2, 1, 2); adj[1][1] = det2(0, 2, 0, 2); adj[1][2] = -det2(0, 2, 0, 1);
    adj[2][0] = det2(0, 1, 1, 2); adj[2][1] = -det2(0, 1, 0, 2); adj[2][2] = det2(0, 1, 0, 1);
    // adj should be -p p^T; transpose of cofactor matrix, but symmetric here
    int bi = 0;
    for (int i = 1; i < 3; ++i)
        if (abs_v(adj[i][i]) > abs_v(adj[bi][bi])) bi = i;
    R diag = adj[bi][bi];
    std::array<std::array<R, 3>, 3> b = m;
    if (abs_v(diag) > R(1e-22)) {
        if (diag > R(0)) return false;  // complex line pair
        R beta = sqrt(-diag);
        R p[3] = {adj[0][bi] / beta, adj[1][bi] / beta, adj[2][bi] / beta};
        // B = M + skew(p) has rank 1: rows ~ g, cols ~ h
        b[0][1] += p[2]; b[0][2] -= p[1];
        b[1][0] -= p[2]; b[1][2] += p[0];
        b[2][0] += p[1]; b[2][1] -= p[0];
    }
    int ri = 0, ci = 0;
    R rbest(-1), cbest(-1);
    for (int i = 0; i < 3; ++i) {
        R rs = abs_v(b[i][0]) + abs_v(b[i][1]) + abs_v(b[i][2]);
        R cs = abs_v(b[0][i]) + abs_v(b[1][i]) + abs_v(b[2][i]);
        if (rs > rbest) { rbest = rs; ri = i; }
        if (cs > cbest) { cbest = cs; ci = i; }
    }
    R ga = b[ri][0], gb = b[ri][1], gc = b[ri][2];
    R ha = b[0][ci], hb = b[1][ci], hc = b[2][ci];
    // one component may be the line at infinity; keep whichever is finite
    R gmag = abs_v(ga) + abs_v(gb), gall = gmag + abs_v(gc);
    R hmag = abs_v(ha) + abs_v(hb), hall = hmag + abs_v(hc);
    bool gfin = gall > R(0) && gmag > R(1e-12) * gall;
    bool hfin = hall > R(0) && hmag > R(1e-12) * hall;
    if (!gfin && !hfin) return false;
    if (gfin) g_out = Ln<R>(ga, gb, gc);
    if (hfin) h_out = Ln<R>(ha, hb, hc);
    if (!gfin) g_out = h_out;
    if (!hfin) h_out = g_out;
    return true;
}

}  // namespace detail

// conic/conic intersection via a degenerate member of the pencil
template <class R>
inline std::vector<Pt<R>> intersect_conics(const ConicT<R>& c1, const ConicT<R>& c2,
                                           const R& scale) {
    // det(C1 + t C2) as a cubic in t (coefficients by finite sampling)
    auto detp = [&](const R& t) {
        std::array<std::array<R, 3>, 3> s{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s[i][j] = c1.m[i][j] + t * c2.m[i][j];
        return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) -
               s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
               s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
    };
    R d0 = detp(R(0)), d1 = detp(R(1)), dm1 = detp(R(-1)), d2 = detp(R(2));
    R c3 = (d2 - R(3) * d1 + R(3) * d0 - dm1) / R(6);
    R cq = (d1 + dm1 - R(2) * d0) / R(2);
    R cl = d1 - d0 - c3 - cq;
    R c0 = d0;

    {
        // same conic (up to sign): empty answer is wrong, so flag it
        R dd(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) dd = max_v(dd, abs_v(c1.m[i][j] - c2.m[i][j]));
        if (dd < R(1e-12)) throw GeomError(ErrKind::IdenticalConics, "intersect_conics");
    }

    if constexpr (std::is_same_v<R, BaseReal>) {
        // near-multiple pencil roots are escalated to the high tier
        R mx = max_v(max_v(abs_v(c3), abs_v(cq)), max_v(abs_v(cl), abs_v(c0)));
        if (mx > R(0)) {
            R a = c3 / mx, b = cq / mx, cc = cl / mx, d = c0 / mx;
            R disc = R(18) * a * b * cc * d - R(4) * b * b * b * d + b * b * cc * cc -
                     R(4) * a * cc * cc * cc - R(27) * a * a * d * d;
            if (abs_v(disc) < R(1e-20) && abs_v(a) > R(1e-8))
                throw GeomError(ErrKind::UnstablePencil, "intersect_conics: near-multiple root");
        }
    }

    std::vector<Pt<R>> cands;
    auto roots = solve_cubic(c3, cq, cl, c0);
    // also try the t = infinity member (C2 itself degenerate)
    struct Member { bool inf; R t; };
    std::vector<Member> members;
    for (const R& t : roots) members.push_back({false, t});
    members.push_back({true, R(0)});
    for (const auto& mem : members) {
        std::array<std::array<R, 3>, 3> dm{};
        if (mem.inf) {
            if (abs_v(c2.det3()) > R(1e-10)) continue;
            dm = c2.m;
        } else {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) dm[i][j] = c1.m[i][j] + mem.t * c2.m[i][j];
        }
        Ln<R> g, h;
        if (!detail::split_degenerate(dm, g, h)) continue;
        const ConicT<R>& probe = mem.inf ? c1 : (abs_v(mem.t) > R(0.5) ? c2 : c1);
        for (const Ln<R>& l : {g, h})
            for (const auto& p : intersect_conic_line(probe, l)) cands.push_back(p);
    }
    std::vector<Pt<R>> out;
    R tol = R(1e-8) * scale * scale;
    for (const auto& p : cands) {
        if (abs_v(c1.eval(p)) > tol || abs_v(c2.eval(p)) > tol) continue;
        bool dup = false;
        for (auto& q : out)
            if (dist(p, q) < R(1e-8) * scale) dup = true;
        if (!dup) out.push_back(p);
    }
    // polish by Newton on the pair of forms and re-dedupe
    for (auto& p : out) {
        for (int it = 0; it < 2; ++it) {
            R f1 = c1.eval(p), f2 = c2.eval(p);
            R g1x = R(2) * (c1.m[0][0] * p.x + c1.m[0][1] * p.y + c1.m[0][2]);
            R g1y = R(2) * (c1.m[0][1] * p.x + c1.m[1][1] * p.y + c1.m[1][2]);
            R g2x = R(2) * (c2.m[0][0] * p.x + c2.m[0][1] * p.y + c2.m[0][2]);
            R g2y = R(2) * (c2.m[0][1] * p.x + c2.m[1][1] * p.y + c2.m[1][2]);
            R det = g1x * g2y - g1y * g2x;
            if (abs_v(det) < R(1e-300)) break;
            p.x -= (f1 * g2y - f2 * g1y) / det;
            p.y -= (f2 * g1x - f1 * g2x) / det;
        }
    }
    return out;
}

template <class R>
inline Ln<R> polar_line(const Pt<R>& p, const ConicT<R>& c) {
    R h[3] = {p.x, p.y, R(1)};
    R v[3] = {R(0), R(0), R(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v[i] += c.m[i][j] * h[j];
    if (abs_v(v[0]) + abs_v(v[1]) <= R(1e-13) * abs_v(v[2]))
        throw GeomError(ErrKind::AtInfinity, "polar_line", to_double(v[0]), to_double(v[1]));
    return Ln<R>(v[0], v[1], v[2]);
}

template <class R>
inline Pt<R> pole_point(const Ln<R>& l, const ConicT<R>& c) {
    if (abs_v(c.det3()) < R(1e-12)) throw GeomError(ErrKind::DegenerateConic, "pole_point");
    // solve M v = l by Cramer
    R lv[3] = {l.a, l.b, l.c};
    auto solve_col = [&](int col) {
        std::array<std::array<R, 3>, 3> mm = c.m;
        for (int i = 0; i < 3; ++i) mm[i][col] = lv[i];
        return mm[0][0] * (mm[1][1] * mm[2][2] - mm[1][2] * mm[2][1]) -
               mm[0][1] * (mm[1][0] * mm[2][2] - mm[1][2] * mm[2][0]) +
               mm[0][2] * (mm[1][0] * mm[2][1] - mm[1][1] * mm[2][0]);
    };
    R det = c.det3();
    R vx = solve_col(0) / det, vy = solve_col(1) / det, vw = solve_col(2) / det;
    if (abs_v(vw) <= R(1e-13) * (abs_v(vx) + abs_v(vy)))
        throw GeomError(ErrKind::AtInfinity, "pole_point", to_double(vx), to_double(vy));
    return {vx / vw, vy / vw};
}

// member of the dual pencil of conics inscribed in four lines
template <class R>
inline ConicT<R> inscribed_conic(const std::array<Ln<R>, 4>& sides, const R& t) {
    using std::cos;
    using std::sin;
    std::vector<std::vector<R>> rows;
    for (const auto& l : sides) {
        R x = l.a, y = l.b, z = l.c;
        rows.push_back({x * x, x * y, y * y, x * z, y * z, z * z});
    }
    auto basis = nullspace(rows, 6, 1e-11);
    if (basis.size() != 2)
        throw GeomError(ErrKind::DegenerateDualPencil, "inscribed_conic");
    R ct = cos(t), st = sin(t);
    std::array<R, 6> v;
    for (int i = 0; i < 6; ++i) v[i] = ct * basis[0][i] + st * basis[1][i];
    std::array<std::array<R, 3>, 3> dual{{{v[0], v[1] / R(2), v[3] / R(2)},
                                          {v[1] / R(2), v[2], v[4] / R(2)},
                                          {v[3] / R(2), v[4] / R(2), v[5]}}};
    // primal = adjugate of dual
    std::array<std::array<R, 3>, 3> adj{};
    auto det2 = [&](int r0, int r1, int c0, int c1) {
        return dual[r0][c0] * dual[r1][c1] - dual[r0][c1] * dual[r1][c0];
    };
    adj[0][0] = det2(1, 2, 1, 2); adj[0][1] = -det2(1, 2, 0, 2); adj[0][2] = det2(1, 2, 0, 1);
    adj[1][0] = -det2(0, 2, 1, 2); adj[1][1] = det2(0, 2, 0, 2); adj[1][2] = -det2(0, 2, 0, 1);
    adj[2][0] = det2(0, 1, 1, 2); adj[2][1] = -det2(0, 1, 0, 2); adj[2][2] = det2(0, 1, 0, 1);
    ConicT<R> out(adj);
    if (out.kind == ConicKind::Degenerate || !conic_has_real_points(out))
        throw GeomError(ErrKind::NonRealMember, "inscribed_conic");
    return out;
}

// ---- the shared-focus line ----
// For two conics with a common focus F their common points subtend an
// angle at F; the line is the internal bisector of that angle. With one
// common point (tangency) it degenerates to the line through F and the
// point. Reconstructed; see the catalog notes.
template <class R>
struct FocalPolar {
    R ecc, semi_latus, periapsis_angle;
};

template <class R>
inline FocalPolar<R> focal_polar_params(const ConicT<R>& c, const Pt<R>& f, const R& scale) {
    using std::atan2;
    auto ax = conic_axes(c);
    auto [f1, f2] = conic_foci(c);
    R d1 = dist(f1, f), d2 = dist(f2, f);
    if (min_v(d1, d2) > R(1e-8) * scale)
        throw GeomError(ErrKind::SharedFocusViolated, "focal_polar_params");
    Pt<R> fn = d1 <= d2 ? f1 : f2;
    Pt<R> fo = d1 <= d2 ? f2 : f1;
    FocalPolar<R> out;
    R cdist = dist(f1, f2) / R(2);
    if (cdist <= R(1e-12) * scale) {
        out.ecc = R(0);
        out.semi_latus = ax.semi_major;
        out.periapsis_angle = R(0);
        return out;
    }
    out.ecc = cdist / ax.semi_major;
    out.semi_latus = sq(ax.semi_minor) / ax.semi_major;
    Pt<R> d = ax.is_ellipse ? fn - fo : fo - fn;
    out.periapsis_angle = atan2(d.y, d.x);
    return out;
}

template <class R>
inline Ln<R> focal_line(const ConicT<R>& c1, const ConicT<R>& c2, const Pt<R>& f,
                        const R& scale) {
    using std::acos;
    using std::atan2;
    using std::cos;
    using std::hypot;
    using std::sin;
    auto p1 = focal_polar_params(c1, f, scale);
    auto p2 = focal_polar_params(c2, f, scale);
    // p2 (1 + e1 cos(th - phi1)) = p1 (1 + e2 cos(th - phi2))
    R A = p2.semi_latus * p1.ecc * cos(p1.periapsis_angle) -
          p1.semi_latus * p2.ecc * cos(p2.periapsis_angle);
    R B = p2.semi_latus * p1.ecc * sin(p1.periapsis_angle) -
          p1.semi_latus * p2.ecc * sin(p2.periapsis_angle);
    R C = p1.semi_latus - p2.semi_latus;
    R rad = hypot(A, B);
    if (rad < abs_v(C))
        throw GeomError(ErrKind::NoRealIntersection, "focal_line");
    R base = atan2(B, A);
    R arg = rad == R(0) ? R(0) : C / rad;
    if (arg > R(1)) arg = R(1);
    if (arg < R(-1)) arg = R(-1);
    R delta = acos(arg);
    std::vector<Pt<R>> pts;
    for (R th : {base + delta, base - delta}) {
        R den = R(1) + p1.ecc * cos(th - p1.periapsis_angle);
        if (abs_v(den) < R(1e-14)) continue;
        R r = p1.semi_latus / den;
        if (r <= R(0)) continue;
        Pt<R> pt = f + Pt<R>{cos(th), sin(th)} * r;
        bool dup = false;
        for (const auto& q : pts)
            if (dist(pt, q) < R(1e-9) * scale) dup = true;
        if (!dup) pts.push_back(pt);
    }
    if (pts.empty()) throw GeomError(ErrKind::NoRealIntersection, "focal_line");
    if (pts.size() == 1) return line_through(f, pts[0]);
    return angle_bisectors(f, pts[0], pts[1]).internal;
}

}  // namespace geo
