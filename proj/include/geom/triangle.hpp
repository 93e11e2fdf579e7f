#pragma once

#include <array>
#include <cmath>

#include "geom/tangency.hpp"

namespace geo {

template <class R>
inline void check_triangle(const Tri<R>& t) {
    R s = local_scale<R>({t.a, t.b, t.c});
    if (abs_v(cross(t.b - t.a, t.c - t.a)) <= R(1e-10) * s * s)
        throw GeomError(ErrKind::DegenerateTriangle, "collinear vertices");
}

template <class R>
inline std::array<R, 3> side_lengths(const Tri<R>& t) {
    return {dist(t.b, t.c), dist(t.c, t.a), dist(t.a, t.b)};
}

template <class R>
inline Pt<R> centroid(const Tri<R>& t) { return (t.a + t.b + t.c) / R(3); }

template <class R>
inline Circ<R> circumcircle(const Tri<R>& t) {
    check_triangle(t);
    return circle_through(t.a, t.b, t.c);
}

template <class R>
inline Pt<R> circumcenter(const Tri<R>& t) { return circumcircle(t).center; }

template <class R>
inline Pt<R> orthocenter(const Tri<R>& t) {
    check_triangle(t);
    return intersect_lines(perpendicular(t.a, line_through(t.b, t.c)),
                           perpendicular(t.b, line_through(t.a, t.c)));
}

template <class R>
inline Pt<R> incenter(const Tri<R>& t) {
    check_triangle(t);
    auto [a, b, c] = side_lengths(t);
    return (t.a * a + t.b * b + t.c * c) / (a + b + c);
}

template <class R>
inline Circ<R> incircle(const Tri<R>& t) {
    Pt<R> i = incenter(t);
    return {i, abs_v(line_through(t.b, t.c).eval(i))};
}

template <class R>
inline Pt<R> excenter(const Tri<R>& t, int vertex) {
    check_triangle(t);
    auto [a, b, c] = side_lengths(t);
    R wa = vertex == 0 ? -a : a;
    R wb = vertex == 1 ? -b : b;
    R wc = vertex == 2 ? -c : c;
    return (t.a * wa + t.b * wb + t.c * wc) / (wa + wb + wc);
}

template <class R>
inline Circ<R> excircle(const Tri<R>& t, int vertex) {
    Pt<R> e = excenter(t, vertex);
    return {e, abs_v(line_through(t.b, t.c).eval(e))};
}

template <class R>
inline Pt<R> nine_point_center(const Tri<R>& t) {
    return midpoint(circumcenter(t), orthocenter(t));
}

template <class R>
inline Circ<R> nine_point_circle(const Tri<R>& t) {
    return {nine_point_center(t), circumcircle(t).radius / R(2)};
}

template <class R>
inline Tri<R> medial(const Tri<R>& t) {
    return {midpoint(t.b, t.c), midpoint(t.c, t.a), midpoint(t.a, t.b)};
}

template <class R>
inline Tri<R> orthic(const Tri<R>& t) {
    check_triangle(t);
    return {foot(t.a, line_through(t.b, t.c)), foot(t.b, line_through(t.c, t.a)),
            foot(t.c, line_through(t.a, t.b))};
}

// barycentric helpers (signed areas)
template <class R>
inline std::array<R, 3> to_barycentric(const Tri<R>& t, const Pt<R>& p) {
    R area = cross(t.b - t.a, t.c - t.a);
    return {cross(t.b - p, t.c - p) / area, cross(t.c - p, t.a - p) / area,
            cross(t.a - p, t.b - p) / area};
}

template <class R>
inline Pt<R> from_barycentric(const Tri<R>& t, const R& u, const R& v, const R& w) {
    R s = u + v + w;
    if (abs_v(s) <= R(1e-13) * (abs_v(u) + abs_v(v) + abs_v(w))) {
        Pt<R> dir = t.a * u + t.b * v + t.c * w;
        throw GeomError(ErrKind::ConjugateAtInfinity, "from_barycentric",
                        to_double(dir.x), to_double(dir.y));
    }
    return (t.a * u + t.b * v + t.c * w) / s;
}

template <class R>
inline Pt<R> symmedian_point(const Tri<R>& t) {
    check_triangle(t);
    auto [a, b, c] = side_lengths(t);
    return from_barycentric(t, a * a, b * b, c * c);
}

template <class R>
inline Pt<R> spieker_center(const Tri<R>& t) { return incenter(medial(t)); }

template <class R>
inline Pt<R> isogonal_conjugate(const Tri<R>& t, const Pt<R>& p) {
    check_triangle(t);
    auto [u, v, w] = to_barycentric(t, p);
    R tol = R(1e-13);
    if (abs_v(u) < tol || abs_v(v) < tol || abs_v(w) < tol)
        throw GeomError(ErrKind::PointOnSideLine, "isogonal_conjugate");
    auto [a, b, c] = side_lengths(t);
    return from_barycentric(t, a * a / u, b * b / v, c * c / w);
}

template <class R>
inline Pt<R> isotomic_conjugate(const Tri<R>& t, const Pt<R>& p) {
    check_triangle(t);
    auto [u, v, w] = to_barycentric(t, p);
    R tol = R(1e-13);
    if (abs_v(u) < tol || abs_v(v) < tol || abs_v(w) < tol)
        throw GeomError(ErrKind::PointOnSideLine, "isotomic_conjugate");
    return from_barycentric(t, R(1) / u, R(1) / v, R(1) / w);
}

template <class R>
inline Tri<R> cevian_triangle(const Tri<R>& t, const Pt<R>& p) {
    check_triangle(t);
    auto [u, v, w] = to_barycentric(t, p);
    if (abs_v(u) < R(1e-12) || abs_v(v) < R(1e-12) || abs_v(w) < R(1e-12))
        throw GeomError(ErrKind::PointOnSideLine, "cevian_triangle");
    return {intersect_lines(line_through(t.a, p), line_through(t.b, t.c)),
            intersect_lines(line_through(t.b, p), line_through(t.c, t.a)),
            intersect_lines(line_through(t.c, p), line_through(t.a, t.b))};
}

template <class R>
inline Tri<R> pedal_triangle(const Tri<R>& t, const Pt<R>& p) {
    check_triangle(t);
    return {foot(p, line_through(t.b, t.c)), foot(p, line_through(t.c, t.a)),
            foot(p, line_through(t.a, t.b))};
}

template <class R>
inline Tri<R> circumcevian_triangle(const Tri<R>& t, const Pt<R>& p) {
    Circ<R> c = circumcircle(t);
    R sc = max_v(c.radius, R(1));
    if (abs_v(dist(p, c.center) - c.radius) <= R(1e-9) * sc)
        throw GeomError(ErrKind::PointOnCircumcircle, "circumcevian_triangle");
    auto second = [&](const Pt<R>& v) {
        return pick_farthest(intersect_line_circle(line_through(v, p), c), v);
    };
    return {second(t.a), second(t.b), second(t.c)};
}

// first / second isogonic point by apex construction
template <class R>
inline Pt<R> fermat_point(const Tri<R>& t, bool first) {
    using std::sqrt;
    check_triangle(t);
    auto apex = [&](const Pt<R>& p, const Pt<R>& q, const Pt<R>& opp) {
        Pt<R> m = midpoint(p, q);
        Pt<R> n = unit(rot90(q - p));
        R h = sqrt(R(3)) / R(2) * dist(p, q);
        R s = dot(n, opp - m) > R(0) ? R(-1) : R(1);
        if (!first) s = -s;
        return m + n * (s * h);
    };
    Pt<R> aa = apex(t.b, t.c, t.a);
    Pt<R> bb = apex(t.c, t.a, t.b);
    return intersect_lines(line_through(t.a, aa), line_through(t.b, bb));
}

template <class R>
inline Pt<R> feuerbach_point(const Tri<R>& t) {
    Circ<R> inc = incircle(t);
    Pt<R> n = nine_point_center(t);
    R d = dist(inc.center, n);
    R sc = local_scale<R>({t.a, t.b, t.c});
    if (d <= R(1e-10) * sc)
        throw GeomError(ErrKind::EquilateralDegenerate, "feuerbach_point");
    return inc.center + (inc.center - n) * (inc.radius / d);
}

template <class R>
inline Ln<R> simson_line(const Tri<R>& t, const Pt<R>& p) {
    Circ<R> c = circumcircle(t);
    if (abs_v(dist(p, c.center) - c.radius) > R(1e-8) * max_v(c.radius, R(1)))
        throw GeomError(ErrKind::PointNotOnCircumcircle, "simson_line");
    Tri<R> f = pedal_triangle(t, p);
    // fit through the farthest pair; the third foot is collinear
    R dab = dist(f.a, f.b), dbc = dist(f.b, f.c), dca = dist(f.c, f.a);
    if (dab >= dbc && dab >= dca) return line_through(f.a, f.b);
    if (dbc >= dca) return line_through(f.b, f.c);
    return line_through(f.c, f.a);
}

// ---------------- Morley triangles ----------------
// Trisector rays: from vertex V, start at ray VX and rotate toward VY by
// (theta + 2 pi k sign(theta)) / 3 where theta is the signed angle from
// VX to VY. Index pairs below were frozen against the reference drawings;
// each selection yields an equilateral triangle.
enum class MorleyKind { Internal, ExternalA, ExternalB, ExternalC, ExternalAll };

template <class R>
inline Pt<R> morley_trisector_dir(const Pt<R>& v, const Pt<R>& x, const Pt<R>& y, int k) {
    using std::atan2;
    Pt<R> dx = x - v;
    R a0 = atan2(dx.y, dx.x);
    R full = atan2((y - v).y, (y - v).x) - a0;
    R pi = pi_v<R>();
    while (full <= -pi) full += R(2) * pi;
    while (full > pi) full -= R(2) * pi;
    R s = full >= R(0) ? R(1) : R(-1);
    R ang = (full + R(2) * pi * R(k) * s) / R(3);
    return rotated(unit(dx), ang);
}

template <class R>
inline Tri<R> morley_triangle(const Tri<R>& t, MorleyKind kind) {
    check_triangle(t);
    const Pt<R>&A = t.a, &B = t.b, &C = t.c;
    auto vert = [&](const Pt<R>& v1, const Pt<R>& x1, const Pt<R>& y1, int m,
                    const Pt<R>& v2, const Pt<R>& x2, const Pt<R>& y2, int n) {
        return intersect_lines(line_through(v1, v1 + morley_trisector_dir(v1, x1, y1, m)),
                               line_through(v2, v2 + morley_trisector_dir(v2, x2, y2, n)));
    };
    int mbc[2], mca[2], mab[2];
    switch (kind) {
        case MorleyKind::Internal:    mbc[0]=0; mbc[1]=0; mca[0]=0; mca[1]=0; mab[0]=0; mab[1]=0; break;
        case MorleyKind::ExternalA:   mbc[0]=1; mbc[1]=1; mca[0]=1; mca[1]=0; mab[0]=0; mab[1]=1; break;
        case MorleyKind::ExternalB:   mbc[0]=0; mbc[1]=1; mca[0]=1; mca[1]=1; mab[0]=1; mab[1]=0; break;
        case MorleyKind::ExternalC:   mbc[0]=1; mbc[1]=0; mca[0]=0; mca[1]=1; mab[0]=1; mab[1]=1; break;
        case MorleyKind::ExternalAll: mbc[0]=1; mbc[1]=1; mca[0]=1; mca[1]=1; mab[0]=1; mab[1]=1; break;
    }
    // vertices returned in side order: near BC, near CA, near AB
    return {vert(B, C, A, mbc[0], C, B, A, mbc[1]),
            vert(C, A, B, mca[0], A, C, B, mca[1]),
            vert(A, B, C, mab[0], B, A, C, mab[1])};
}

// ---------------- mixtilinear circles ----------------
template <class R>
struct Mixtilinear {
    Circ<R> circle;
    Pt<R> circum_touch;
    Pt<R> side_touch_1;  // on the vertex's first side (A: AB, B: BC, C: CA)
    Pt<R> side_touch_2;  // on the vertex's second side (A: AC, B: BA, C: CB)
};

template <class R>
inline Mixtilinear<R> mixtilinear_circle(const Tri<R>& t, int vertex, bool excircle_kind) {
    check_triangle(t);
    Pt<R> v = vertex == 0 ? t.a : vertex == 1 ? t.b : t.c;
    Pt<R> p = vertex == 0 ? t.b : vertex == 1 ? t.c : t.a;
    Pt<R> q = vertex == 0 ? t.c : vertex == 1 ? t.a : t.b;
    Circ<R> circ = circumcircle(t);
    Pt<R> i = incenter(t);
    Ln<R> l1 = line_through(v, p), l2 = line_through(v, q);
    auto sols = apollonius<R>({TangencyConstraint<R>::to_line_side_of(l1, i),
                               TangencyConstraint<R>::to_line_side_of(l2, i),
                               TangencyConstraint<R>::to_circle(circ, excircle_kind ? +1 : -1)});
    if (sols.empty()) throw GeomError(ErrKind::NoSolution, "mixtilinear_circle");
    // the vertex itself is a zero-radius member of the family; the solver
    // already drops r ~ 0, leaving the proper circle (largest radius)
    Circ<R> best = sols.front();
    for (const auto& s : sols)
        if (s.radius > best.radius) best = s;
    Mixtilinear<R> out;
    out.circle = best;
    out.circum_touch = tangency_point(circ, best);
    out.side_touch_1 = foot(best.center, l1);
    out.side_touch_2 = foot(best.center, l2);
    return out;
}

// ---------------- Neuberg cubic ----------------
// Membership via the collinearity of P, its isogonal conjugate and the
// Euler direction at infinity; signed so that a 1-D root scan works.
template <class R>
inline R neuberg_residual_signed(const Tri<R>& t, const Pt<R>& p, const R& scale) {
    Pt<R> conj = isogonal_conjugate(t, p);
    Pt<R> o = circumcenter(t), h = orthocenter(t);
    R d = dist(o, h);
    if (d <= R(1e-12) * scale)
        throw GeomError(ErrKind::EquilateralDegenerate, "neuberg_residual: no Euler direction");
    Pt<R> dir = (h - o) / d;
    return cross(conj - p, dir) / scale;
}

template <class R>
inline R neuberg_residual(const Tri<R>& t, const Pt<R>& p) {
    R scale = max_v(dist(t.a, t.b), max_v(dist(t.b, t.c), dist(t.c, t.a)));
    return abs_v(neuberg_residual_signed(t, p, scale));
}

template <class R>
inline Pt<R> neuberg_sample(const Tri<R>& t, double angle01) {
    using std::cos;
    using std::sin;
    check_triangle(t);
    R scale = max_v(dist(t.a, t.b), max_v(dist(t.b, t.c), dist(t.c, t.a)));
    Pt<R> g = centroid(t);
    R pi = pi_v<R>();
    for (int attempt = 0; attempt < 24; ++attempt) {
        R ang = R(angle01) * pi + R(attempt) * pi / R(24.7);
        Pt<R> dir{cos(ang), sin(ang)};
        auto f = [&](const R& s) -> std::optional<R> {
            try {
                return neuberg_residual_signed(t, g + dir * s, scale);
            } catch (const GeomError&) {
                return std::nullopt;
            }
        };
        const int n = 240;
        std::optional<R> prev;
        R prev_s(0);
        for (int k = 0; k <= n; ++k) {
            R s = (R(k) / R(n) * R(6) - R(3)) * scale;
            auto val = f(s);
            if (val && prev && (*val < R(0)) != (*prev < R(0)) && abs_v(*val) < R(1e3) &&
                abs_v(*prev) < R(1e3)) {
                R lo = prev_s, hi = s;
                R flo = *prev;
                for (int it = 0; it < 200; ++it) {
                    R mid = (lo + hi) / R(2);
                    auto fm = f(mid);
                    if (!fm) break;
                    if ((*fm < R(0)) == (flo < R(0))) { lo = mid; flo = *fm; }
                    else hi = mid;
                    if (hi - lo <= abs_v(mid) * R(1e-30) + R(1e-30)) break;
                }
                Pt<R> cand = g + dir * ((lo + hi) / R(2));
                // skip samples whose conjugate runs away (near circumcircle)
                try {
                    if (neuberg_residual(t, cand) <= R(1e-10)) {
                        Pt<R> conj = isogonal_conjugate(t, cand);
                        Circ<R> cc = circumcircle(t);
                        if (dist(conj, g) < R(50) * scale &&
                            abs_v(dist(cand, cc.center) - cc.radius) > R(1e-3) * scale &&
                            abs_v(dist(conj, cc.center) - cc.radius) > R(1e-3) * scale)
                            return cand;
                    }
                } catch (const GeomError&) {
                }
            }
            if (val) { prev = val; prev_s = s; }
            else prev.reset();
        }
    }
    throw GeomError(ErrKind::RootNotFound, "neuberg_sample");
}

}  // namespace geo
