#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "geom/rng.hpp"
#include "geom/triangle.hpp"

namespace geo {

template <class R>
inline void check_complete_quadrilateral(const std::array<Ln<R>, 4>& ls) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (abs_v(cross(ls[i].direction(), ls[j].direction())) <= R(1e-10))
                throw GeomError(ErrKind::DegenerateQuadrilateral, "parallel pair");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                if (to_double(res_concurrent(std::vector<Ln<R>>{ls[i], ls[j], ls[k]},
                                             local_scale<R>({intersect_lines(ls[i], ls[j])}))) <
                    1e-10)
                    throw GeomError(ErrKind::DegenerateQuadrilateral, "three concurrent");
}

// circumcircle of the triangle formed by three lines
template <class R>
inline Circ<R> circle_of_lines(const Ln<R>& l1, const Ln<R>& l2, const Ln<R>& l3) {
    return circle_through(intersect_lines(l1, l2), intersect_lines(l2, l3),
                          intersect_lines(l3, l1));
}

template <class R>
inline Pt<R> miquel_point(const std::array<Ln<R>, 4>& ls) {
    check_complete_quadrilateral(ls);
    // second meet of the circles omitting l3 and l4; they share l1 ^ l2
    Circ<R> c1 = circle_of_lines(ls[0], ls[1], ls[2]);
    Circ<R> c2 = circle_of_lines(ls[0], ls[1], ls[3]);
    Pt<R> shared = intersect_lines(ls[0], ls[1]);
    return pick_farthest(intersect_circles(c1, c2), shared);
}

// the midpoint analog: Miquel point of lines ac, ad, bc, bd, with the
// documented coincidence limits
template <class R>
inline Pt<R> miquel_mid(const Pt<R>& a, const Pt<R>& b, const Pt<R>& c, const Pt<R>& d) {
    R sc = local_scale<R>({a, b, c, d});
    R eps = R(1e-9) * sc;
    bool ab = dist(a, b) <= eps, cd = dist(c, d) <= eps;
    if (ab && cd) return midpoint(a, c);
    auto tangent_circle = [&](const Pt<R>& at, const Ln<R>& tang, const Pt<R>& through) {
        Pt<R> o = intersect_lines(perpendicular(at, tang), perp_bisector(at, through));
        return Circ<R>{o, dist(o, at)};
    };
    if (ab) {
        // circles through (a, c) tangent to ad and (a, d) tangent to ac
        Circ<R> c1 = tangent_circle(a, line_through(a, d), c);
        Circ<R> c2 = tangent_circle(a, line_through(a, c), d);
        return pick_farthest(intersect_circles(c1, c2), a);
    }
    if (cd) {
        Circ<R> c1 = tangent_circle(c, line_through(c, b), a);
        Circ<R> c2 = tangent_circle(c, line_through(c, a), b);
        return pick_farthest(intersect_circles(c1, c2), c);
    }
    return miquel_point<R>({line_through(a, c), line_through(a, d), line_through(b, c),
                            line_through(b, d)});
}

template <class R>
inline Ln<R> gauss_line(const std::array<Ln<R>, 4>& ls) {
    check_complete_quadrilateral(ls);
    Pt<R> p12 = intersect_lines(ls[0], ls[1]), p34 = intersect_lines(ls[2], ls[3]);
    Pt<R> p13 = intersect_lines(ls[0], ls[2]), p24 = intersect_lines(ls[1], ls[3]);
    Pt<R> p14 = intersect_lines(ls[0], ls[3]), p23 = intersect_lines(ls[1], ls[2]);
    Pt<R> m1 = midpoint(p12, p34), m2 = midpoint(p13, p24), m3 = midpoint(p14, p23);
    // fit through the farthest pair; the third midpoint is the self-check
    R d12 = dist(m1, m2), d13 = dist(m1, m3), d23 = dist(m2, m3);
    Ln<R> l = (d12 >= d13 && d12 >= d23) ? line_through(m1, m2)
              : (d13 >= d23)             ? line_through(m1, m3)
                                         : line_through(m2, m3);
    R sc = local_scale<R>({m1, m2, m3});
    R worst = max_v(abs_v(l.eval(m1)), max_v(abs_v(l.eval(m2)), abs_v(l.eval(m3))));
    if (worst > R(1e-9) * sc)
        throw GeomError(ErrKind::DegenerateQuadrilateral, "gauss_line: midpoints not collinear");
    return l;
}

template <class R>
inline Pt<R> kantor_hervey(const std::array<Ln<R>, 4>& ls) {
    check_complete_quadrilateral(ls);
    std::array<Pt<R>, 4> centers;
    for (int i = 0; i < 4; ++i) {
        std::array<const Ln<R>*, 3> t{};
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) t[k++] = &ls[j];
        centers[i] = circle_of_lines(*t[0], *t[1], *t[2]).center;
    }
    Circ<R> c = circle_through(centers[0], centers[1], centers[2]);
    R sc = local_scale<R>({centers[0], centers[1], centers[2], centers[3]});
    if (abs_v(dist(centers[3], c.center) - c.radius) > R(1e-8) * sc)
        throw GeomError(ErrKind::CircumcentersNotConcyclic, "kantor_hervey");
    return c.center;
}

template <class R>
inline Pt<R> kh_mid(const Pt<R>& p, const Pt<R>& q, const Pt<R>& a, const Pt<R>& cpt) {
    return kantor_hervey<R>({line_through(p, a), line_through(p, cpt), line_through(q, a),
                             line_through(q, cpt)});
}

// incenters of the four single-diagonal triangles of a cyclic quadrilateral,
// indexed by the middle vertex: (DAB, ABC, BCD, CDA). Rectangle property of
// the classical theorem is verified as a self-check.
template <class R>
inline std::array<Pt<R>, 4> japanese_incenters(const Pt<R>& a, const Pt<R>& b, const Pt<R>& c,
                                               const Pt<R>& d) {
    R sc = local_scale<R>({a, b, c, d});
    if (to_double(res_concyclic(std::vector<Pt<R>>{a, b, c, d}, sc)) > 1e-8)
        throw GeomError(ErrKind::NotConcyclic, "japanese_incenters");
    if (cross(b - a, c - b) * cross(c - b, d - c) < R(0) ||
        cross(c - b, d - c) * cross(d - c, a - d) < R(0))
        throw GeomError(ErrKind::NonConvexOrder, "japanese_incenters");
    std::array<Pt<R>, 4> out{incenter<R>({d, a, b}), incenter<R>({a, b, c}),
                             incenter<R>({b, c, d}), incenter<R>({c, d, a})};
    R rect = max_v(dist(midpoint(out[0], out[2]), midpoint(out[1], out[3])),
                   abs_v(dist(out[0], out[2]) - dist(out[1], out[3])));
    if (rect > R(1e-9) * sc)
        throw GeomError(ErrKind::NotConcyclic, "japanese_incenters: rectangle check failed");
    return out;
}

// ---------------- samplers ----------------
// All samplers compute in plain double and lift, so a scene re-evaluated
// at the high tier starts from bit-identical free objects.

struct TriangleSample {
    double ax, ay, bx, by, cx, cy;
};

inline TriangleSample sample_triangle(Rng& rng, double min_angle_deg) {
    const double pi = 3.14159265358979323846;
    double amin = min_angle_deg * pi / 180.0;
    for (int tries = 0; tries < 1000; ++tries) {
        double u = rng.uniform(0, pi), v = rng.uniform(0, pi), w = rng.uniform(0, pi);
        double s = u + v + w;
        double a1 = u / s * pi, a2 = v / s * pi, a3 = w / s * pi;
        if (a1 < amin || a2 < amin || a3 < amin) continue;
        double r = rng.uniform(2.0, 8.0);
        double cx = rng.uniform(-10.0, 10.0), cy = rng.uniform(-10.0, 10.0);
        double rot = rng.uniform(0, 2 * pi);
        // central angles from vertex angles
        double t1 = rot, t2 = rot + 2 * a3, t3 = rot + 2 * a3 + 2 * a1;
        TriangleSample t{cx + r * std::cos(t1), cy + r * std::sin(t1),
                         cx + r * std::cos(t2), cy + r * std::sin(t2),
                         cx + r * std::cos(t3), cy + r * std::sin(t3)};
        double sides[3] = {std::hypot(t.bx - t.cx, t.by - t.cy),
                           std::hypot(t.ax - t.cx, t.ay - t.cy),
                           std::hypot(t.ax - t.bx, t.ay - t.by)};
        double mx = std::max({sides[0], sides[1], sides[2]});
        double mn = std::min({sides[0], sides[1], sides[2]});
        if (mx / mn > 20.0) continue;
        return t;
    }
    throw GeomError(ErrKind::SamplerExhausted, "sample_triangle");
}

struct QuadSample {
    double x[4], y[4];
    double ox, oy, r;  // the defining circle where applicable
};

inline QuadSample sample_cyclic_quad(Rng& rng, double min_gap_deg = 18.0,
                                     double max_gap_deg = 150.0) {
    const double pi = 3.14159265358979323846;
    for (int tries = 0; tries < 1000; ++tries) {
        double th[4];
        for (auto& t : th) t = rng.uniform(0, 2 * pi);
        std::sort(th, th + 4);
        double gmin = 1e9, gmax = -1;
        for (int i = 0; i < 4; ++i) {
            double g = (i == 3 ? th[0] + 2 * pi : th[i + 1]) - th[i];
            gmin = std::min(gmin, g);
            gmax = std::max(gmax, g);
        }
        if (gmin < min_gap_deg * pi / 180 || gmax > max_gap_deg * pi / 180) continue;
        QuadSample q{};
        q.ox = rng.uniform(-6.0, 6.0);
        q.oy = rng.uniform(-6.0, 6.0);
        q.r = rng.uniform(2.0, 6.0);
        for (int i = 0; i < 4; ++i) {
            q.x[i] = q.ox + q.r * std::cos(th[i]);
            q.y[i] = q.oy + q.r * std::sin(th[i]);
        }
        return q;
    }
    throw GeomError(ErrKind::SamplerExhausted, "sample_cyclic_quad");
}

inline QuadSample sample_tangential_quad(Rng& rng) {
    const double pi = 3.14159265358979323846;
    for (int tries = 0; tries < 1000; ++tries) {
        double th[4];
        for (auto& t : th) t = rng.uniform(0, 2 * pi);
        std::sort(th, th + 4);
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            double g = (i == 3 ? th[0] + 2 * pi : th[i + 1]) - th[i];
            if (g < 25 * pi / 180 || g > 150 * pi / 180) ok = false;
        }
        if (!ok) continue;
        QuadSample q{};
        q.ox = rng.uniform(-4.0, 4.0);
        q.oy = rng.uniform(-4.0, 4.0);
        q.r = rng.uniform(1.5, 4.0);
        // vertex i = intersection of tangents at th[i], th[i+1]
        for (int i = 0; i < 4; ++i) {
            double t1 = th[i], t2 = th[(i + 1) % 4];
            double dx1 = std::cos(t1), dy1 = std::sin(t1);
            double dx2 = std::cos(t2), dy2 = std::sin(t2);
            // tangent lines: dx * x + dy * y = r (circle-centered frame)
            double det = dx1 * dy2 - dx2 * dy1;
            if (std::abs(det) < 1e-9) { ok = false; break; }
            double vx = (q.r * dy2 - q.r * dy1) / det;
            double vy = (q.r * dx1 - q.r * dx2) / det;
            q.x[(i + 1) % 4] = q.ox + vx;
            q.y[(i + 1) % 4] = q.oy + vy;
        }
        if (!ok) continue;
        return q;
    }
    throw GeomError(ErrKind::SamplerExhausted, "sample_tangential_quad");
}

// cyclic family with one vertex angle solved for the Pitot condition
inline QuadSample sample_bicentric_quad(Rng& rng) {
    const double pi = 3.14159265358979323846;
    for (int tries = 0; tries < 1000; ++tries) {
        double t2 = rng.uniform(0.35 * pi, 0.8 * pi);
        double t3 = rng.uniform(t2 + 0.25 * pi, 1.35 * pi);
        double ox = rng.uniform(-6.0, 6.0), oy = rng.uniform(-6.0, 6.0);
        double r = rng.uniform(2.0, 6.0);
        double rot = rng.uniform(0, 2 * pi);
        auto vx = [&](double t) { return std::cos(t); };
        auto vy = [&](double t) { return std::sin(t); };
        auto pitot = [&](double t4) {
            double x[4] = {vx(0), vx(t2), vx(t3), vx(t4)};
            double y[4] = {vy(0), vy(t2), vy(t3), vy(t4)};
            auto d = [&](int i, int j) { return std::hypot(x[i] - x[j], y[i] - y[j]); };
            return d(0, 1) + d(2, 3) - d(1, 2) - d(3, 0);
        };
        double lo = t3 + 0.25 * pi, hi = 2 * pi - 0.25 * pi;
        if (lo >= hi) continue;
        double flo = pitot(lo), fhi = pitot(hi);
        if (flo * fhi > 0) continue;
        for (int it = 0; it < 200; ++it) {
            double mid = (lo + hi) / 2;
            if (pitot(mid) * flo > 0) { lo = mid; flo = pitot(lo); }
            else hi = mid;
        }
        double t4 = (lo + hi) / 2;
        double th[4] = {0, t2, t3, t4};
        bool ok = true;
        for (int i = 0; i < 4; ++i) {
            double g = (i == 3 ? th[0] + 2 * pi : th[i + 1]) - th[i];
            if (g < 18 * pi / 180) ok = false;
        }
        if (!ok) continue;
        QuadSample q{};
        q.ox = ox; q.oy = oy; q.r = r;
        for (int i = 0; i < 4; ++i) {
            q.x[i] = ox + r * std::cos(th[i] + rot);
            q.y[i] = oy + r * std::sin(th[i] + rot);
        }
        return q;
    }
    throw GeomError(ErrKind::SamplerExhausted, "sample_bicentric_quad");
}

}  // namespace geo
