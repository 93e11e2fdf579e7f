#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "geom/linalg.hpp"
#include "geom/primitives.hpp"

namespace geo {

template <class R>
inline Ln<R> line_through(const Pt<R>& p, const Pt<R>& q) {
    if (dist(p, q) <= R(1e-12) * local_scale<R>({p, q}))
        throw GeomError(ErrKind::CoincidentPoints, "line_through");
    Pt<R> d = q - p;
    return Ln<R>(-d.y, d.x, d.y * p.x - d.x * p.y);
}

template <class R>
inline Pt<R> intersect_lines(const Ln<R>& l1, const Ln<R>& l2) {
    R det = l1.a * l2.b - l2.a * l1.b;
    if (abs_v(det) <= R(1e-12)) throw GeomError(ErrKind::ParallelLines, "intersect_lines");
    return {(-l1.c * l2.b + l2.c * l1.b) / det, (-l1.a * l2.c + l2.a * l1.c) / det};
}

template <class R>
inline Pt<R> midpoint(const Pt<R>& p, const Pt<R>& q) { return (p + q) / R(2); }

template <class R>
inline Pt<R> foot(const Pt<R>& p, const Ln<R>& l) { return p - l.normal() * l.eval(p); }

template <class R>
inline Pt<R> reflect_point(const Pt<R>& p, const Ln<R>& mirror) {
    return p - mirror.normal() * (R(2) * mirror.eval(p));
}

template <class R>
inline Pt<R> reflect_point(const Pt<R>& p, const Pt<R>& center) {
    return center * R(2) - p;
}

template <class R>
inline Ln<R> reflect_line_line(const Ln<R>& l, const Ln<R>& mirror) {
    Pt<R> p = l.some_point();
    Pt<R> q = p + l.direction();
    return line_through(reflect_point(p, mirror), reflect_point(q, mirror));
}

template <class R>
inline Ln<R> perpendicular(const Pt<R>& p, const Ln<R>& l) {
    return Ln<R>(-l.b, l.a, l.b * p.x - l.a * p.y);
}

template <class R>
inline Ln<R> parallel_line(const Pt<R>& p, const Ln<R>& l) {
    return Ln<R>(l.a, l.b, -(l.a * p.x + l.b * p.y));
}

template <class R>
inline Ln<R> perp_bisector(const Pt<R>& p, const Pt<R>& q) {
    Pt<R> m = midpoint(p, q);
    Pt<R> d = q - p;
    if (norm(d) <= R(1e-12) * local_scale<R>({p, q}))
        throw GeomError(ErrKind::CoincidentPoints, "perp_bisector");
    return Ln<R>(d.x, d.y, -(d.x * m.x + d.y * m.y));
}

template <class R>
struct Bisectors {
    Ln<R> internal, external;
};

template <class R>
inline Bisectors<R> angle_bisectors(const Pt<R>& v, const Pt<R>& p, const Pt<R>& q) {
    if (dist(v, p) <= R(1e-12) * local_scale<R>({v, p}) ||
        dist(v, q) <= R(1e-12) * local_scale<R>({v, q}))
        throw GeomError(ErrKind::DegenerateRay, "angle_bisectors");
    Pt<R> u = unit(p - v), w = unit(q - v);
    Pt<R> din = u + w, dex = u - w;
    if (norm(din) < R(1e-9)) din = rot90(dex);
    if (norm(dex) < R(1e-9)) dex = rot90(din);
    Bisectors<R> b{line_through(v, v + din), line_through(v, v + dex)};
    return b;
}

template <class R>
inline Circ<R> circle_through(const Pt<R>& p, const Pt<R>& q, const Pt<R>& r) {
    R s = local_scale<R>({p, q, r});
    R area2 = cross(q - p, r - p);
    if (abs_v(area2) <= R(1e-10) * s * s)
        throw GeomError(ErrKind::CollinearPoints, "circle_through");
    Pt<R> o = intersect_lines(perp_bisector(p, q), perp_bisector(q, r));
    return {o, dist(o, p)};
}

template <class R>
inline Circ<R> circle_on_diameter(const Pt<R>& p, const Pt<R>& q) {
    return {midpoint(p, q), dist(p, q) / R(2)};
}

template <class R>
inline Circ<R> circle_centered(const Pt<R>& o, const Pt<R>& through) {
    R r = dist(o, through);
    if (r == R(0)) throw GeomError(ErrKind::CoincidentPoints, "circle_centered");
    return {o, r};
}

template <class R>
inline std::vector<Pt<R>> intersect_line_circle(const Ln<R>& l, const Circ<R>& c) {
    using std::sqrt;
    Pt<R> f = foot(c.center, l);
    R h2 = sq(c.radius) - sq(dist(f, c.center));
    std::vector<Pt<R>> out;
    R tol = R(1e-12) * sq(c.radius);
    if (h2 < -tol) return out;
    if (h2 < tol * R(0)) h2 = R(0);
    R h = sqrt(max_v(h2, R(0)));
    Pt<R> d = l.direction();
    out.push_back(f + d * h);
    if (h > R(0)) out.push_back(f - d * h);
    return out;
}

template <class R>
inline R power(const Pt<R>& p, const Circ<R>& c) {
    return sq(dist(p, c.center)) - sq(c.radius);
}

template <class R>
inline Ln<R> radical_axis(const Circ<R>& c1, const Circ<R>& c2) {
    Pt<R> d = c2.center - c1.center;
    R dd = norm(d);
    if (dd <= R(1e-12) * local_scale<R>({c1.center, c2.center}))
        throw GeomError(ErrKind::ConcentricCircles, "radical_axis");
    R k = dot(c2.center, c2.center) - dot(c1.center, c1.center) - sq(c2.radius) + sq(c1.radius);
    return Ln<R>(R(2) * d.x, R(2) * d.y, -k);
}

template <class R>
inline Pt<R> radical_center(const Circ<R>& c1, const Circ<R>& c2, const Circ<R>& c3) {
    R s = local_scale<R>({c1.center, c2.center, c3.center});
    if (abs_v(cross(c2.center - c1.center, c3.center - c1.center)) <= R(1e-12) * s * s)
        throw GeomError(ErrKind::CollinearCenters, "radical_center");
    return intersect_lines(radical_axis(c1, c2), radical_axis(c1, c3));
}

template <class R>
inline std::vector<Pt<R>> intersect_circles(const Circ<R>& c1, const Circ<R>& c2) {
    return intersect_line_circle(radical_axis(c1, c2), c1);
}

// selection helpers used all over the scripts
template <class R>
inline Pt<R> pick_nearest(const std::vector<Pt<R>>& pts, const Pt<R>& hint) {
    if (pts.empty()) throw GeomError(ErrKind::NoIntersection, "pick_nearest");
    const Pt<R>* best = &pts[0];
    for (const auto& p : pts)
        if (dist(p, hint) < dist(*best, hint)) best = &p;
    return *best;
}

template <class R>
inline Pt<R> pick_farthest(const std::vector<Pt<R>>& pts, const Pt<R>& known) {
    if (pts.empty()) throw GeomError(ErrKind::NoIntersection, "pick_farthest");
    const Pt<R>* best = &pts[0];
    for (const auto& p : pts)
        if (dist(p, known) > dist(*best, known)) best = &p;
    return *best;
}

template <class R>
inline Pt<R> arc_midpoint_smaller(const Circ<R>& c, const Pt<R>& a, const Pt<R>& b) {
    R sc = max_v(c.radius, R(1));
    if (abs_v(dist(a, c.center) - c.radius) > R(1e-9) * sc ||
        abs_v(dist(b, c.center) - c.radius) > R(1e-9) * sc)
        throw GeomError(ErrKind::PointsNotOnCircle, "arc_midpoint");
    if (dist(a, b) >= (R(2) - R(1e-9)) * c.radius)
        throw GeomError(ErrKind::AntipodalAmbiguity, "arc_midpoint_smaller");
    Ln<R> chord = line_through(a, b);
    auto cand = intersect_line_circle(perp_bisector(a, b), c);
    if (cand.size() < 2) throw GeomError(ErrKind::NoIntersection, "arc_midpoint");
    return abs_v(chord.eval(cand[0])) < abs_v(chord.eval(cand[1])) ? cand[0] : cand[1];
}

template <class R>
inline Pt<R> arc_midpoint_opposite(const Circ<R>& c, const Pt<R>& a, const Pt<R>& b,
                                   const Pt<R>& avoid) {
    R sc = max_v(c.radius, R(1));
    if (abs_v(dist(a, c.center) - c.radius) > R(1e-9) * sc ||
        abs_v(dist(b, c.center) - c.radius) > R(1e-9) * sc)
        throw GeomError(ErrKind::PointsNotOnCircle, "arc_midpoint");
    Ln<R> chord = line_through(a, b);
    auto cand = intersect_line_circle(perp_bisector(a, b), c);
    if (cand.size() < 2) throw GeomError(ErrKind::NoIntersection, "arc_midpoint");
    R side = chord.eval(avoid);
    return chord.eval(cand[0]) * side < R(0) ? cand[0] : cand[1];
}

template <class R>
inline Pt<R> antipode(const Circ<R>& c, const Pt<R>& p) {
    return reflect_point(p, c.center);
}

template <class R>
inline Ln<R> tangent_at(const Circ<R>& c, const Pt<R>& p) {
    return perpendicular(p, line_through(c.center, p));
}

// tangency point of two (assumed tangent) circles, on the center line
template <class R>
inline Pt<R> tangency_point(const Circ<R>& c1, const Circ<R>& c2) {
    R d = dist(c1.center, c2.center);
    if (d == R(0)) throw GeomError(ErrKind::ConcentricDegenerate, "tangency_point");
    Pt<R> u = (c2.center - c1.center) / d;
    bool ext = abs_v(d - (c1.radius + c2.radius)) <= abs_v(d - abs_v(c1.radius - c2.radius));
    if (ext) return c1.center + u * c1.radius;
    return c1.radius >= c2.radius ? c1.center + u * c1.radius : c1.center - u * c1.radius;
}

template <class R>
inline std::vector<Ln<R>> tangent_lines_from(const Pt<R>& p, const Circ<R>& c) {
    using std::asin;
    using std::atan2;
    using std::cos;
    using std::sin;
    R d = dist(p, c.center);
    if (d <= c.radius) throw GeomError(ErrKind::PointInsideCircle, "tangent_lines_from");
    R alpha = asin(c.radius / d);
    R base = atan2(c.center.y - p.y, c.center.x - p.x);
    std::vector<Ln<R>> out;
    for (int s : {+1, -1}) {
        R ang = base + R(s) * alpha;
        out.push_back(line_through(p, p + Pt<R>{cos(ang), sin(ang)}));
    }
    return out;
}

template <class R>
inline std::vector<Ln<R>> common_tangents(const Circ<R>& c1, const Circ<R>& c2, bool external) {
    using std::sqrt;
    std::vector<Ln<R>> out;
    Pt<R> d = c2.center - c1.center;
    R d2 = dot(d, d);
    if (d2 == R(0)) return out;
    for (int s2i : {+1, -1}) {
        R s2 = R(s2i);
        R s1 = external ? s2 : -s2;
        R k = s2 * c2.radius - s1 * c1.radius;
        R disc = d2 - k * k;
        if (disc < R(0)) continue;
        R rt = sqrt(disc);
        for (int sgn : {+1, -1}) {
            R a = (k * d.x - R(sgn) * d.y * rt) / d2;
            R b = (k * d.y + R(sgn) * d.x * rt) / d2;
            R cc = -(a * c1.center.x + b * c1.center.y) + s1 * c1.radius;
            Ln<R> l(a, b, cc);
            bool dup = false;
            for (const auto& m : out)
                if (abs_v(l.a - m.a) + abs_v(l.b - m.b) + abs_v(l.c - m.c) < R(1e-9)) dup = true;
            if (!dup) out.push_back(l);
        }
    }
    return out;
}

template <class R>
struct HomothetyCenters {
    Pt<R> external, internal;
};

template <class R>
inline Pt<R> homothety_center_external(const Circ<R>& c1, const Circ<R>& c2) {
    R dr = c2.radius - c1.radius;
    if (abs_v(dr) <= R(1e-12) * max_v(c1.radius, c2.radius)) {
        Pt<R> dir = c2.center - c1.center;
        throw GeomError(ErrKind::EqualRadiiExternalAtInfinity, "homothety_center_external",
                        to_double(dir.x), to_double(dir.y));
    }
    return (c1.center * c2.radius - c2.center * c1.radius) / dr;
}

template <class R>
inline Pt<R> homothety_center_internal(const Circ<R>& c1, const Circ<R>& c2) {
    return (c1.center * c2.radius + c2.center * c1.radius) / (c1.radius + c2.radius);
}

// ------------------------------------------------------------------
// predicates: residuals, never booleans. All are normalized by `scale`
// (the scene scale) so thresholding happens only in the harness.
// ------------------------------------------------------------------

template <class R>
inline R res_collinear(const std::vector<Pt<R>>& pts, const R& scale) {
    if (pts.size() < 3) throw GeomError(ErrKind::ArityError, "collinear needs >= 3 points");
    size_t bi = 0, bj = 1;
    R bd(-1);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            R d = dist(pts[i], pts[j]);
            if (d > bd) { bd = d; bi = i; bj = j; }
        }
    if (bd <= R(0)) return R(0);
    Ln<R> l = line_through(pts[bi], pts[bj]);
    R worst(0);
    for (const auto& p : pts) worst = max_v(worst, abs_v(l.eval(p)));
    return worst / scale;
}

template <class R>
inline R res_concurrent(const std::vector<Ln<R>>& ls, const R& scale) {
    if (ls.size() < 3) throw GeomError(ErrKind::ArityError, "concurrent needs >= 3 lines");
    size_t bi = 0, bj = 1;
    R bd(-1);
    for (size_t i = 0; i < ls.size(); ++i)
        for (size_t j = i + 1; j < ls.size(); ++j) {
            R d = abs_v(cross(ls[i].direction(), ls[j].direction()));
            if (d > bd) { bd = d; bi = i; bj = j; }
        }
    if (bd <= R(1e-12)) return R(1);
    Pt<R> x = intersect_lines(ls[bi], ls[bj]);
    R worst(0);
    for (const auto& l : ls) worst = max_v(worst, abs_v(l.eval(x)));
    return worst / scale;
}

template <class R>
inline R res_on_circle(const Circ<R>& c, const Pt<R>& p, const R& scale) {
    return abs_v(dist(p, c.center) - c.radius) / scale;
}

template <class R>
inline R res_on_line(const Ln<R>& l, const Pt<R>& p, const R& scale) {
    return abs_v(l.eval(p)) / scale;
}

template <class R>
inline R res_concyclic(const std::vector<Pt<R>>& pts, const R& scale) {
    if (pts.size() < 4) throw GeomError(ErrKind::ArityError, "concyclic needs >= 4 points");
    // spread 3 points: farthest pair plus the point farthest from both
    size_t bi = 0, bj = 1;
    R bd(-1);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            R d = dist(pts[i], pts[j]);
            if (d > bd) { bd = d; bi = i; bj = j; }
        }
    size_t bk = 0;
    R bk_score(-1);
    for (size_t k = 0; k < pts.size(); ++k) {
        if (k == bi || k == bj) continue;
        R s = min_v(dist(pts[k], pts[bi]), dist(pts[k], pts[bj]));
        if (s > bk_score) { bk_score = s; bk = k; }
    }
    Circ<R> c = circle_through(pts[bi], pts[bj], pts[bk]);
    R worst(0);
    for (const auto& p : pts) worst = max_v(worst, res_on_circle(c, p, scale));
    return worst;
}

template <class R>
inline R res_parallel(const Ln<R>& l1, const Ln<R>& l2) {
    return abs_v(cross(l1.direction(), l2.direction()));
}

template <class R>
inline R res_perpendicular(const Ln<R>& l1, const Ln<R>& l2) {
    return abs_v(dot(l1.direction(), l2.direction()));
}

enum class TangentSense { Any, External, Internal };

template <class R>
inline R res_tangent_circles(const Circ<R>& c1, const Circ<R>& c2, TangentSense sense,
                             const R& scale) {
    R d = dist(c1.center, c2.center);
    R ext = abs_v(d - (c1.radius + c2.radius));
    R inte = abs_v(d - abs_v(c1.radius - c2.radius));
    switch (sense) {
        case TangentSense::External: return ext / scale;
        case TangentSense::Internal: return inte / scale;
        default: return min_v(ext, inte) / scale;
    }
}

template <class R>
inline R res_tangent_line_circle(const Ln<R>& l, const Circ<R>& c, const R& scale) {
    return abs_v(abs_v(l.eval(c.center)) - c.radius) / scale;
}

template <class R>
inline R res_same_line(const Ln<R>& l1, const Ln<R>& l2, const R& scale) {
    // both are canonically normalized, so compare components; c in length units
    R d = max_v(abs_v(l1.a - l2.a), abs_v(l1.b - l2.b));
    return max_v(d, abs_v(l1.c - l2.c) / scale);
}

template <class R>
inline R res_coaxial(const Circ<R>& c1, const Circ<R>& c2, const Circ<R>& c3, const R& scale) {
    return res_same_line(radical_axis(c1, c2), radical_axis(c1, c3), scale);
}

template <class R>
inline R res_coincide(const Pt<R>& p, const Pt<R>& q, const R& scale) {
    return dist(p, q) / scale;
}

template <class R>
inline R res_equal_scalar(const R& x, const R& y) {
    R m = max_v(abs_v(x), abs_v(y));
    if (m == R(0)) return R(0);
    return abs_v(x - y) / m;
}

template <class R>
inline R res_equilateral(const Pt<R>& p, const Pt<R>& q, const Pt<R>& r) {
    R s1 = dist(p, q), s2 = dist(q, r), s3 = dist(r, p);
    R mx = max_v(s1, max_v(s2, s3));
    if (mx == R(0)) return R(0);
    return (mx - min_v(s1, min_v(s2, s3))) / mx;
}

// common point of >= 3 circles: best intersection of the first two
// against the rest
template <class R>
inline R res_circles_concurrent(const std::vector<Circ<R>>& cs, const R& scale) {
    if (cs.size() < 3) throw GeomError(ErrKind::ArityError, "circles_concurrent needs >= 3");
    auto pts = intersect_circles(cs[0], cs[1]);
    if (pts.empty()) return R(1);
    R best(1);
    for (const auto& p : pts) {
        R worst(0);
        for (size_t i = 2; i < cs.size(); ++i)
            worst = max_v(worst, res_on_circle(cs[i], p, scale));
        best = min_v(best, worst);
    }
    return best;
}

// the four circles of two segment-pairs share a radical center
template <class R>
inline R res_common_radical_center(const std::vector<Circ<R>>& cs, const R& scale) {
    if (cs.size() != 4) throw GeomError(ErrKind::ArityError, "common_radical_center needs 4");
    Pt<R> r1 = radical_center(cs[0], cs[1], cs[2]);
    Pt<R> r2 = radical_center(cs[0], cs[1], cs[3]);
    Pt<R> r3 = radical_center(cs[0], cs[2], cs[3]);
    Pt<R> r4 = radical_center(cs[1], cs[2], cs[3]);
    R worst(0);
    for (const auto& p : {r2, r3, r4}) worst = max_v(worst, dist(r1, p));
    return worst / scale;
}

}  // namespace geo
