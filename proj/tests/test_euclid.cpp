#include <doctest.h>

#include "geom/euclid.hpp"
#include "geom/rng.hpp"

using namespace geo;
using R = BaseReal;
using P = Pt<R>;

static Rng test_rng(12345);

static P rand_pt(double lo = -10, double hi = 10) {
    return {R(test_rng.uniform(lo, hi)), R(test_rng.uniform(lo, hi))};
}

TEST_CASE("line_through basics") {
    Ln<R> l = line_through<R>({0, 0}, {1, 0});
    CHECK(to_double(abs_v(l.eval({R(0.5), R(0)}))) < 1e-17);
    CHECK(to_double(abs_v(l.eval({R(2), R(3)})) - 3.0) < 1e-15);

    // direction from the Morley drawing's side CB
    P b{R(9.2615L), R(-5.7526L)}, c{R(5.9660L), R(-6.0739L)};
    Ln<R> cb = line_through(c, b);
    P d = cb.direction();
    R crossres = cross(d, P{R(3.2955L), R(0.3213L)});
    CHECK(to_double(abs_v(crossres)) / 3.3 < 1e-12);

    CHECK_THROWS_AS(line_through<R>({1, 1}, {1, 1}), GeomError);
}

TEST_CASE("line normal is perpendicular to chord") {
    for (int i = 0; i < 200; ++i) {
        P p = rand_pt(), q = rand_pt();
        if (to_double(dist(p, q)) < 1e-6) continue;
        Ln<R> l = line_through(p, q);
        CHECK(to_double(abs_v(dot(l.normal(), q - p))) < 1e-12 * to_double(dist(p, q)));
        CHECK(to_double(abs_v(l.eval(p))) < 1e-14 * 20);
        CHECK(to_double(abs_v(l.eval(q))) < 1e-14 * 20);
    }
}

TEST_CASE("intersect_lines") {
    Ln<R> x_axis = line_through<R>({0, 0}, {1, 0});
    Ln<R> y_axis = line_through<R>({0, 0}, {0, 1});
    P o = intersect_lines(x_axis, y_axis);
    CHECK(to_double(norm(o)) < 1e-16);

    // figure point P of the cyclic-quadrilateral drawing
    Ln<R> l1 = line_through<R>({-7.0314L, 12.2408L}, {-4.4692L, 10.0803L});
    Ln<R> l2 = line_through<R>({-4.7869L, 6.2131L}, {-11.4356L, 6.3912L});
    P p = intersect_lines(l1, l2);
    CHECK(to_double(abs_v(p.x - R(0.2779L))) < 2e-3);
    CHECK(to_double(abs_v(p.y - R(6.0774L))) < 2e-3);

    CHECK_THROWS_AS(intersect_lines(x_axis, parallel_line<R>({0, 1}, x_axis)), GeomError);

    for (int i = 0; i < 100; ++i) {
        P common = rand_pt();
        Ln<R> a = line_through(common, rand_pt());
        Ln<R> b = line_through(common, rand_pt());
        if (to_double(res_parallel(a, b)) < 1e-3) continue;
        CHECK(to_double(dist(intersect_lines(a, b), common)) < 1e-9);
    }
}

TEST_CASE("reflections are involutions") {
    for (int i = 0; i < 100; ++i) {
        P p = rand_pt();
        Ln<R> m = line_through(rand_pt(), rand_pt());
        CHECK(to_double(dist(reflect_point(reflect_point(p, m), m), p)) < 1e-12 * 20);
        Ln<R> l = line_through(rand_pt(), rand_pt());
        Ln<R> twice = reflect_line_line(reflect_line_line(l, m), m);
        CHECK(to_double(res_same_line(l, twice, R(20))) < 1e-12);
    }
    CHECK(to_double(dist(reflect_point<R>({1, 0}, line_through<R>({0, 0}, {0, 1})),
                         P{R(-1), R(0)})) < 1e-16);
    CHECK(to_double(dist(midpoint<R>({0, 0}, {2, 0}), P{R(1), R(0)})) < 1e-16);
}

TEST_CASE("angle bisectors") {
    auto b = angle_bisectors<R>({0, 0}, {1, 0}, {0, 1});
    CHECK(to_double(abs_v(b.internal.eval({R(1), R(1)}))) < 1e-15);
    CHECK(to_double(res_perpendicular(b.internal, b.external))< 1e-15);
    // three internal bisectors meet at the incenter (weighted-vertex oracle)
    for (int i = 0; i < 50; ++i) {
        P a = rand_pt(), bb = rand_pt(), c = rand_pt();
        R s = local_scale<R>({a, bb, c});
        if (to_double(abs_v(cross(bb - a, c - a))) < 1.0) continue;
        R la = dist(bb, c), lb = dist(c, a), lc = dist(a, bb);
        P inc = (a * la + bb * lb + c * lc) / (la + lb + lc);
        auto ba = angle_bisectors(a, bb, c).internal;
        auto bb2 = angle_bisectors(bb, c, a).internal;
        auto bc = angle_bisectors(c, a, bb).internal;
        CHECK(to_double(res_concurrent(std::vector<Ln<R>>{ba, bb2, bc}, s)) < 1e-11);
        CHECK(to_double(dist(intersect_lines(ba, bb2), inc) / s) < 1e-10);
    }
}

TEST_CASE("circle_through") {
    Circ<R> u = circle_through<R>({1, 0}, {-1, 0}, {0, 1});
    CHECK(to_double(norm(u.center)) < 1e-15);
    CHECK(to_double(abs_v(u.radius - R(1))) < 1e-15);

    // circumcircle of the diameters drawing
    Circ<R> c = circle_through<R>({-5.0474L, 11.8999L}, {-0.1383L, 1.0515L},
                                  {-11.4594L, 1.7188L});
    CHECK(to_double(abs_v(c.center.x - R(-5.5784L))) < 2e-3);
    CHECK(to_double(abs_v(c.center.y - R(5.1247L))) < 2e-3);
    CHECK(to_double(abs_v(c.radius - R(6.7960L))) < 2e-3);

    CHECK_THROWS_AS(circle_through<R>({0, 0}, {1, 1}, {2, 2}), GeomError);

    // resample on a known circle: circle through any 3 contains the 4th
    for (int i = 0; i < 50; ++i) {
        P o = rand_pt(-5, 5);
        R r = R(test_rng.uniform(1, 6));
        P q[4];
        for (auto& pt : q) {
            double th = test_rng.uniform(0, 6.283185307179586);
            pt = o + P{R(std::cos(th)), R(std::sin(th))} * r;
        }
        Circ<R> cc = circle_through(q[0], q[1], q[2]);
        CHECK(to_double(res_on_circle(cc, q[3], R(10))) < 1e-11);
    }
}

TEST_CASE("line/circle and circle/circle intersections") {
    Circ<R> u{{R(0), R(0)}, R(1)};
    auto pts = intersect_line_circle(line_through<R>({-2, 0}, {2, 0}), u);
    REQUIRE(pts.size() == 2);
    CHECK(to_double(abs_v(abs_v(pts[0].x) - R(1))) < 1e-15);

    Circ<R> u2{{R(1), R(0)}, R(1)};
    auto both = intersect_circles(u, u2);
    REQUIRE(both.size() == 2);
    for (auto& p : both) {
        CHECK(to_double(abs_v(p.x - R(0.5))) < 1e-15);
        CHECK(to_double(abs_v(abs_v(p.y) - R(0.8660254037844386L))) < 1e-12);
    }

    for (int i = 0; i < 80; ++i) {
        P o = rand_pt(-5, 5);
        R r = R(test_rng.uniform(1, 6));
        Circ<R> c{o, r};
        Ln<R> l = line_through(rand_pt(), rand_pt());
        for (auto& p : intersect_line_circle(l, c)) {
            CHECK(to_double(res_on_circle(c, p, R(10))) < 1e-10);
            CHECK(to_double(res_on_line(l, p, R(10))) < 1e-10);
        }
    }
}

TEST_CASE("radical axis and power") {
    Circ<R> c1{{R(-1), R(0)}, R(1)}, c2{{R(1), R(0)}, R(1)};
    Ln<R> ax = radical_axis(c1, c2);
    CHECK(to_double(abs_v(ax.eval({R(0), R(5)}))) < 1e-15);
    CHECK(to_double(abs_v(power<R>({0, 0}, Circ<R>{{R(0), R(0)}, R(1)}) + R(1))) < 1e-16);
    CHECK_THROWS_AS(radical_axis(c1, Circ<R>{{R(-1), R(0)}, R(2)}), GeomError);

    for (int i = 0; i < 50; ++i) {
        Circ<R> a{rand_pt(-5, 5), R(test_rng.uniform(0.5, 4))};
        Circ<R> b{rand_pt(-5, 5), R(test_rng.uniform(0.5, 4))};
        Circ<R> c{rand_pt(-5, 5), R(test_rng.uniform(0.5, 4))};
        P rc;
        try {
            rc = radical_center(a, b, c);
        } catch (const GeomError&) {
            continue;
        }
        R pa = power(rc, a), pb = power(rc, b), pc = power(rc, c);
        CHECK(to_double(abs_v(pa - pb)) < 1e-9 * 100);
        CHECK(to_double(abs_v(pa - pc)) < 1e-9 * 100);
        // radical axis is perpendicular to the center line
        Ln<R> ab = radical_axis(a, b);
        CHECK(to_double(res_perpendicular(ab, line_through(a.center, b.center))) < 1e-12);
    }
}

TEST_CASE("arc midpoints") {
    Circ<R> u{{R(0), R(0)}, R(1)};
    P m = arc_midpoint_smaller<R>(u, {1, 0}, {0, 1});
    CHECK(to_double(dist(m, P{R(0.7071067811865476L), R(0.7071067811865476L)})) < 1e-12);
    P m2 = arc_midpoint_opposite<R>(u, {1, 0}, {-1, 0}, {0, -1});
    CHECK(to_double(dist(m2, P{R(0), R(1)})) < 1e-12);
    CHECK_THROWS_AS(arc_midpoint_smaller<R>(u, {1, 0}, {-1, 0}), GeomError);
    CHECK_THROWS_AS(arc_midpoint_smaller<R>(u, {5, 0}, {0, 1}), GeomError);

    for (int i = 0; i < 50; ++i) {
        P o = rand_pt(-3, 3);
        R r = R(test_rng.uniform(1, 5));
        double t1 = test_rng.uniform(0, 6.28), t2 = test_rng.uniform(0, 6.28);
        P a = o + P{R(std::cos(t1)), R(std::sin(t1))} * r;
        P b = o + P{R(std::cos(t2)), R(std::sin(t2))} * r;
        if (to_double(dist(a, b)) > 1.9 * to_double(r)) continue;
        if (to_double(dist(a, b)) < 1e-3) continue;
        P m3 = arc_midpoint_smaller(u = Circ<R>{o, r}, a, b);
        CHECK(to_double(abs_v(perp_bisector(a, b).eval(m3))) < 1e-10);
        CHECK(to_double(res_on_circle(u, m3, r)) < 1e-12);
    }
}

TEST_CASE("homothety centers and tangent lines") {
    Circ<R> c1{{R(0), R(0)}, R(1)}, c2{{R(3), R(0)}, R(2)};
    P ext = homothety_center_external(c1, c2);
    CHECK(to_double(dist(ext, P{R(-3), R(0)})) < 1e-14);
    CHECK_THROWS_AS(homothety_center_external(c1, Circ<R>{{R(3), R(0)}, R(1)}), GeomError);

    auto tls = tangent_lines_from<R>({2, 0}, c1);
    REQUIRE(tls.size() == 2);
    for (auto& l : tls) {
        CHECK(to_double(res_tangent_line_circle(l, c1, R(1))) < 1e-14);
        P tp = foot(c1.center, l);
        CHECK(to_double(abs_v(abs_v(tp.y) - R(0.8660254037844386L))) < 1e-12);
    }
    CHECK_THROWS_AS(tangent_lines_from<R>({0.5, 0}, c1), GeomError);

    for (int i = 0; i < 50; ++i) {
        Circ<R> a{rand_pt(-5, 5), R(test_rng.uniform(0.5, 2))};
        Circ<R> b{rand_pt(-5, 5), R(test_rng.uniform(0.5, 2))};
        if (to_double(dist(a.center, b.center)) < to_double(a.radius + b.radius) + 0.3) continue;
        for (bool ext2 : {true, false}) {
            auto ts = common_tangents(a, b, ext2);
            CHECK(ts.size() == 2);
            for (auto& l : ts) {
                CHECK(to_double(res_tangent_line_circle(l, a, R(10))) < 1e-10);
                CHECK(to_double(res_tangent_line_circle(l, b, R(10))) < 1e-10);
            }
        }
    }
}

TEST_CASE("predicate residuals scale with perturbation") {
    R scale(10);
    for (double eps : {1e-3, 1e-6, 1e-9}) {
        P a{R(-3), R(-1)}, b{R(1), R(1)}, c0{R(5), R(3)};
        P c{c0.x, c0.y + R(eps)};
        double r = to_double(res_collinear(std::vector<P>{a, b, c}, scale));
        CHECK(r > eps / 4 / 10);
        CHECK(r < eps * 4 / 10);
    }
    CHECK(to_double(res_collinear(std::vector<P>{{R(0), R(0)}, {R(1), R(1)}, {R(2), R(2)}},
                                  R(2))) < 1e-15);
    CHECK(to_double(res_tangent_circles(Circ<R>{{R(0), R(0)}, R(1)},
                                        Circ<R>{{R(2), R(0)}, R(1)},
                                        TangentSense::External, R(2))) < 1e-16);
}

TEST_CASE("base vs high precision agreement") {
    using H = HighReal;
    for (int i = 0; i < 20; ++i) {
        double ax = test_rng.uniform(-10, 10), ay = test_rng.uniform(-10, 10);
        double bx = test_rng.uniform(-10, 10), by = test_rng.uniform(-10, 10);
        double cx = test_rng.uniform(-10, 10), cy = test_rng.uniform(-10, 10);
        if (std::abs((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)) < 1.0) continue;
        Circ<R> cb = circle_through<R>({R(ax), R(ay)}, {R(bx), R(by)}, {R(cx), R(cy)});
        Circ<H> ch = circle_through<H>({H(ax), H(ay)}, {H(bx), H(by)}, {H(cx), H(cy)});
        CHECK(std::abs(to_double(cb.radius) - to_double(ch.radius)) < 1e-13 * 20);
        CHECK(std::abs(to_double(cb.center.x) - to_double(ch.center.x)) < 1e-13 * 20);
    }
}
