#pragma once

#include <cmath>
#include <vector>

#include "geom/errors.hpp"
#include "geom/scalar.hpp"

namespace geo {

template <class R>
struct Pt {
    R x{}, y{};

    Pt() = default;
    Pt(R xx, R yy) : x(std::move(xx)), y(std::move(yy)) {}

    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(const R& k) const { return {x * k, y * k}; }
    Pt operator/(const R& k) const { return {x / k, y / k}; }
};

template <class R>
inline R dot(const Pt<R>& a, const Pt<R>& b) { return a.x * b.x + a.y * b.y; }

template <class R>
inline R cross(const Pt<R>& a, const Pt<R>& b) { return a.x * b.y - a.y * b.x; }

template <class R>
inline R norm(const Pt<R>& a) {
    using std::sqrt;
    return sqrt(dot(a, a));
}

template <class R>
inline R dist(const Pt<R>& a, const Pt<R>& b) { return norm(a - b); }

template <class R>
inline Pt<R> unit(const Pt<R>& a) {
    R n = norm(a);
    if (n == R(0)) throw GeomError(ErrKind::DegenerateRay, "zero direction");
    return a / n;
}

template <class R>
inline Pt<R> rot90(const Pt<R>& a) { return {-a.y, a.x}; }

template <class R>
inline Pt<R> rotated(const Pt<R>& v, const R& angle) {
    using std::cos;
    using std::sin;
    R c = cos(angle), s = sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

// a*x + b*y + c = 0 stored with a^2 + b^2 = 1 and the first nonzero of
// (a, b) positive, so equal lines have equal components.
template <class R>
struct Ln {
    R a{}, b{}, c{};

    Ln() = default;
    Ln(R aa, R bb, R cc) {
        using std::sqrt;
        R n = sqrt(aa * aa + bb * bb);
        if (n == R(0)) throw GeomError(ErrKind::DegenerateRay, "null line");
        aa /= n; bb /= n; cc /= n;
        if (aa < R(0) || (aa == R(0) && bb < R(0))) { aa = -aa; bb = -bb; cc = -cc; }
        a = aa; b = bb; c = cc;
    }

    R eval(const Pt<R>& p) const { return a * p.x + b * p.y + c; }
    Pt<R> normal() const { return {a, b}; }
    Pt<R> direction() const { return {-b, a}; }
    Pt<R> some_point() const { return {-a * c, -b * c}; }
};

template <class R>
struct Circ {
    Pt<R> center;
    R radius{};

    Circ() = default;
    Circ(Pt<R> o, R r) : center(std::move(o)), radius(std::move(r)) {}
};

template <class R>
struct Seg {
    Pt<R> a, b;
};

template <class R>
struct Tri {
    Pt<R> a, b, c;
};

// local magnitude used to make kernel preconditions relative
template <class R>
inline R local_scale(std::initializer_list<Pt<R>> pts) {
    R m(1);
    for (const auto& p : pts) m = max_v(m, max_v(abs_v(p.x), abs_v(p.y)));
    return m;
}

}  // namespace geo
