#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <string>

namespace geo {

// Two arithmetic tiers. Base is x87 extended double (~19 significant
// digits); High is a 50-digit binary float used when the harness
// re-evaluates a scene to decide whether a residual is noise.
using BaseReal = long double;
using HighReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<50>,
    boost::multiprecision::et_off>;

template <class R>
struct precision_traits;

template <>
struct precision_traits<BaseReal> {
    static constexpr int decimal_digits = std::numeric_limits<long double>::digits10;  // 18
    static constexpr const char* name = "base";
};

template <>
struct precision_traits<HighReal> {
    static constexpr int decimal_digits = 50;
    static constexpr const char* name = "high";
};

template <class R>
inline double to_double(const R& x) {
    return static_cast<double>(x);
}

template <class R>
inline R from_double(double x) {
    return R(x);
}

template <class R>
inline R pi_v() {
    using std::atan;
    return R(4) * atan(R(1));
}

template <class R>
inline R sq(const R& x) { return x * x; }

template <class R>
inline R abs_v(const R& x) {
    using std::abs;
    return abs(x);
}

template <class R>
inline R max_v(const R& a, const R& b) { return a > b ? a : b; }

template <class R>
inline R min_v(const R& a, const R& b) { return a < b ? a : b; }

// Default tolerances of the verification ladder. Residuals handed to the
// harness are scale-normalized, so these are dimensionless.
struct Tolerance {
    double tau_base = 1e-7;
    double tau_high = 1e-25;
    double shrink_min = 1e6;
};

}  // namespace geo
