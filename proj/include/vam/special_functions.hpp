#pragma once

#include <cmath>

#include "vam/error.hpp"

namespace vam {

// Monotone special functions behind the sharp comparison constants.  Each is
// strictly decreasing on its interval; the endpoint limits pin the constants.

/// arcsin(r) / artanh(r) on (0, 1), decreasing from 1 to 0.
inline double angle_artanh_ratio(double r) {
    if (!(r > 0.0 && r < 1.0)) fail(errc::out_of_interval, "argument must lie in (0, 1)");
    return std::asin(r) / std::atanh(r);
}

/// arcsin(r) / log(1 / (1 - r)) on (0, 1), decreasing from 1 to 0.
inline double angle_log_ratio(double r) {
    if (!(r > 0.0 && r < 1.0)) fail(errc::out_of_interval, "argument must lie in (0, 1)");
    return std::asin(r) / (-std::log1p(-r));
}

/// arctan(c r / (1 - c sqrt(1 - r^2))) - arsinh(2 c r / (1 - c^2)) on (0, 1)
/// for c in (0, 1); the gap between a visual angle and a hyperbolic distance
/// on equal-norm pairs, decreasing from 0.
inline double angle_defect(double r, double c) {
    if (!(r > 0.0 && r < 1.0)) fail(errc::out_of_interval, "argument must lie in (0, 1)");
    if (!(c > 0.0 && c < 1.0)) fail(errc::out_of_interval, "parameter must lie in (0, 1)");
    double rp = std::sqrt((1.0 - r) * (1.0 + r));
    return std::atan2(c * r, 1.0 - c * rp) - std::asinh(2.0 * c * r / (1.0 - c * c));
}

/// arctan(r) / arcosh(1 + 2 r^2) on (0, inf), decreasing from 1/2 to 0.
inline double angle_arcosh_ratio(double r) {
    if (!(r > 0.0)) fail(errc::out_of_interval, "argument must be positive");
    // arcosh(1 + 2 r^2) = 2 arsinh(r)
    return std::atan(r) / (2.0 * std::asinh(r));
}

/// (1 + cos(alpha + theta)) (1 + cos(alpha - theta)) for alpha in (0, pi),
/// theta in [0, pi - alpha); decreasing in theta from (1 + cos alpha)^2.
inline double cos_product(double alpha, double theta) {
    constexpr double pi = 3.14159265358979323846;
    if (!(alpha > 0.0 && alpha < pi)) fail(errc::out_of_interval, "alpha must lie in (0, pi)");
    if (!(theta >= 0.0 && theta < pi - alpha)) fail(errc::out_of_interval, "theta must lie in [0, pi - alpha)");
    return (1.0 + std::cos(alpha + theta)) * (1.0 + std::cos(alpha - theta));
}

} // namespace vam
