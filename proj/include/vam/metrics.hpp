#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "vam/domain.hpp"
#include "vam/error.hpp"
#include "vam/moebius.hpp"
#include "vam/point.hpp"

namespace vam {

enum class MetricId { v, vbar, s, r, j, k, rho, rho_star, v_star, vbar_star };

inline const char* metric_name(MetricId id) {
    switch (id) {
        case MetricId::v: return "v";
        case MetricId::vbar: return "vbar";
        case MetricId::s: return "s";
        case MetricId::r: return "r";
        case MetricId::j: return "j";
        case MetricId::k: return "k";
        case MetricId::rho: return "rho";
        case MetricId::rho_star: return "rho_star";
        case MetricId::v_star: return "v_star";
        case MetricId::vbar_star: return "vbar_star";
    }
    return "?";
}

/// A tagged metric value.  Angle-valued metrics stay below pi, the
/// normalized variants below 1, rho_star below pi/2.
struct MetricValue {
    double value = 0.0;
    MetricId id = MetricId::v;
};

namespace detail {

inline double metric_cap(MetricId id) {
    switch (id) {
        case MetricId::v:
        case MetricId::vbar: return pi;
        case MetricId::s:
        case MetricId::r:
        case MetricId::v_star:
        case MetricId::vbar_star: return 1.0;
        case MetricId::rho_star: return pi / 2.0;
        default: return std::numeric_limits<double>::infinity();
    }
}

inline MetricValue make_metric(MetricId id, double value) {
    double cap = metric_cap(id);
    if (!(value >= -1e-9) || !(value <= cap + 1e-9))
        fail(errc::internal, std::string("metric value out of range for ") + metric_name(id));
    value = std::clamp(value, 0.0, cap);
    return MetricValue{value, id};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Hyperbolic metric and friends in the canonical domains.

namespace detail {

inline void require_ball(const Point& x, const char* what) {
    require_finite(x, what);
    if (x.norm() >= 1.0) fail(errc::outside_domain, std::string(what) + " must lie in the open unit ball");
}

inline void require_half(const Point& x, const char* what) {
    require_finite(x, what);
    if (!(x[x.dim() - 1] > 0.0)) fail(errc::outside_domain, std::string(what) + " must lie in the open half-space");
}

inline double sinh_half_rho_ball(const Point& x, const Point& y) {
    return dist(x, y) / std::sqrt((1.0 - x.norm_sq()) * (1.0 - y.norm_sq()));
}

inline double sinh_half_rho_half(const Point& x, const Point& y) {
    double hx = x[x.dim() - 1], hy = y[y.dim() - 1];
    return dist(x, y) / (2.0 * std::sqrt(hx * hy));
}

} // namespace detail

inline MetricValue rho_ball(const Point& x, const Point& y) {
    detail::require_ball(x, "x");
    detail::require_ball(y, "y");
    require_same_dim(x, y);
    return detail::make_metric(MetricId::rho, 2.0 * std::asinh(detail::sinh_half_rho_ball(x, y)));
}

inline MetricValue rho_half(const Point& x, const Point& y) {
    detail::require_half(x, "x");
    detail::require_half(y, "y");
    require_same_dim(x, y);
    return detail::make_metric(MetricId::rho, 2.0 * std::asinh(detail::sinh_half_rho_half(x, y)));
}

/// arctan(sinh(rho/2)); a Moebius invariant transform of the hyperbolic
/// metric with values in [0, pi/2).
inline MetricValue rho_star(const DomainSpec& domain, const Point& x, const Point& y) {
    double sh = 0;
    switch (domain.kind()) {
        case DomainKind::unit_ball:
            detail::require_ball(x, "x");
            detail::require_ball(y, "y");
            sh = detail::sinh_half_rho_ball(x, y);
            break;
        case DomainKind::half_space:
            detail::require_half(x, "x");
            detail::require_half(y, "y");
            sh = detail::sinh_half_rho_half(x, y);
            break;
        default:
            fail(errc::unsupported_domain, "rho_star needs the unit ball or the half-space");
    }
    require_same_dim(x, y);
    return detail::make_metric(MetricId::rho_star, std::atan(sh));
}

/// Distance ratio metric log(1 + |x-y| / min boundary distance) in the
/// canonical domains.
inline MetricValue j_metric(const DomainSpec& domain, const Point& x, const Point& y) {
    if (domain.kind() == DomainKind::generic2d)
        fail(errc::unsupported_domain, "the distance ratio metric is provided for canonical domains only");
    require_in_domain(domain, x, "x");
    require_in_domain(domain, y, "y");
    require_same_dim(x, y);
    double dmin = std::min(domain.boundary_distance(x), domain.boundary_distance(y));
    return detail::make_metric(MetricId::j, std::log1p(dist(x, y) / dmin));
}

// ---------------------------------------------------------------------------
// Visual angle metric: punctured space, unit ball, upper half-space.

inline MetricValue v_punctured(const Point& x, const Point& y) {
    require_finite(x, "x");
    require_finite(y, "y");
    require_same_dim(x, y);
    if (x.norm_sq() == 0.0 || y.norm_sq() == 0.0)
        fail(errc::outside_domain, "points of the punctured space must be nonzero");
    if (x == y) return detail::make_metric(MetricId::v, 0.0);
    return detail::make_metric(MetricId::v, detail::angle_nd(x, Point::zero(x.dim()), y));
}

/// Quasihyperbolic metric of the punctured space,
/// sqrt(angle^2 + log^2(|y|/|x|)).
inline MetricValue k_punctured(const Point& x, const Point& y) {
    require_finite(x, "x");
    require_finite(y, "y");
    require_same_dim(x, y);
    if (x.norm_sq() == 0.0 || y.norm_sq() == 0.0)
        fail(errc::outside_domain, "points of the punctured space must be nonzero");
    double ang = (x == y) ? 0.0 : detail::angle_nd(x, Point::zero(x.dim()), y);
    double rad = std::log(y.norm() / x.norm());
    return detail::make_metric(MetricId::k, std::hypot(ang, rad));
}

namespace detail {

inline double v_ball_2d(V2 x, V2 y) {
    double rx = norm(x), ry = norm(y);
    if (rx < 1e-300 || ry < 1e-300) return std::asin(std::max(rx, ry));
    if (std::abs(rx - ry) <= 1e-14 * std::max(rx, ry)) {
        // Equal norms: half the central angle feeds the closed form directly.
        double theta = 0.5 * angle2(x, V2{0, 0}, y);
        return 2.0 * std::atan2(rx * std::sin(theta), 1.0 - rx * std::cos(theta));
    }
    TangentCircle tc = tangent_circle_ball(pt(x), pt(y));
    return angle2(x, v2(tc.tangency), y);
}

inline double v_half_2d(double x1, double x2, double y1, double y2) {
    if (x1 == y1 && x2 == y2) return 0.0;
    // The branch formula arccos((2 sqrt(x2 y2)|x-y| + (x1-y1)(x2+y2)) /
    // ((x2+y2)|x-y| + 2 sqrt(x2 y2)(x1-y1))) collapses in half-angle form:
    // den -+ num factor exactly, giving
    //   tan(v/2) = (|x-y| + |x1-y1|) / (sqrt(x2) + sqrt(y2))^2,
    // which also covers the equal-height branch and is stable everywhere.
    double d = std::hypot(x1 - y1, x2 - y2);
    double s = std::sqrt(x2) + std::sqrt(y2);
    return 2.0 * std::atan2(d + std::abs(x1 - y1), s * s);
}

// Orthonormal coordinates of the plane spanned by x and y (any plane
// containing their common line when they are collinear with the origin).
inline std::pair<V2, V2> plane_coordinates(const Point& x, const Point& y) {
    int n = x.dim();
    const Point& base = x.norm_sq() >= y.norm_sq() ? x : y;
    double nb = base.norm();
    if (nb == 0.0) return {V2{0, 0}, V2{0, 0}};
    Point e1 = (1.0 / nb) * base;
    const Point& other = (&base == &x) ? y : x;
    Point res = other - dot(other, e1) * e1;
    Point e2 = Point::zero(n);
    double nr = res.norm();
    if (nr > 1e-13 * other.norm()) {
        e2 = (1.0 / nr) * res;
    } else {
        // Collinear: any direction orthogonal to e1.
        int axis = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(e1[i]) < std::abs(e1[axis])) axis = i;
        Point cand = Point::unit(n, axis) - e1[axis] * e1;
        e2 = (1.0 / cand.norm()) * cand;
    }
    V2 px{dot(x, e1), dot(x, e2)};
    V2 py{dot(y, e1), dot(y, e2)};
    return {px, py};
}

} // namespace detail

/// Visual angle metric of the unit ball.  Planar case via the tangent-circle
/// construction (angle at the point of tangency); higher dimensions reduce
/// to the plane spanned by the two points.
inline MetricValue v_ball(const Point& x, const Point& y) {
    detail::require_ball(x, "x");
    detail::require_ball(y, "y");
    require_same_dim(x, y);
    if (x == y) return detail::make_metric(MetricId::v, 0.0);
    if (x.dim() == 2) return detail::make_metric(MetricId::v, detail::v_ball_2d(detail::v2(x), detail::v2(y)));
    auto [px, py] = detail::plane_coordinates(x, y);
    return detail::make_metric(MetricId::v, detail::v_ball_2d(px, py));
}

/// Visual angle metric of the upper half-space, from the closed branch
/// formulas after normalizing labels by the invariances (swap, horizontal
/// reflection); higher dimensions reduce to the vertical plane through the
/// two points.
inline MetricValue v_half(const Point& x, const Point& y) {
    detail::require_half(x, "x");
    detail::require_half(y, "y");
    require_same_dim(x, y);
    int n = x.dim();
    if (n == 2) return detail::make_metric(MetricId::v, detail::v_half_2d(x[0], x[1], y[0], y[1]));
    double h = 0;
    for (int i = 0; i + 1 < n; ++i) {
        double d = y[i] - x[i];
        h += d * d;
    }
    return detail::make_metric(MetricId::v, detail::v_half_2d(0.0, x[n - 1], std::sqrt(h), y[n - 1]));
}

/// Closed-form visual angle metric dispatcher for the canonical domains.
inline MetricValue v_closed(const DomainSpec& domain, const Point& x, const Point& y) {
    switch (domain.kind()) {
        case DomainKind::unit_ball: return v_ball(x, y);
        case DomainKind::half_space: return v_half(x, y);
        case DomainKind::punctured_space: return v_punctured(x, y);
        default: fail(errc::unsupported_domain, "no closed form for generic boundaries");
    }
}

} // namespace vam
