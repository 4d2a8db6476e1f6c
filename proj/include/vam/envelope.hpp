#pragma once

#include <algorithm>
#include <cmath>

#include "vam/error.hpp"
#include "vam/point.hpp"
#include "vam/random.hpp"

namespace vam {

namespace detail {

// w strictly between x and y on the segment [x,y]: perpendicular offset
// below 1e-14 relative (a focal-sum test would admit sqrt-scale offsets).
inline bool on_open_segment(const Point& x, const Point& y, const Point& w) {
    if (w == x || w == y) return false;
    Point u = y - x, v = w - x;
    double uu = dot(u, u), uv = dot(u, v);
    if (uv <= 0.0 || uv >= uu) return false;
    Point rej = v - (uv / uu) * u; // componentwise, immune to the cancellation in |v|^2 - uv^2/uu
    return rej.norm_sq() <= 1e-28 * dot(v, v);
}

} // namespace detail

/// Angle at vertex z in [0, pi], the arccos of the clamped normalized inner
/// product of (x - z) and (y - z).  Returns 0 when x == y.
inline Angle angle_at(const Point& x, const Point& z, const Point& y) {
    require_finite(x, "x");
    require_finite(z, "z");
    require_finite(y, "y");
    require_same_dim(x, z);
    require_same_dim(z, y);
    if (x == y) return Angle(0.0);
    if (z == x || z == y) fail(errc::degenerate_vertex, "angle vertex coincides with an endpoint");
    Point u = x - z, v = y - z;
    double c = dot(u, v) / (u.norm() * v.norm());
    if (std::abs(c) > 1.0 + 1e-9)
        fail(errc::internal, "cosine clamp exceeded tolerance");
    c = std::clamp(c, -1.0, 1.0);
    return Angle(std::acos(c));
}

/// Membership in the alpha-envelope of (x, y): the set of w whose viewing
/// angle of the segment [x, y] is at least alpha.  Points strictly between
/// x and y see the segment at angle pi; the 0-envelope is all of space.
inline bool in_envelope_E(const Point& x, const Point& y, Angle alpha, const Point& w) {
    require_finite(x, "x");
    require_finite(y, "y");
    require_finite(w, "w");
    if (x == y) fail(errc::invalid_parameter, "envelope requires x != y");
    if (alpha.radians() == 0.0) return true;
    if (w == x || w == y) fail(errc::degenerate_vertex, "test point coincides with a focus");
    if (detail::on_open_segment(x, y, w)) return true;
    if (alpha.radians() == detail::pi) return false; // the pi-envelope is exactly the segment
    return angle_at(x, w, y).radians() >= alpha.radians();
}

/// Membership in the c-envelope of (x, y): the filled ellipsoid
/// |x - z| + |y - z| <= c with foci x and y.
inline bool in_envelope_F(const Point& x, const Point& y, double c, const Point& z) {
    require_finite(x, "x");
    require_finite(y, "y");
    require_finite(z, "z");
    if (x == y) fail(errc::invalid_parameter, "envelope requires x != y");
    if (c < dist(x, y)) fail(errc::invalid_parameter, "sum bound smaller than the focal distance");
    return dist(x, z) + dist(y, z) <= c;
}

/// Samples the alpha-envelope and checks every sampled point against the
/// enclosing ellipsoid with c = |x - y| / sin(alpha / 2).  Probabilistic:
/// returns true when no counterexample was found.
inline bool envelope_inclusion_check(const Point& x, const Point& y, Angle alpha, int samples,
                                     std::uint64_t seed = 0x5eed5eedULL) {
    require_finite(x, "x");
    require_finite(y, "y");
    if (x == y) fail(errc::invalid_parameter, "envelope requires x != y");
    double a = alpha.radians();
    if (!(a > 0.0 && a < detail::pi)) fail(errc::out_of_interval, "alpha must lie in (0, pi)");
    if (samples <= 0) fail(errc::invalid_parameter, "sample count must be positive");

    double d = dist(x, y);
    double c = d / std::sin(a / 2.0);
    double grace = c * (1.0 + 1e-9);
    int n = x.dim();
    Point m = 0.5 * (x + y);
    double half = d / std::sin(a) + d; // every envelope circle has radius <= d / (2 sin a)

    // Interior segment points belong to every envelope; check them first.
    for (int k = 1; k < 32; ++k) {
        double t = static_cast<double>(k) / 32.0;
        Point w = x + t * (y - x);
        if (dist(x, w) + dist(y, w) > grace) return false;
    }

    Rng rng(seed);
    long accepted = 0, attempts = 0, max_attempts = 64L * samples;
    while (accepted < samples && attempts < max_attempts) {
        ++attempts;
        std::vector<double> cs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) cs[static_cast<size_t>(i)] = m[i] + rng.uniform(-half, half);
        Point w(std::move(cs));
        if (w == x || w == y) continue;
        bool inside = detail::on_open_segment(x, y, w) ||
                      angle_at(x, w, y).radians() >= a;
        if (!inside) continue;
        ++accepted;
        if (dist(x, w) + dist(y, w) > grace) return false;
    }
    return true;
}

} // namespace vam
