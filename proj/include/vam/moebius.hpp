#pragma once

#include <cmath>
#include <utility>
#include <variant>
#include <vector>

#include "vam/envelope.hpp"
#include "vam/error.hpp"
#include "vam/point.hpp"

namespace vam {

/// Reflection in the hyperplane { x : x . normal = offset }.
struct HyperplaneReflection {
    Point normal;
    double offset = 0.0;
};

/// Inversion in the sphere of the given center and radius.
struct SphereInversion {
    Point center;
    double radius = 1.0;
};

using Generator = std::variant<HyperplaneReflection, SphereInversion>;

inline Point apply(const HyperplaneReflection& g, const Point& x) {
    if (x.is_infinity()) return x;
    double s = 2.0 * (dot(x, g.normal) - g.offset) / g.normal.norm_sq();
    return x - s * g.normal;
}

inline Point apply(const SphereInversion& g, const Point& x) {
    if (x.is_infinity()) return g.center;
    Point d = x - g.center;
    double n2 = d.norm_sq();
    if (n2 == 0.0) return Point::infinity();
    return g.center + (g.radius * g.radius / n2) * d;
}

/// A Moebius transformation of extended space, held as the ordered list of
/// reflections and inversions that generate it (applied left to right).
/// The inverse is the reversed list, every generator being an involution.
class MoebiusMap {
public:
    MoebiusMap(int dim, std::vector<Generator> generators)
        : dim_(dim), gens_(std::move(generators)) {
        if (dim_ < 2) fail(errc::invalid_parameter, "map dimension must be at least 2");
        for (const auto& g : gens_) {
            if (const auto* h = std::get_if<HyperplaneReflection>(&g)) {
                if (h->normal.dim() != dim_) fail(errc::dimension_mismatch, "generator dimension mismatch");
                if (h->normal.norm_sq() == 0.0) fail(errc::invalid_parameter, "hyperplane normal must be nonzero");
            } else {
                const auto& s = std::get<SphereInversion>(g);
                if (s.center.dim() != dim_) fail(errc::dimension_mismatch, "generator dimension mismatch");
                if (!(s.radius > 0.0)) fail(errc::invalid_parameter, "inversion radius must be positive");
            }
        }
    }

    static MoebiusMap identity(int dim) { return MoebiusMap(dim, {}); }

    static MoebiusMap translation(const Point& v) {
        if (v.norm_sq() == 0.0) return identity(v.dim());
        return MoebiusMap(v.dim(), {Generator{HyperplaneReflection{v, 0.0}},
                                    Generator{HyperplaneReflection{v, v.norm_sq() / 2.0}}});
    }

    static MoebiusMap scaling(int dim, double factor) {
        if (!(factor > 0.0)) fail(errc::invalid_parameter, "scaling factor must be positive");
        if (factor == 1.0) return identity(dim);
        return MoebiusMap(dim, {Generator{SphereInversion{Point::zero(dim), 1.0}},
                                Generator{SphereInversion{Point::zero(dim), std::sqrt(factor)}}});
    }

    int dim() const { return dim_; }
    const std::vector<Generator>& generators() const { return gens_; }

    Point operator()(const Point& x) const {
        if (x.is_finite() && x.dim() != dim_) fail(errc::dimension_mismatch, "point dimension mismatch");
        Point y = x;
        for (const auto& g : gens_)
            y = std::visit([&](const auto& gen) { return apply(gen, y); }, g);
        return y;
    }

    MoebiusMap inverse() const {
        std::vector<Generator> rev(gens_.rbegin(), gens_.rend());
        return MoebiusMap(dim_, std::move(rev));
    }

    MoebiusMap then(const MoebiusMap& next) const {
        if (next.dim_ != dim_) fail(errc::dimension_mismatch, "composed maps must share a dimension");
        std::vector<Generator> all = gens_;
        all.insert(all.end(), next.gens_.begin(), next.gens_.end());
        return MoebiusMap(dim_, std::move(all));
    }

private:
    int dim_;
    std::vector<Generator> gens_;
};

/// The Moebius automorphism of the unit ball taking a to the origin and
/// fixing +/- a/|a|: the inversion in the sphere orthogonal to the unit
/// sphere at a/|a|^2 followed by the reflection in the hyperplane through
/// the origin normal to a.
inline MoebiusMap ball_to_origin(const Point& a) {
    require_finite(a, "a");
    double r2 = a.norm_sq();
    if (r2 >= 1.0) fail(errc::invalid_parameter, "base point must lie in the open unit ball");
    if (r2 < 1e-300) return MoebiusMap::identity(a.dim());
    Point a_star = (1.0 / r2) * a;
    double radius = std::sqrt(1.0 / r2 - 1.0);
    return MoebiusMap(a.dim(), {Generator{SphereInversion{a_star, radius}},
                                Generator{HyperplaneReflection{a, 0.0}}});
}

/// The planar Cayley map z -> (z - i)/(z + i) from the upper half-plane onto
/// the unit disk, as an inversion in the circle of radius sqrt(2) about -i
/// followed by the reflection in the line y = -x.
inline MoebiusMap cayley_half_to_ball() {
    return MoebiusMap(2, {Generator{SphereInversion{Point{0.0, -1.0}, std::sqrt(2.0)}},
                          Generator{HyperplaneReflection{Point{1.0, 1.0}, 0.0}}});
}

/// Real-coefficient map z -> (a z + b)/(c z + d) of the upper half-plane
/// onto itself (ad - bc > 0), factored into generators.
inline MoebiusMap half_plane_map(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (!(det > 0.0)) fail(errc::invalid_parameter, "half-plane map needs ad - bc > 0");
    double s = std::sqrt(det);
    a /= s; b /= s; c /= s; d /= s;
    if (c == 0.0) {
        // z -> a^2 z + a b
        return MoebiusMap::scaling(2, a / d).then(MoebiusMap::translation(Point{b / d, 0.0}));
    }
    // z -> a/c - (1/c^2) / (z + d/c)
    MoebiusMap neg_inverse(2, {Generator{SphereInversion{Point::zero(2), 1.0}},
                               Generator{HyperplaneReflection{Point{1.0, 0.0}, 0.0}}});
    return MoebiusMap::translation(Point{d / c, 0.0})
        .then(neg_inverse)
        .then(MoebiusMap::scaling(2, 1.0 / (c * c)))
        .then(MoebiusMap::translation(Point{a / c, 0.0}));
}

/// Chordal metric of extended space.
inline double chordal(const Point& x, const Point& y) {
    if (x.is_infinity() && y.is_infinity()) return 0.0;
    if (x.is_infinity()) return 1.0 / std::sqrt(1.0 + y.norm_sq());
    if (y.is_infinity()) return 1.0 / std::sqrt(1.0 + x.norm_sq());
    return dist(x, y) / (std::sqrt(1.0 + x.norm_sq()) * std::sqrt(1.0 + y.norm_sq()));
}

/// Absolute (cross) ratio |a,b,c,d| = q(a,c)q(b,d) / (q(a,b)q(c,d)).
inline double absolute_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
    const Point* pts[4] = {&a, &b, &c, &d};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) fail(errc::degenerate_points, "absolute ratio needs distinct points");
    return (chordal(a, c) * chordal(b, d)) / (chordal(a, b) * chordal(c, d));
}

/// Angular characteristic sigma(a,b,c,d) in [0,1].  Computed from chordal
/// distances; the normalizers cancel, so for finite points this equals
/// |a-c||b-d| / (|a-b||c-d| + |a-d||b-c|) and a point at infinity takes the
/// limit value.
inline double angular_characteristic(const Point& a, const Point& b, const Point& c, const Point& d) {
    double den = chordal(a, b) * chordal(c, d) + chordal(a, d) * chordal(b, c);
    if (den == 0.0) fail(errc::degenerate_points, "angular characteristic denominator vanishes");
    return chordal(a, c) * chordal(b, d) / den;
}

/// Circle internally tangent to the domain boundary: center, radius and the
/// point of tangency.
struct TangentCircle {
    Point center;
    double radius = 0.0;
    Point tangency;
};

namespace detail {

// One-dimensional root of g on [lo, hi] with g(lo), g(hi) of opposite sign.
template <class F>
double bisect(F&& g, double lo, double hi) {
    double flo = g(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = g(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

template <class F>
double golden_min(F&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace detail

/// The circle through x and y internally tangent to the unit circle whose
/// center is the larger-norm intersection of the two ellipses
/// { z : |x - z| + |z| = 1 } and { z : |y - z| + |z| = 1 }.  Centers of
/// circles through both points lie on the perpendicular bisector of [x, y],
/// which reduces the intersection to one-dimensional root finding.
inline TangentCircle tangent_circle_ball(const Point& x, const Point& y) {
    require_finite(x, "x");
    require_finite(y, "y");
    if (x.dim() != 2 || y.dim() != 2) fail(errc::dimension_mismatch, "tangent circles are planar");
    if (x == y) fail(errc::coincident_points, "tangent circle needs two distinct points");
    if (x.norm() >= 1.0 || y.norm() >= 1.0) fail(errc::outside_domain, "points must lie in the open unit disk");

    detail::V2 px = detail::v2(x), py = detail::v2(y);
    detail::V2 m = 0.5 * (px + py);
    detail::V2 chord = py - px;
    double half = 0.5 * detail::norm(chord);
    detail::V2 u{-chord.y / (2.0 * half), chord.x / (2.0 * half)};

    auto g = [&](double t) {
        detail::V2 z = m + t * u;
        return std::sqrt(half * half + t * t) + detail::norm(z) - 1.0;
    };

    double tmin = detail::golden_min(g, -2.0, 2.0, 1e-14);
    double gmin = g(tmin);
    double t1, t2;
    if (gmin > -1e-13) {
        t1 = t2 = tmin; // tangential intersection
    } else {
        t1 = detail::bisect(g, -2.0, tmin);
        t2 = detail::bisect(g, tmin, 2.0);
    }

    detail::V2 z1 = m + t1 * u, z2 = m + t2 * u;
    double n1 = detail::norm(z1), n2 = detail::norm(z2);
    detail::V2 z;
    if (std::abs(n1 - n2) > 1e-12) {
        z = n1 > n2 ? z1 : z2;
    } else if (std::abs(z1.y - z2.y) > 1e-12) {
        z = z1.y > z2.y ? z1 : z2;
    } else {
        z = z1.x >= z2.x ? z1 : z2;
    }

    double nz = detail::norm(z);
    TangentCircle out{detail::pt(z), 1.0 - nz, Point::zero(2)};
    if (nz < 1e-12) {
        // Degenerate center: any diameter direction works; pick the bisector.
        out.tangency = detail::pt(u);
    } else {
        out.tangency = detail::pt((1.0 / nz) * z);
    }
    return out;
}

/// The circles through x and y tangent to the boundary line of the upper
/// half-plane, from the closed-form centers; one circle when the points
/// share a height, two otherwise.
inline std::vector<TangentCircle> tangent_circle_half(const Point& x, const Point& y) {
    require_finite(x, "x");
    require_finite(y, "y");
    if (x.dim() != 2 || y.dim() != 2) fail(errc::dimension_mismatch, "tangent circles are planar");
    if (x == y) fail(errc::coincident_points, "tangent circle needs two distinct points");
    double x1 = x[0], x2 = x[1], y1 = y[0], y2 = y[1];
    if (!(x2 > 0.0 && y2 > 0.0)) fail(errc::outside_domain, "points must lie in the open half-plane");

    std::vector<TangentCircle> out;
    if (x2 == y2) {
        double c1 = 0.5 * (x1 + y1);
        double c2 = (4.0 * x2 * x2 + (x1 - y1) * (x1 - y1)) / (8.0 * x2);
        out.push_back(TangentCircle{Point{c1, c2}, c2, Point{c1, 0.0}});
        return out;
    }
    double d = dist(x, y);
    double root = std::sqrt(x2 * y2);
    for (double sgn : {+1.0, -1.0}) {
        double c1 = (x1 * y2 - x2 * y1 + sgn * root * d) / (y2 - x2);
        double c2 = ((x2 + y2) * d * d + sgn * 2.0 * root * (x1 - y1) * d) / (2.0 * (y2 - x2) * (y2 - x2));
        out.push_back(TangentCircle{Point{c1, c2}, c2, Point{c1, 0.0}});
    }
    return out;
}

} // namespace vam
