#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "vam/error.hpp"
#include "vam/point.hpp"

namespace vam {

enum class DomainKind { unit_ball, half_space, punctured_space, generic2d };

/// Boundary pieces of a generic planar domain.
struct PolylinePiece {
    std::vector<detail::V2> pts;
    bool closed = false;
};

struct CirclePiece {
    detail::V2 center;
    double radius = 1.0;
};

using BoundaryPiece = std::variant<PolylinePiece, CirclePiece>;

namespace detail {

inline double point_segment_dist(V2 p, V2 a, V2 b) {
    V2 ab = b - a;
    double len2 = norm_sq(ab);
    if (len2 == 0) return dist(p, a);
    double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + t * ab);
}

// Do the open segment (x,y) and the closed segment [a,b] intersect?
inline bool open_segment_hits_segment(V2 x, V2 y, V2 a, V2 b) {
    V2 d = y - x, e = b - a;
    double denom = cross(d, e);
    V2 ax = a - x;
    if (std::abs(denom) < 1e-30) {
        // Parallel: overlap only if collinear.
        if (std::abs(cross(d, ax)) > 1e-14 * (norm(d) * (norm(ax) + norm(e)) + 1e-300)) return false;
        double len2 = norm_sq(d);
        double t0 = dot(ax, d) / len2;
        double t1 = dot(b - x, d) / len2;
        if (t0 > t1) std::swap(t0, t1);
        return t1 > 1e-12 && t0 < 1.0 - 1e-12;
    }
    double t = cross(ax, e) / denom;
    double s = cross(ax, d) / denom;
    return t > 1e-12 && t < 1.0 - 1e-12 && s >= -1e-12 && s <= 1.0 + 1e-12;
}

inline bool open_segment_hits_circle(V2 x, V2 y, V2 c, double r) {
    V2 d = y - x, f = x - c;
    double a = norm_sq(d);
    if (a == 0) return false;
    double b = 2.0 * dot(f, d);
    double q = norm_sq(f) - r * r;
    double disc = b * b - 4 * a * q;
    if (disc < 0) return false;
    double sq = std::sqrt(disc);
    double t1 = (-b - sq) / (2 * a), t2 = (-b + sq) / (2 * a);
    auto inside = [](double t) { return t > 1e-12 && t < 1.0 - 1e-12; };
    return inside(t1) || inside(t2);
}

} // namespace detail

/// A domain of extended Euclidean space: one of the three canonical domains
/// (any dimension >= 2) or a generic planar domain given by its boundary.
class DomainSpec {
public:
    static DomainSpec unit_ball(int n) { return DomainSpec(DomainKind::unit_ball, n); }
    static DomainSpec half_space(int n) { return DomainSpec(DomainKind::half_space, n); }
    static DomainSpec punctured_space(int n) { return DomainSpec(DomainKind::punctured_space, n); }

    /// Closed polygon interior.  Vertices are normalized to counterclockwise
    /// order; at least three vertices, not all collinear.
    static DomainSpec polygon(std::vector<std::array<double, 2>> vertices) {
        if (vertices.size() >= 2 && vertices.front() == vertices.back()) vertices.pop_back();
        if (vertices.size() < 3) fail(errc::invalid_parameter, "polygon needs at least 3 vertices");
        std::vector<detail::V2> v;
        v.reserve(vertices.size());
        for (const auto& p : vertices) {
            if (!std::isfinite(p[0]) || !std::isfinite(p[1]))
                fail(errc::invalid_parameter, "polygon vertices must be finite");
            v.push_back({p[0], p[1]});
        }
        double area2 = 0;
        for (size_t i = 0; i < v.size(); ++i) area2 += detail::cross(v[i], v[(i + 1) % v.size()]);
        double scale = 0;
        for (const auto& p : v) scale = std::max(scale, std::abs(p.x) + std::abs(p.y));
        if (std::abs(area2) < 1e-12 * scale * scale + 1e-300)
            fail(errc::invalid_parameter, "polygon vertices are collinear");
        if (area2 < 0) std::reverse(v.begin(), v.end());
        DomainSpec d(DomainKind::generic2d, 2);
        d.pieces_.push_back(PolylinePiece{v, true});
        d.polygon_ = std::move(v);
        return d;
    }

    static DomainSpec generic2d(std::vector<BoundaryPiece> pieces) {
        if (pieces.empty()) fail(errc::invalid_parameter, "boundary must be nonempty");
        for (const auto& p : pieces) {
            if (const auto* c = std::get_if<CirclePiece>(&p)) {
                if (!(c->radius > 0)) fail(errc::invalid_parameter, "circle radius must be positive");
            } else {
                const auto& pl = std::get<PolylinePiece>(p);
                if (pl.pts.size() < 2) fail(errc::invalid_parameter, "polyline needs at least 2 points");
            }
        }
        DomainSpec d(DomainKind::generic2d, 2);
        d.pieces_ = std::move(pieces);
        return d;
    }

    DomainKind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool is_polygon() const { return !polygon_.empty(); }
    const std::vector<detail::V2>& polygon_vertices() const { return polygon_; }
    const std::vector<BoundaryPiece>& pieces() const { return pieces_; }

    /// Open-domain membership.  For raw boundary lists (no polygon interior)
    /// this is only a boundary-proximity check.
    bool contains(const Point& p) const {
        if (p.is_infinity()) return false;
        switch (kind_) {
            case DomainKind::unit_ball:
                return p.dim() == dim_ && p.norm() < 1.0;
            case DomainKind::half_space:
                return p.dim() == dim_ && p[p.dim() - 1] > 0.0;
            case DomainKind::punctured_space:
                return p.dim() == dim_ && p.norm_sq() > 0.0;
            case DomainKind::generic2d: {
                if (p.dim() != 2) return false;
                if (!polygon_.empty()) return polygon_contains(detail::v2(p));
                return boundary_distance(p) > 0;
            }
        }
        return false;
    }

    double boundary_distance(const Point& p) const {
        require_finite(p, "point");
        if (p.dim() != dim_) fail(errc::dimension_mismatch, "point dimension does not match domain");
        switch (kind_) {
            case DomainKind::unit_ball:
                return std::abs(1.0 - p.norm());
            case DomainKind::half_space:
                return std::abs(p[p.dim() - 1]);
            case DomainKind::punctured_space:
                return p.norm();
            case DomainKind::generic2d: {
                detail::V2 q = detail::v2(p);
                double best = std::numeric_limits<double>::infinity();
                for (const auto& piece : pieces_) {
                    if (const auto* c = std::get_if<CirclePiece>(&piece)) {
                        best = std::min(best, std::abs(detail::dist(q, c->center) - c->radius));
                    } else {
                        const auto& pl = std::get<PolylinePiece>(piece);
                        size_t m = pl.pts.size();
                        size_t segs = pl.closed ? m : m - 1;
                        for (size_t i = 0; i < segs; ++i)
                            best = std::min(best, detail::point_segment_dist(q, pl.pts[i], pl.pts[(i + 1) % m]));
                    }
                }
                return best;
            }
        }
        return 0;
    }

    /// True when the boundary is a proper subset of a line (the domain's
    /// visual angle function is then only a pseudometric).
    bool boundary_in_line() const {
        switch (kind_) {
            case DomainKind::unit_ball: return false;
            case DomainKind::half_space: return false; // the whole line, not a proper subset
            case DomainKind::punctured_space: return true;
            case DomainKind::generic2d: {
                std::vector<detail::V2> pts;
                for (const auto& piece : pieces_) {
                    if (std::holds_alternative<CirclePiece>(piece)) return false;
                    const auto& pl = std::get<PolylinePiece>(piece);
                    pts.insert(pts.end(), pl.pts.begin(), pl.pts.end());
                }
                if (pts.size() < 3) return true;
                detail::V2 a = pts[0], d{0, 0};
                size_t k = 1;
                for (; k < pts.size(); ++k) {
                    d = pts[k] - a;
                    if (detail::norm(d) > 1e-14) break;
                }
                if (k == pts.size()) return true;
                double scale = 0;
                for (const auto& p : pts) scale = std::max(scale, detail::dist(p, a));
                for (const auto& p : pts)
                    if (std::abs(detail::cross(d, p - a)) > 1e-12 * detail::norm(d) * scale) return false;
                return true; // finitely many segments never fill the whole line
            }
        }
        return false;
    }

    /// True when the boundary lies on a single line or circle (definiteness
    /// of the double angle metric is then not asserted).
    bool boundary_on_line_or_circle() const {
        switch (kind_) {
            case DomainKind::unit_ball: return true;
            case DomainKind::half_space: return true;
            case DomainKind::punctured_space: return true;
            case DomainKind::generic2d:
                if (pieces_.size() == 1 && std::holds_alternative<CirclePiece>(pieces_[0])) return true;
                return boundary_in_line();
        }
        return false;
    }

    bool unbounded() const {
        return kind_ == DomainKind::half_space || kind_ == DomainKind::punctured_space;
    }

    /// Does the open segment (x, y) meet the boundary?
    bool segment_hits_boundary(const Point& x, const Point& y) const {
        if (kind_ != DomainKind::generic2d) {
            if (kind_ == DomainKind::punctured_space) {
                double slack = 1e-12 * (x.norm() + y.norm());
                return x.norm() + y.norm() <= dist(x, y) + slack;
            }
            return false; // ball and half-space are convex
        }
        detail::V2 a = detail::v2(x), b = detail::v2(y);
        for (const auto& piece : pieces_) {
            if (const auto* c = std::get_if<CirclePiece>(&piece)) {
                if (detail::open_segment_hits_circle(a, b, c->center, c->radius)) return true;
            } else {
                const auto& pl = std::get<PolylinePiece>(piece);
                size_t m = pl.pts.size();
                size_t segs = pl.closed ? m : m - 1;
                for (size_t i = 0; i < segs; ++i)
                    if (detail::open_segment_hits_segment(a, b, pl.pts[i], pl.pts[(i + 1) % m])) return true;
            }
        }
        return false;
    }

private:
    DomainSpec(DomainKind kind, int n) : kind_(kind), dim_(n) {
        if (n < 2) fail(errc::invalid_parameter, "domain dimension must be at least 2");
        if (kind == DomainKind::generic2d && n != 2)
            fail(errc::invalid_parameter, "generic boundaries are planar only");
    }

    bool polygon_contains(detail::V2 p) const {
        bool inside = false;
        size_t m = polygon_.size();
        for (size_t i = 0, j = m - 1; i < m; j = i++) {
            const detail::V2& a = polygon_[i];
            const detail::V2& b = polygon_[j];
            if ((a.y > p.y) != (b.y > p.y)) {
                double xint = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if (p.x < xint) inside = !inside;
            }
        }
        return inside;
    }

    DomainKind kind_;
    int dim_;
    std::vector<BoundaryPiece> pieces_;   // generic2d only
    std::vector<detail::V2> polygon_;     // nonempty when built from a polygon
};

inline void require_in_domain(const DomainSpec& d, const Point& p, const char* what) {
    if (!d.contains(p)) fail(errc::outside_domain, std::string(what) + " lies outside the domain");
}

} // namespace vam
