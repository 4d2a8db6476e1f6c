#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "vam/error.hpp"

namespace vam {

/// A point of extended Euclidean space: a finite vector of dimension >= 2,
/// or the single point at infinity.  Infinity is a distinct state, never an
/// IEEE infinity component, so equality tests and the chordal formulas can
/// branch exactly.
class Point {
public:
    Point(std::initializer_list<double> coords) : coords_(coords) { validate(); }
    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

    static Point infinity() {
        Point p;
        p.infinite_ = true;
        return p;
    }

    static Point zero(int n) { return Point(std::vector<double>(static_cast<size_t>(n), 0.0)); }

    static Point unit(int n, int axis) {
        std::vector<double> c(static_cast<size_t>(n), 0.0);
        c.at(static_cast<size_t>(axis)) = 1.0;
        return Point(std::move(c));
    }

    bool is_infinity() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    int dim() const { return static_cast<int>(coords_.size()); }

    double operator[](int i) const { return coords_[static_cast<size_t>(i)]; }
    const std::vector<double>& coords() const { return coords_; }

    double norm_sq() const {
        double s = 0;
        for (double c : coords_) s += c * c;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

private:
    Point() = default;

    void validate() const {
        if (coords_.size() < 2) fail(errc::invalid_parameter, "point dimension must be at least 2");
        for (double c : coords_)
            if (!std::isfinite(c)) fail(errc::invalid_parameter, "point coordinates must be finite");
    }

    std::vector<double> coords_;
    bool infinite_ = false;
};

inline void require_finite(const Point& p, const char* what) {
    if (p.is_infinity()) fail(errc::invalid_parameter, std::string(what) + " must be finite");
}

inline void require_same_dim(const Point& a, const Point& b) {
    if (a.is_finite() && b.is_finite() && a.dim() != b.dim())
        fail(errc::dimension_mismatch, "points have different dimensions");
}

inline Point operator+(const Point& a, const Point& b) {
    require_finite(a, "operand");
    require_finite(b, "operand");
    require_same_dim(a, b);
    std::vector<double> c(a.coords());
    for (int i = 0; i < b.dim(); ++i) c[static_cast<size_t>(i)] += b[i];
    return Point(std::move(c));
}

inline Point operator-(const Point& a, const Point& b) {
    require_finite(a, "operand");
    require_finite(b, "operand");
    require_same_dim(a, b);
    std::vector<double> c(a.coords());
    for (int i = 0; i < b.dim(); ++i) c[static_cast<size_t>(i)] -= b[i];
    return Point(std::move(c));
}

inline Point operator*(double s, const Point& p) {
    require_finite(p, "operand");
    std::vector<double> c(p.coords());
    for (double& v : c) v *= s;
    return Point(std::move(c));
}

inline double dot(const Point& a, const Point& b) {
    require_finite(a, "operand");
    require_finite(b, "operand");
    require_same_dim(a, b);
    double s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double dist(const Point& a, const Point& b) {
    require_finite(a, "operand");
    require_finite(b, "operand");
    require_same_dim(a, b);
    double s = 0;
    for (int i = 0; i < a.dim(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// An angle in [0, pi].  Construction clamps sub-nanoradian excursions and
/// rejects anything further out.
class Angle {
public:
    explicit Angle(double radians) : rad_(radians) {
        constexpr double slack = 1e-12;
        if (!(rad_ >= -slack && rad_ <= kPi + slack))
            fail(errc::invalid_parameter, "angle must lie in [0, pi]");
        if (rad_ < 0) rad_ = 0;
        if (rad_ > kPi) rad_ = kPi;
    }

    double radians() const { return rad_; }

    friend bool operator==(const Angle& a, const Angle& b) { return a.rad_ == b.rad_; }

private:
    static constexpr double kPi = 3.14159265358979323846;
    double rad_;
};

namespace detail {

constexpr double pi = 3.14159265358979323846;

struct V2 {
    double x = 0, y = 0;
};

inline V2 operator+(V2 a, V2 b) { return {a.x + b.x, a.y + b.y}; }
inline V2 operator-(V2 a, V2 b) { return {a.x - b.x, a.y - b.y}; }
inline V2 operator*(double s, V2 a) { return {s * a.x, s * a.y}; }
inline double dot(V2 a, V2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(V2 a, V2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(V2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(V2 a) { return std::sqrt(norm_sq(a)); }
inline double dist(V2 a, V2 b) { return norm(a - b); }

inline V2 v2(const Point& p) {
    if (p.is_infinity() || p.dim() != 2) fail(errc::dimension_mismatch, "expected a finite planar point");
    return {p[0], p[1]};
}

inline Point pt(V2 v) { return Point{v.x, v.y}; }

inline std::complex<double> cx(V2 v) { return {v.x, v.y}; }
inline V2 v2(std::complex<double> z) { return {z.real(), z.imag()}; }

// Angle at z between x and y, accurate for angles near 0 and pi.
// cross(x-z, y-x) equals cross(x-z, y-z) exactly.
inline double angle2(V2 x, V2 z, V2 y) {
    V2 u = x - z, v = y - z, d = y - x;
    return std::atan2(std::abs(cross(u, d)), dot(u, v));
}

// Same in arbitrary dimension (Kahan's formula).
inline double angle_nd(const Point& x, const Point& z, const Point& y) {
    Point u = x - z, v = y - z;
    double nu = u.norm(), nv = v.norm();
    double s2 = 0, c2 = 0;
    for (int i = 0; i < u.dim(); ++i) {
        double w = u[i] * nv - v[i] * nu;
        double q = u[i] * nv + v[i] * nu;
        s2 += w * w;
        c2 += q * q;
    }
    return 2.0 * std::atan2(std::sqrt(s2), std::sqrt(c2));
}

} // namespace detail

} // namespace vam
