#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "vam/domain.hpp"
#include "vam/error.hpp"
#include "vam/metrics.hpp"
#include "vam/moebius.hpp"
#include "vam/point.hpp"

namespace vam {

struct SamplerOptions {
    int coarse_count = 4096;
    double refine_tolerance = 1e-10;
    std::optional<bool> include_infinity; // defaults per domain when unset
    int refine_seeds = 8;
    int pair_axis_count = 0;              // 0: derived from coarse_count
};

namespace detail {

template <class F>
double golden_max(F&& f, double lo, double hi, double tol) {
    auto neg = [&](double u) { return -f(u); };
    return golden_min(neg, lo, hi, tol);
}

// One parametrized boundary piece.  Parameters live in [0, 1]; circles are
// periodic, unbounded lines are folded in by a tangent map around a
// query-dependent origin and scale.
struct Piece {
    enum class Kind { circle, segment, line };
    Kind kind = Kind::segment;
    V2 a{}, b{};       // circle center / segment endpoints / line origin+direction
    double radius = 0; // circle
    double scale = 1;  // line
    double weight = 1;

    static constexpr double line_eps = 1e-7;

    V2 at(double u) const {
        switch (kind) {
            case Kind::circle: {
                double t = 2.0 * pi * u;
                return a + radius * V2{std::cos(t), std::sin(t)};
            }
            case Kind::segment:
                return a + std::clamp(u, 0.0, 1.0) * (b - a);
            case Kind::line: {
                double v = std::clamp(u, line_eps, 1.0 - line_eps);
                return a + scale * std::tan(pi * (v - 0.5)) * b;
            }
        }
        return a;
    }

    bool periodic() const { return kind == Kind::circle; }

    double lo() const { return kind == Kind::line ? line_eps : 0.0; }
    double hi() const { return kind == Kind::line ? 1.0 - line_eps : 1.0; }

    // Parameter of the boundary point nearest to p.
    double project(V2 p) const {
        switch (kind) {
            case Kind::circle: {
                V2 d = p - a;
                if (norm(d) < 1e-300) return 0.0;
                double t = std::atan2(d.y, d.x) / (2.0 * pi);
                return t < 0 ? t + 1.0 : t;
            }
            case Kind::segment: {
                V2 ab = b - a;
                double len2 = norm_sq(ab);
                if (len2 == 0) return 0.0;
                return std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
            }
            case Kind::line: {
                double t = dot(p - a, b);
                return 0.5 + std::atan(t / scale) / pi;
            }
        }
        return 0.0;
    }
};

struct PieceSet {
    std::vector<Piece> pieces;
    std::vector<V2> isolated; // boundary points that are not curves
};

struct BoundarySample {
    int piece = -1; // -1: isolated point
    double u = 0;
    V2 z{};
};

} // namespace detail

/// Evaluates boundary suprema: coarse samples over every boundary piece,
/// then golden-section refinement around the best seeds and around the
/// projections of the query points.
class BoundarySampler {
public:
    explicit BoundarySampler(DomainSpec domain, SamplerOptions opts = {})
        : domain_(std::move(domain)), opts_(opts) {
        if (opts_.coarse_count < 16) fail(errc::invalid_parameter, "coarse count must be at least 16");
        if (!(opts_.refine_tolerance > 0)) fail(errc::invalid_parameter, "refine tolerance must be positive");
        if (opts_.refine_seeds < 1) opts_.refine_seeds = 1;
        if (opts_.pair_axis_count <= 0)
            opts_.pair_axis_count = std::max(48, static_cast<int>(std::lround(std::sqrt(double(opts_.coarse_count)))));
        include_inf_ = opts_.include_infinity.value_or(domain_.unbounded());
    }

    const DomainSpec& domain() const { return domain_; }
    const SamplerOptions& options() const { return opts_; }
    bool include_infinity() const { return include_inf_; }

    /// Warning flags carried into results: the visual angle function is only
    /// a pseudometric over a boundary inside a line; definiteness of the
    /// double angle variant is not asserted over a boundary inside a line or
    /// circle.
    bool pseudometric_warning_v() const { return domain_.boundary_in_line(); }
    bool pseudometric_warning_vbar() const { return domain_.boundary_on_line_or_circle(); }

    detail::PieceSet make_pieces(detail::V2 x, detail::V2 y) const {
        detail::PieceSet ps;
        switch (domain_.kind()) {
            case DomainKind::unit_ball: {
                detail::Piece c;
                c.kind = detail::Piece::Kind::circle;
                c.a = {0, 0};
                c.radius = 1.0;
                c.weight = 2.0 * detail::pi;
                ps.pieces.push_back(c);
                break;
            }
            case DomainKind::half_space: {
                detail::Piece l;
                l.kind = detail::Piece::Kind::line;
                l.a = {0.5 * (x.x + y.x), 0.0};
                l.b = {1.0, 0.0};
                l.scale = detail::dist(x, y) + x.y + y.y + 1.0;
                l.weight = 4.0 * l.scale;
                ps.pieces.push_back(l);
                break;
            }
            case DomainKind::punctured_space:
                ps.isolated.push_back({0, 0});
                break;
            case DomainKind::generic2d: {
                for (const auto& piece : domain_.pieces()) {
                    if (const auto* c = std::get_if<CirclePiece>(&piece)) {
                        detail::Piece p;
                        p.kind = detail::Piece::Kind::circle;
                        p.a = c->center;
                        p.radius = c->radius;
                        p.weight = 2.0 * detail::pi * c->radius;
                        ps.pieces.push_back(p);
                    } else {
                        const auto& pl = std::get<PolylinePiece>(piece);
                        size_t m = pl.pts.size();
                        size_t segs = pl.closed ? m : m - 1;
                        for (size_t i = 0; i < segs; ++i) {
                            detail::Piece p;
                            p.kind = detail::Piece::Kind::segment;
                            p.a = pl.pts[i];
                            p.b = pl.pts[(i + 1) % m];
                            p.weight = detail::dist(p.a, p.b);
                            if (p.weight > 0) ps.pieces.push_back(p);
                        }
                    }
                }
                break;
            }
        }
        return ps;
    }

    /// Maximize f over the boundary curves and isolated points; anchors are
    /// extra points whose boundary projections seed the refinement (they
    /// catch suprema hiding in peaks narrower than the coarse grid).
    template <class F>
    double sup_single(const detail::PieceSet& ps, F&& f, std::initializer_list<detail::V2> anchors) const {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& p : ps.isolated) best = std::max(best, f(p));
        if (ps.pieces.empty()) return best;

        double total_weight = 0;
        for (const auto& p : ps.pieces) total_weight += p.weight;

        struct Seed {
            double val;
            int piece;
            double u, du;
        };
        std::vector<Seed> seeds;
        const int keep = opts_.refine_seeds;

        for (int pi = 0; pi < static_cast<int>(ps.pieces.size()); ++pi) {
            const auto& piece = ps.pieces[static_cast<size_t>(pi)];
            int n = std::max(16, static_cast<int>(std::lround(opts_.coarse_count * piece.weight / total_weight)));
            double du = (piece.hi() - piece.lo()) / n;
            for (int k = 0; k < n; ++k) {
                double u = piece.lo() + (k + 0.5) * du;
                double val = f(piece.at(u));
                best = std::max(best, val);
                if (static_cast<int>(seeds.size()) < keep) {
                    seeds.push_back({val, pi, u, du});
                    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.val > b.val; });
                } else if (val > seeds.back().val) {
                    seeds.back() = {val, pi, u, du};
                    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.val > b.val; });
                }
            }
            for (const auto& anchor : anchors) {
                double u = piece.project(anchor);
                seeds.push_back({f(piece.at(u)), pi, u, du});
            }
        }

        for (const auto& s : seeds) {
            const auto& piece = ps.pieces[static_cast<size_t>(s.piece)];
            double lo = s.u - 1.5 * s.du, hi = s.u + 1.5 * s.du;
            if (!piece.periodic()) {
                lo = std::max(lo, piece.lo());
                hi = std::min(hi, piece.hi());
            }
            if (hi - lo < opts_.refine_tolerance) continue;
            auto eval = [&](double u) { return f(piece.at(u)); };
            double u = detail::golden_max(eval, lo, hi, opts_.refine_tolerance);
            best = std::max(best, eval(u));
        }
        return best;
    }

    /// Maximize a symmetric pair functional over boundary points z != w.
    /// f_inf(z) is the limit value of the pair (z, infinity) and joins when
    /// the domain's boundary contains infinity.
    template <class F2, class FInf>
    double sup_pairs(const detail::PieceSet& ps, F2&& f, FInf&& f_inf,
                     std::initializer_list<detail::V2> anchors) const {
        using detail::BoundarySample;
        std::vector<BoundarySample> samples;
        for (const auto& p : ps.isolated) samples.push_back({-1, 0.0, p});

        double total_weight = 0;
        for (const auto& p : ps.pieces) total_weight += p.weight;
        for (int pi = 0; pi < static_cast<int>(ps.pieces.size()); ++pi) {
            const auto& piece = ps.pieces[static_cast<size_t>(pi)];
            int n = std::max(8, static_cast<int>(std::lround(opts_.pair_axis_count * piece.weight / total_weight)));
            double du = (piece.hi() - piece.lo()) / n;
            for (int k = 0; k < n; ++k) {
                double u = piece.lo() + (k + 0.5) * du;
                samples.push_back({pi, u, piece.at(u)});
            }
            for (const auto& anchor : anchors) {
                double u = piece.project(anchor);
                samples.push_back({pi, u, piece.at(u)});
            }
        }
        if (samples.size() + (include_inf_ ? 1 : 0) < 2)
            fail(errc::invalid_parameter, "pair supremum needs at least two boundary points");

        struct PairSeed {
            double val;
            int i, j; // j == -2 marks infinity
        };
        std::vector<PairSeed> seeds;
        const int keep = opts_.refine_seeds;
        auto offer = [&](double val, int i, int j) {
            if (static_cast<int>(seeds.size()) < keep) {
                seeds.push_back({val, i, j});
                std::sort(seeds.begin(), seeds.end(), [](const PairSeed& a, const PairSeed& b) { return a.val > b.val; });
            } else if (val > seeds.back().val) {
                seeds.back() = {val, i, j};
                std::sort(seeds.begin(), seeds.end(), [](const PairSeed& a, const PairSeed& b) { return a.val > b.val; });
            }
        };

        double best = -std::numeric_limits<double>::infinity();
        int m = static_cast<int>(samples.size());
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                double val = f(samples[static_cast<size_t>(i)].z, samples[static_cast<size_t>(j)].z);
                if (val > best) best = val;
                offer(val, i, j);
            }
            if (include_inf_) {
                double val = f_inf(samples[static_cast<size_t>(i)].z);
                if (val > best) best = val;
                offer(val, i, -2);
            }
        }

        // Coordinate-descent refinement of the best pairs.
        for (const auto& sd : seeds) {
            BoundarySample zi = samples[static_cast<size_t>(sd.i)];
            BoundarySample zj{};
            bool j_inf = sd.j == -2;
            if (!j_inf) zj = samples[static_cast<size_t>(sd.j)];

            auto value = [&]() { return j_inf ? f_inf(zi.z) : f(zi.z, zj.z); };
            double cur = value();
            for (int round = 0; round < 4; ++round) {
                double before = cur;
                cur = std::max(cur, refine_coordinate(ps, zi, [&](detail::V2 z) { return j_inf ? f_inf(z) : f(z, zj.z); }));
                if (!j_inf) cur = std::max(cur, refine_coordinate(ps, zj, [&](detail::V2 w) { return f(zi.z, w); }));
                if (cur - before < 1e-13 * (1.0 + std::abs(cur))) break;
            }
            best = std::max(best, cur);
        }
        return best;
    }

private:
    template <class F>
    double refine_coordinate(const detail::PieceSet& ps, detail::BoundarySample& s, F&& f) const {
        if (s.piece < 0) return f(s.z); // isolated point: nothing to move
        const auto& piece = ps.pieces[static_cast<size_t>(s.piece)];
        double du = (piece.hi() - piece.lo()) / std::max(8, opts_.pair_axis_count / 4);
        double lo = s.u - du, hi = s.u + du;
        if (!piece.periodic()) {
            lo = std::max(lo, piece.lo());
            hi = std::min(hi, piece.hi());
        }
        if (hi - lo < opts_.refine_tolerance) return f(s.z);
        auto eval = [&](double u) { return f(piece.at(u)); };
        double u = detail::golden_max(eval, lo, hi, opts_.refine_tolerance);
        double val = eval(u);
        if (val >= f(s.z)) {
            s.u = u;
            s.z = piece.at(u);
        }
        return val;
    }

    DomainSpec domain_;
    SamplerOptions opts_;
    bool include_inf_;
};

namespace detail {

inline void check_sup_pair(const BoundarySampler& S, const Point& x, const Point& y) {
    const DomainSpec& d = S.domain();
    require_finite(x, "x");
    require_finite(y, "y");
    if (x.dim() != d.dim() || y.dim() != d.dim())
        fail(errc::dimension_mismatch, "point dimension does not match domain");
    require_in_domain(d, x, "x");
    require_in_domain(d, y, "y");
    if (d.boundary_distance(x) <= 1e-12 || d.boundary_distance(y) <= 1e-12)
        fail(errc::on_boundary, "points must keep a positive distance from the boundary");
}

// --- three-dimensional canonical oracles ------------------------------------

using V3 = std::array<double, 3>;

inline V3 v3(const Point& p) { return {p[0], p[1], p[2]}; }
inline double dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline V3 sub3(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline V3 add3(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline V3 scale3(double s, const V3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double norm3(const V3& a) { return std::sqrt(dot3(a, a)); }
inline V3 cross3(const V3& a, const V3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double angle3(const V3& x, const V3& z, const V3& y) {
    V3 u = sub3(x, z), v = sub3(y, z), d = sub3(y, x);
    return std::atan2(norm3(cross3(u, d)), dot3(u, v));
}

// Zooming pattern search on the sphere starting at z with window w0; the
// running best is always kept, so a peak under the window cannot be lost.
template <class F>
double sphere_zoom(F&& f, V3 z, double w0) {
    double val = f(z);
    for (double w = w0; w > 1e-13; w *= 0.3) {
        V3 ref = std::abs(z[0]) < 0.9 ? V3{1, 0, 0} : V3{0, 1, 0};
        V3 t1 = cross3(z, ref);
        t1 = scale3(1.0 / norm3(t1), t1);
        V3 t2 = cross3(z, t1);
        V3 zb = z;
        for (int i = -3; i <= 3; ++i) {
            for (int j = -3; j <= 3; ++j) {
                if (i == 0 && j == 0) continue;
                V3 c = add3(z, add3(scale3(i * w / 3.0, t1), scale3(j * w / 3.0, t2)));
                c = scale3(1.0 / norm3(c), c);
                double fv = f(c);
                if (fv > val) {
                    val = fv;
                    zb = c;
                }
            }
        }
        z = zb;
    }
    return val;
}

// sup of the angle over the unit sphere: Fibonacci lattice plus zooming
// searches seeded along the great-circle arc between the radial projections
// of the two points, where boundary-hugging pairs hide their narrow peaks.
inline double sup_angle_sphere(const Point& x, const Point& y, int coarse, double tol) {
    (void)tol;
    V3 px = v3(x), py = v3(y);
    auto f = [&](const V3& z) { return angle3(px, z, py); };

    double best = 0;
    const double ga = pi * (3.0 - std::sqrt(5.0));
    struct Seed {
        double val;
        V3 z;
    };
    std::vector<Seed> seeds;
    for (int k = 0; k < coarse; ++k) {
        double zc = 1.0 - 2.0 * (k + 0.5) / coarse;
        double rc = std::sqrt(std::max(0.0, 1.0 - zc * zc));
        double phi = ga * k;
        V3 z{rc * std::cos(phi), rc * std::sin(phi), zc};
        double val = f(z);
        best = std::max(best, val);
        if (static_cast<int>(seeds.size()) < 8) {
            seeds.push_back({val, z});
            std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.val > b.val; });
        } else if (val > seeds.back().val) {
            seeds.back() = {val, z};
            std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.val > b.val; });
        }
    }
    double w_lattice = 6.0 / std::sqrt(double(coarse));
    for (const auto& sd : seeds) best = std::max(best, sphere_zoom(f, sd.z, w_lattice));

    // Radius-ladder rings around the radial projections: boundary-hugging
    // points hide a peak of width comparable to its distance somewhere on a
    // ring about the projection.
    struct RingSeed {
        double val, r;
        V3 z;
    };
    std::vector<RingSeed> ring;
    for (const V3& p : {px, py}) {
        if (norm3(p) <= 1e-12) continue;
        V3 anchor = scale3(1.0 / norm3(p), p);
        V3 ref = std::abs(anchor[0]) < 0.9 ? V3{1, 0, 0} : V3{0, 1, 0};
        V3 t1 = cross3(anchor, ref);
        t1 = scale3(1.0 / norm3(t1), t1);
        V3 t2 = cross3(anchor, t1);
        ring.push_back({f(anchor), 1e-10, anchor});
        for (int k = 0; k <= 80; ++k) {
            double r = 2.0 * std::pow(0.7071067811865476, k);
            for (int m = 0; m < 48; ++m) {
                double phi = 2.0 * pi * (m + 0.5 * (k & 1)) / 48.0;
                V3 z = add3(anchor, scale3(r, add3(scale3(std::cos(phi), t1), scale3(std::sin(phi), t2))));
                z = scale3(1.0 / norm3(z), z);
                ring.push_back({f(z), r, z});
            }
        }
    }
    std::sort(ring.begin(), ring.end(), [](const RingSeed& a, const RingSeed& b) { return a.val > b.val; });
    for (size_t i = 0; i < ring.size() && i < 24; ++i)
        best = std::max(best, sphere_zoom(f, ring[i].z, 3.0 * ring[i].r));
    return best;
}

// Planar zooming pattern search in the flat coordinates of the boundary.
template <class F>
double plane_zoom(F&& f, V3 z, double w0) {
    double val = f(z);
    for (double w = w0; w > 1e-13 * (1.0 + std::abs(z[0]) + std::abs(z[1])); w *= 0.3) {
        V3 zb = z;
        for (int i = -3; i <= 3; ++i) {
            for (int j = -3; j <= 3; ++j) {
                if (i == 0 && j == 0) continue;
                V3 c{z[0] + i * w / 3.0, z[1] + j * w / 3.0, 0.0};
                double fv = f(c);
                if (fv > val) {
                    val = fv;
                    zb = c;
                }
            }
        }
        z = zb;
    }
    return val;
}

// sup of the angle over the boundary plane of the half-space: a folded
// coarse grid plus zooming searches seeded along the segment between the
// vertical projections of the two points.
inline double sup_angle_plane(const Point& x, const Point& y, int coarse, double tol) {
    (void)tol;
    V3 px = v3(x), py = v3(y);
    auto f = [&](const V3& z) { return angle3(px, z, py); };
    double mx = 0.5 * (px[0] + py[0]), my = 0.5 * (px[1] + py[1]);
    double scale = norm3(sub3(px, py)) + px[2] + py[2] + 1.0;
    auto at = [&](double u, double v) {
        return V3{mx + scale * std::tan(pi * (u - 0.5)), my + scale * std::tan(pi * (v - 0.5)), 0.0};
    };
    int n = std::max(16, static_cast<int>(std::lround(std::sqrt(double(coarse)))));
    struct Seed {
        double val;
        V3 z;
    };
    std::vector<Seed> seeds;
    double best = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            V3 z = at((i + 0.5) / n, (j + 0.5) / n);
            double val = f(z);
            best = std::max(best, val);
            if (static_cast<int>(seeds.size()) < 8) {
                seeds.push_back({val, z});
                std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.val > b.val; });
            } else if (val > seeds.back().val) {
                seeds.back() = {val, z};
                std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) { return a.val > b.val; });
            }
        }
    }
    for (const auto& sd : seeds) best = std::max(best, plane_zoom(f, sd.z, 2.0 * scale / n));

    // Radius-ladder rings around the vertical projections.
    struct RingSeed {
        double val, r;
        V3 z;
    };
    std::vector<RingSeed> ring;
    for (const V3& p : {px, py}) {
        V3 anchor{p[0], p[1], 0.0};
        ring.push_back({f(anchor), 1e-10 * scale, anchor});
        for (int k = 0; k <= 80; ++k) {
            double r = scale * std::pow(0.7071067811865476, k);
            for (int m = 0; m < 48; ++m) {
                double phi = 2.0 * pi * (m + 0.5 * (k & 1)) / 48.0;
                V3 z{anchor[0] + r * std::cos(phi), anchor[1] + r * std::sin(phi), 0.0};
                ring.push_back({f(z), r, z});
            }
        }
    }
    std::sort(ring.begin(), ring.end(), [](const RingSeed& a, const RingSeed& b) { return a.val > b.val; });
    for (size_t i = 0; i < ring.size() && i < 24; ++i)
        best = std::max(best, plane_zoom(f, ring[i].z, 3.0 * ring[i].r));
    return best;
}

} // namespace detail

/// Visual angle metric as a boundary supremum of viewing angles.  Serves as
/// the generic evaluator for planar domains and as the sampling oracle for
/// the canonical closed forms (dimensions 2 and 3).
inline MetricValue v_sup(const BoundarySampler& S, const Point& x, const Point& y) {
    detail::check_sup_pair(S, x, y);
    if (x == y) return detail::make_metric(MetricId::v, 0.0);
    const DomainSpec& d = S.domain();
    if (d.kind() == DomainKind::punctured_space)
        return detail::make_metric(MetricId::v, detail::angle_nd(x, Point::zero(x.dim()), y));
    if (d.segment_hits_boundary(x, y)) return detail::make_metric(MetricId::v, detail::pi);

    if (d.dim() == 3) {
        double tol = S.options().refine_tolerance;
        int coarse = S.options().coarse_count;
        switch (d.kind()) {
            case DomainKind::unit_ball:
                return detail::make_metric(MetricId::v, detail::sup_angle_sphere(x, y, coarse, tol));
            case DomainKind::half_space:
                return detail::make_metric(MetricId::v, detail::sup_angle_plane(x, y, coarse, tol));
            default:
                fail(errc::unsupported_domain, "three-dimensional sampling covers canonical domains only");
        }
    }
    if (d.dim() != 2) fail(errc::unsupported_domain, "boundary sampling is planar beyond the canonical oracles");

    detail::V2 px = detail::v2(x), py = detail::v2(y);
    auto ps = S.make_pieces(px, py);
    auto f = [&](detail::V2 z) { return detail::angle2(px, z, py); };
    double val = S.sup_single(ps, f, {px, py});
    return detail::make_metric(MetricId::v, std::min(val, detail::pi));
}

/// Triangular ratio metric sup |x-y| / (|z-x| + |z-y|) over the boundary.
inline MetricValue s_triangular(const BoundarySampler& S, const Point& x, const Point& y) {
    detail::check_sup_pair(S, x, y);
    if (x == y) return detail::make_metric(MetricId::s, 0.0);
    const DomainSpec& d = S.domain();
    if (d.kind() == DomainKind::punctured_space) {
        double val = dist(x, y) / (x.norm() + y.norm());
        return detail::make_metric(MetricId::s, std::min(val, 1.0));
    }
    if (d.dim() != 2) fail(errc::unsupported_domain, "triangular ratio sampling is planar");
    if (d.segment_hits_boundary(x, y)) return detail::make_metric(MetricId::s, 1.0);

    detail::V2 px = detail::v2(x), py = detail::v2(y);
    double dxy = detail::dist(px, py);
    auto ps = S.make_pieces(px, py);
    auto f = [&](detail::V2 z) { return dxy / (detail::dist(z, px) + detail::dist(z, py)); };
    double val = S.sup_single(ps, f, {px, py});
    return detail::make_metric(MetricId::s, std::min(val, 1.0));
}

/// Ptolemaic angular metric: sup of the angular characteristic over
/// boundary pairs (z, w), infinity included for unbounded boundaries.
inline MetricValue r_ptolemaic(const BoundarySampler& S, const Point& x, const Point& y) {
    detail::check_sup_pair(S, x, y);
    if (x == y) return detail::make_metric(MetricId::r, 0.0);
    const DomainSpec& d = S.domain();
    if (d.dim() != 2) fail(errc::unsupported_domain, "pair sampling is planar");

    detail::V2 px = detail::v2(x), py = detail::v2(y);
    double dxy = detail::dist(px, py);
    auto ps = S.make_pieces(px, py);
    auto f = [&](detail::V2 z, detail::V2 w) {
        double den = detail::dist(z, px) * detail::dist(w, py) + detail::dist(z, py) * detail::dist(w, px);
        if (den == 0.0) return 0.0;
        return detail::dist(z, w) * dxy / den;
    };
    auto f_inf = [&](detail::V2 z) { return dxy / (detail::dist(z, px) + detail::dist(z, py)); };
    double val = S.sup_pairs(ps, f, f_inf, {px, py});
    return detail::make_metric(MetricId::r, std::min(val, 1.0));
}

/// Visual double angle metric: Moebius-invariant two-boundary-point version
/// of the visual angle metric, built from absolute ratios.  The arccos
/// argument is minimized over pairs and clamped to [-1, 1].
inline MetricValue v_double(const BoundarySampler& S, const Point& x, const Point& y) {
    detail::check_sup_pair(S, x, y);
    if (x == y) return detail::make_metric(MetricId::vbar, 0.0);
    const DomainSpec& d = S.domain();
    if (d.dim() != 2) fail(errc::unsupported_domain, "pair sampling is planar");

    detail::V2 px = detail::v2(x), py = detail::v2(y);
    double dxy2 = detail::norm_sq(px - py);
    // maximize the negated bracket |z,y,x,w| + |z,x,y,w| - s(z,x,y,w)
    auto neg_bracket = [&](detail::V2 z, detail::V2 w) {
        double dxz = detail::dist(px, z), dyz = detail::dist(py, z);
        double dxw = detail::dist(px, w), dyw = detail::dist(py, w);
        double a = dxz * dyw, b = dyz * dxw;
        if (a == 0.0 || b == 0.0) return -std::numeric_limits<double>::infinity();
        double t = a / b;
        double u = dxy2 * detail::norm_sq(z - w) / (a * b);
        return -(t + 1.0 / t - u);
    };
    auto neg_bracket_inf = [&](detail::V2 z) {
        double dxz = detail::dist(px, z), dyz = detail::dist(py, z);
        if (dxz == 0.0 || dyz == 0.0) return -std::numeric_limits<double>::infinity();
        return -(dxz / dyz + dyz / dxz - dxy2 / (dxz * dyz));
    };
    auto ps = S.make_pieces(px, py);
    double neg = S.sup_pairs(ps, neg_bracket, neg_bracket_inf, {px, py});
    double arg = std::clamp(-neg / 2.0, -1.0, 1.0);
    return detail::make_metric(MetricId::vbar, std::acos(arg));
}

/// sin(half) transform of a visual angle value.
inline MetricValue starred(const MetricValue& m) {
    if (m.id == MetricId::v) return detail::make_metric(MetricId::v_star, std::sin(m.value / 2.0));
    if (m.id == MetricId::vbar) return detail::make_metric(MetricId::vbar_star, std::sin(m.value / 2.0));
    fail(errc::kind_mismatch, "starred transform applies to the visual angle metrics");
}

} // namespace vam
