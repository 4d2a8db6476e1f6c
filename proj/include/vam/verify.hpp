#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vam/metrics.hpp"
#include "vam/moebius.hpp"
#include "vam/point.hpp"
#include "vam/random.hpp"
#include "vam/special_functions.hpp"

namespace vam {

struct SweepRow {
    double param = 0;
    double value = 0;
};

/// Structured result of a verification suite: trial and violation counts,
/// the worst signed margin seen (negative = violated), an optional scalar
/// estimate, sweep rows sorted by parameter, and the seed that reproduces
/// the run bit for bit.
struct VerificationReport {
    std::string suite_id;
    long trials = 0;
    long violations = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::optional<double> estimate;
    std::vector<SweepRow> sweep;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> details;

    bool passed() const { return violations == 0; }

    void note(double margin) {
        worst_margin = std::min(worst_margin, margin);
        if (margin < 0) ++violations;
    }
    void detail(const std::string& key, double value) { details.emplace_back(key, value); }
};

namespace detail {

inline const double pi_over_log3 = pi / std::log(3.0);

inline Point sample_point(Rng& rng, const DomainSpec& d) {
    // Suprema live near the boundary; a heavy-tail supplement probes there.
    switch (d.kind()) {
        case DomainKind::unit_ball:
            return rng.unit() < 0.8 ? rng.in_ball(d.dim()) : rng.in_ball_near_boundary(d.dim());
        case DomainKind::half_space:
            return rng.unit() < 0.8 ? rng.in_half(d.dim()) : rng.in_half_near_boundary(d.dim());
        default:
            fail(errc::unsupported_domain, "sampling covers the ball and the half-space");
    }
}

inline std::pair<Point, Point> sample_pair(Rng& rng, const DomainSpec& d) {
    for (;;) {
        Point x = sample_point(rng, d);
        Point y = sample_point(rng, d);
        if (x != y && dist(x, y) > 1e-12) return {x, y};
    }
}

inline MetricValue rho_canonical(const DomainSpec& d, const Point& x, const Point& y) {
    return d.kind() == DomainKind::unit_ball ? rho_ball(x, y) : rho_half(x, y);
}

// Derivative-free simplex maximization with a box-constraint style reject
// (objective returns -inf outside the domain).
inline std::vector<double> nelder_mead_max(const std::function<double(const std::vector<double>&)>& f,
                                           std::vector<double> x0, double step, int iters) {
    size_t n = x0.size();
    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> val(n + 1);
    for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    for (size_t i = 0; i <= n; ++i) val[i] = f(simplex[i]);

    auto order = [&]() {
        std::vector<size_t> idx(n + 1);
        for (size_t i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return val[a] > val[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> v2;
        for (size_t i : idx) {
            s2.push_back(simplex[i]);
            v2.push_back(val[i]);
        }
        simplex = std::move(s2);
        val = std::move(v2);
    };

    for (int it = 0; it < iters; ++it) {
        order();
        std::vector<double> centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / double(n);
        auto at = [&](double coef) {
            std::vector<double> p(n);
            for (size_t j = 0; j < n; ++j) p[j] = centroid[j] + coef * (centroid[j] - simplex[n][j]);
            return p;
        };
        auto refl = at(1.0);
        double fr = f(refl);
        if (fr > val[0]) {
            auto exp_ = at(2.0);
            double fe = f(exp_);
            if (fe > fr) {
                simplex[n] = exp_;
                val[n] = fe;
            } else {
                simplex[n] = refl;
                val[n] = fr;
            }
        } else if (fr > val[n - 1]) {
            simplex[n] = refl;
            val[n] = fr;
        } else {
            auto con = at(0.5);
            double fc = f(con);
            if (fc > val[n]) {
                simplex[n] = con;
                val[n] = fc;
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j) simplex[i][j] = 0.5 * (simplex[i][j] + simplex[0][j]);
                    val[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return simplex[0];
}

} // namespace detail

// ---------------------------------------------------------------------------

/// Sharp two-sided bound suite: rho* <= v <= 2 rho* and v <= rho on random
/// pairs, plus the boundary-pair sweep showing v / rho* -> 2.
inline VerificationReport bounds_suite(const DomainSpec& domain, long trials, std::uint64_t seed) {
    if (domain.kind() != DomainKind::unit_ball && domain.kind() != DomainKind::half_space)
        fail(errc::unsupported_domain, "bounds suite runs on the ball or the half-space");
    if (domain.dim() != 2 && domain.dim() != 3)
        fail(errc::invalid_parameter, "bounds suite covers dimensions 2 and 3");
    if (trials < 1) fail(errc::invalid_parameter, "at least one trial required");

    VerificationReport rep;
    rep.suite_id = domain.kind() == DomainKind::unit_ball ? "bounds-ball" : "bounds-half";
    rep.seed = seed;
    rep.trials = trials;
    Rng rng(seed);
    const double slack = 1e-9;

    for (long i = 0; i < trials; ++i) {
        auto [x, y] = detail::sample_pair(rng, domain);
        double v = v_closed(domain, x, y).value;
        double rs = rho_star(domain, x, y).value;
        double rho = detail::rho_canonical(domain, x, y).value;
        double m = std::min({v - rs, 2.0 * rs - v, rho - v});
        rep.note(m + slack);
    }

    // Sharpness sweep: pairs hugging the boundary, ratio v / rho* -> 2.
    bool ball = domain.kind() == DomainKind::unit_ball;
    DomainSpec flat = ball ? DomainSpec::unit_ball(2) : DomainSpec::half_space(2);
    std::vector<double> ts;
    for (int k = 11; k >= 0; --k) ts.push_back(std::pow(10.0, -(1.0 + 3.0 * k / 11.0)));
    for (double t : ts) {
        Point x = ball ? Point{1.0 - t, t} : Point{-1.0, t};
        Point y = ball ? Point{1.0 - t, -t} : Point{1.0, t};
        double ratio = v_closed(flat, x, y).value / rho_star(flat, x, y).value;
        rep.sweep.push_back({t, ratio});
        rep.note(2.0 + 1e-9 - ratio);
    }
    std::sort(rep.sweep.begin(), rep.sweep.end(), [](const SweepRow& a, const SweepRow& b) { return a.param < b.param; });
    rep.detail("ratio_at_smallest_t", rep.sweep.front().value);
    rep.note(rep.sweep.front().value - 1.999);
    rep.estimate = rep.sweep.front().value;
    return rep;
}

/// Equality-case suite: tan v = sinh(rho/2) exactly on the equality families
/// (collinear with the origin in the ball, vertical in the half-plane) and
/// measurably broken under perturbations.
inline VerificationReport equality_suite(const DomainSpec& domain, long trials, std::uint64_t seed) {
    bool ball = domain.kind() == DomainKind::unit_ball;
    if (!ball && domain.kind() != DomainKind::half_space)
        fail(errc::unsupported_domain, "equality suite runs on the ball or the half-space");

    VerificationReport rep;
    rep.suite_id = ball ? "equality-ball" : "equality-half";
    rep.seed = seed;
    rep.trials = trials;
    Rng rng(seed);

    double max_eq = 0, min_pert = std::numeric_limits<double>::infinity();
    for (long i = 0; i < trials; ++i) {
        Point x = Point::zero(2), y = Point::zero(2);
        Point xp = Point::zero(2), yp = Point::zero(2);
        if (ball) {
            double phi = rng.uniform(0, 2 * detail::pi);
            detail::V2 u{std::cos(phi), std::sin(phi)};
            double r1 = rng.uniform(-0.85, 0.85);
            if (rng.unit() < 0.1) r1 = 0.0;
            double r2 = rng.uniform(-0.85, 0.85);
            while (std::abs(r1 - r2) < 1e-3) r2 = rng.uniform(-0.85, 0.85);
            x = detail::pt(r1 * u);
            y = detail::pt(r2 * u);
            // perturbed: bounded radii, y rotated about the origin
            double p1 = rng.uniform(0.25, 0.8), p2 = rng.uniform(0.25, 0.8);
            double delta = (rng.unit() < 0.5 ? 1 : -1) * rng.uniform(0.15, 0.6);
            xp = detail::pt(p1 * u);
            yp = detail::pt(p2 * detail::V2{std::cos(phi + delta), std::sin(phi + delta)});
        } else {
            double c = rng.uniform(-2, 2);
            double h1 = rng.uniform(0.3, 3.0), h2 = rng.uniform(0.3, 3.0);
            while (std::abs(h1 - h2) < 1e-3) h2 = rng.uniform(0.3, 3.0);
            x = Point{c, h1};
            y = Point{c, h2};
            double delta = (rng.unit() < 0.5 ? 1 : -1) * rng.uniform(0.15, 0.6) * std::max(h1, h2);
            xp = Point{c, h1};
            yp = Point{c + delta, h2};
        }
        double res_eq = std::abs(std::tan(v_closed(domain, x, y).value) -
                                 std::sinh(detail::rho_canonical(domain, x, y).value / 2.0));
        double res_pert = std::abs(std::tan(v_closed(domain, xp, yp).value) -
                                   std::sinh(detail::rho_canonical(domain, xp, yp).value / 2.0));
        max_eq = std::max(max_eq, res_eq);
        min_pert = std::min(min_pert, res_pert);
        rep.note(1e-9 - res_eq);
        rep.note(res_pert - 1e-6);
    }
    rep.detail("max_equality_residual", max_eq);
    rep.detail("min_perturbed_residual", min_pert);
    return rep;
}

/// Lipschitz estimate of a Moebius map between canonical planar domains
/// under the visual angle metric: max of v(fx, fy) / v(x, y) over sampled
/// pairs plus caller-supplied extremal pairs.
inline VerificationReport lipschitz_ratio(const MoebiusMap& map, const DomainSpec& source,
                                          const DomainSpec& target, long trials, std::uint64_t seed,
                                          const std::vector<std::pair<Point, Point>>& extra_pairs = {}) {
    VerificationReport rep;
    rep.suite_id = "lipschitz";
    rep.seed = seed;
    rep.trials = trials + static_cast<long>(extra_pairs.size());
    Rng rng(seed);

    double max_ratio = 0, min_ratio = std::numeric_limits<double>::infinity();
    auto push_pair = [&](const Point& x, const Point& y) {
        Point fx = map(x), fy = map(y);
        if (fx.is_infinity() || fy.is_infinity() || !target.contains(fx) || !target.contains(fy)) {
            double excess = 0;
            for (const Point& p : {fx, fy}) {
                if (p.is_infinity()) { excess = 1; continue; }
                if (target.kind() == DomainKind::unit_ball) excess = std::max(excess, p.norm() - 1.0);
                else excess = std::max(excess, -p[p.dim() - 1]);
            }
            if (excess > 1e-9) fail(errc::map_domain_mismatch, "map image leaves the target domain");
            return; // boundary-grazing round-off: skip the pair
        }
        double v0 = v_closed(source, x, y).value;
        if (v0 < 1e-12) return;
        double ratio = v_closed(target, fx, fy).value / v0;
        max_ratio = std::max(max_ratio, ratio);
        min_ratio = std::min(min_ratio, ratio);
        rep.note(2.0 + 1e-6 - ratio);
        rep.note(ratio - 0.5 + 1e-6);
    };

    for (long i = 0; i < trials; ++i) {
        auto [x, y] = detail::sample_pair(rng, source);
        push_pair(x, y);
    }
    for (const auto& [x, y] : extra_pairs) push_pair(x, y);

    rep.estimate = max_ratio;
    rep.detail("max_ratio", max_ratio);
    rep.detail("min_ratio", min_ratio);
    return rep;
}

/// Ball-automorphism Lipschitz suite for the map taking a e1 to the origin,
/// including the symmetric imaginary pair family that realizes the sharp
/// distortion.  The per-a conjectured supremum is reported, never asserted.
inline VerificationReport lipschitz_ball_suite(double a, long trials, std::uint64_t seed) {
    if (!(a >= 0.0 && a < 1.0)) fail(errc::invalid_parameter, "parameter a must lie in [0, 1)");
    std::vector<std::pair<Point, Point>> family;
    for (int k = 0; k < 60; ++k) {
        double u = 0.3 + (4.0 - 0.3) * k / 59.0;
        double t = 1.0 - std::pow(10.0, -u);
        family.emplace_back(Point{0.0, t}, Point{0.0, -t});
    }
    DomainSpec ball = DomainSpec::unit_ball(2);
    MoebiusMap map = ball_to_origin(Point{a, 0.0});
    VerificationReport rep = lipschitz_ratio(map, ball, ball, trials, seed, family);
    rep.suite_id = "lipschitz-ball";
    double reference = (4.0 / detail::pi) * std::atan((1.0 + a) / (1.0 - a));
    rep.detail("reference_supremum", reference);
    rep.detail("reference_gap", reference - rep.estimate.value_or(0.0));
    return rep;
}

/// Half-plane Lipschitz suite for z -> (az + b)/(cz + d); when c and d are
/// nonzero the pair (i, i d^2/c^2) realizing ratio 2 joins the samples.
inline VerificationReport lipschitz_half_suite(double a, double b, double c, double d, long trials,
                                               std::uint64_t seed) {
    std::vector<std::pair<Point, Point>> family;
    if (c != 0.0 && d != 0.0) family.emplace_back(Point{0.0, 1.0}, Point{0.0, d * d / (c * c)});
    DomainSpec half = DomainSpec::half_space(2);
    VerificationReport rep = lipschitz_ratio(half_plane_map(a, b, c, d), half, half, trials, seed, family);
    rep.suite_id = "lipschitz-half";
    if (!family.empty()) {
        Point x = family[0].first, y = family[0].second;
        MoebiusMap f = half_plane_map(a, b, c, d);
        double ratio = v_half(f(x), f(y)).value / v_half(x, y).value;
        rep.detail("case1_pair_ratio", ratio);
        rep.note(1e-9 - std::abs(ratio - 2.0));
    }
    return rep;
}

/// Affine half-plane maps (c = 0) are isometries of the visual angle metric.
inline VerificationReport lipschitz_affine_suite(long trials, std::uint64_t seed) {
    DomainSpec half = DomainSpec::half_space(2);
    VerificationReport rep;
    rep.suite_id = "lipschitz-affine";
    rep.seed = seed;
    rep.trials = trials;
    Rng rng(seed);
    double worst = 0;
    for (long i = 0; i < trials; ++i) {
        double a = rng.uniform(0.5, 2.0), b = rng.uniform(-2.0, 2.0);
        MoebiusMap f = half_plane_map(a, b, 0.0, 1.0 / a);
        auto [x, y] = detail::sample_pair(rng, half);
        double ratio = v_half(f(x), f(y)).value / v_half(x, y).value;
        worst = std::max(worst, std::abs(ratio - 1.0));
        rep.note(1e-9 - std::abs(ratio - 1.0));
    }
    rep.estimate = 1.0 + worst;
    rep.detail("max_abs_ratio_minus_one", worst);
    return rep;
}

enum class SweepFamily {
    ball_boundary_pair, // v / rho* along boundary-hugging ball pairs, param p = 1 - t
    half_boundary_pair, // same for horizontal half-plane pairs
    half_to_ball_upper, // Cayley image ratio, upper family
    half_to_ball_lower, // Cayley preimage identity family, ratio exactly 2
    half_inversion      // z -> -1/z family
};

inline const char* sweep_family_token(SweepFamily f) {
    switch (f) {
        case SweepFamily::ball_boundary_pair: return "thm1_1_ball";
        case SweepFamily::half_boundary_pair: return "thm1_1_half";
        case SweepFamily::half_to_ball_upper: return "thm1_3_upper";
        case SweepFamily::half_to_ball_lower: return "thm1_3_lower";
        case SweepFamily::half_inversion: return "thm1_4_case2";
    }
    return "?";
}

/// Evaluates a proof family of point pairs along a parameter grid and
/// records the distortion ratio; asserts the approach to the sharp constant.
inline VerificationReport sharpness_sweep(SweepFamily family, const std::vector<double>& grid) {
    if (grid.empty()) fail(errc::invalid_parameter, "sweep grid must be nonempty");
    double lo = 0.0, hi = 0.0;
    switch (family) {
        case SweepFamily::ball_boundary_pair:
        case SweepFamily::half_boundary_pair:
        case SweepFamily::half_to_ball_upper: hi = 1.0; break;
        case SweepFamily::half_to_ball_lower: hi = std::numeric_limits<double>::infinity(); break;
        case SweepFamily::half_inversion: hi = detail::pi / 2.0; break;
    }
    for (double t : grid)
        if (!(t > lo && t < hi)) fail(errc::invalid_parameter, "grid point outside the valid interval");

    VerificationReport rep;
    rep.suite_id = std::string("sweep-") + sweep_family_token(family);
    rep.trials = static_cast<long>(grid.size());

    DomainSpec ball = DomainSpec::unit_ball(2);
    DomainSpec half = DomainSpec::half_space(2);
    MoebiusMap cayley = cayley_half_to_ball();
    MoebiusMap cayley_inv = cayley.inverse();
    MoebiusMap neg_inv = half_plane_map(0.0, -1.0, 1.0, 0.0);

    std::vector<double> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    for (double t : sorted) {
        double ratio = 0;
        switch (family) {
            case SweepFamily::ball_boundary_pair: {
                double s = 1.0 - t; // param approaches 1 as the pair approaches the boundary
                Point x{1.0 - s, s}, y{1.0 - s, -s};
                ratio = v_ball(x, y).value / rho_star(ball, x, y).value;
                break;
            }
            case SweepFamily::half_boundary_pair: {
                double s = 1.0 - t;
                Point x{-1.0, s}, y{1.0, s};
                ratio = v_half(x, y).value / rho_star(half, x, y).value;
                break;
            }
            case SweepFamily::half_to_ball_upper: {
                Point x{-2.0 * t / std::sqrt(1.0 - t * t), 1.0};
                Point y{0.0, (1.0 + t) / (1.0 - t)};
                ratio = v_ball(cayley(x), cayley(y)).value / v_half(x, y).value;
                break;
            }
            case SweepFamily::half_to_ball_lower: {
                Point x{0.0, 0.0};
                Point y{t * t / (t * t + 4.0), -2.0 * t / (t * t + 4.0)};
                ratio = v_half(cayley_inv(x), cayley_inv(y)).value / v_ball(x, y).value;
                rep.note(1e-9 - std::abs(ratio - 2.0));
                break;
            }
            case SweepFamily::half_inversion: {
                Point x{-t * std::cos(t), t * std::sin(t)};
                Point y{0.0, t / std::sin(t)};
                ratio = v_half(neg_inv(x), neg_inv(y)).value / v_half(x, y).value;
                break;
            }
        }
        rep.note(2.0 + 1e-6 - ratio);
        rep.sweep.push_back({t, ratio});
    }

    // Monotone approach to the sharp constant along the family direction.
    bool toward_small_t = family == SweepFamily::half_inversion;
    for (size_t i = 0; i + 1 < rep.sweep.size(); ++i) {
        double gap_lo = std::abs(2.0 - rep.sweep[i].value);     // smaller parameter
        double gap_hi = std::abs(2.0 - rep.sweep[i + 1].value); // larger parameter
        rep.note((toward_small_t ? gap_hi - gap_lo : gap_lo - gap_hi) + 1e-9);
    }
    rep.estimate = toward_small_t ? rep.sweep.front().value : rep.sweep.back().value;
    return rep;
}

/// Estimates sup v / j over a canonical planar domain: best sampled pair
/// plus a simplex refinement.  The conjectured interval is reported but not
/// asserted; only the coarse analogue ceiling pi / log 3 and the trivial
/// floor are checked.
inline VerificationReport conjecture_constant(const DomainSpec& domain, long trials, std::uint64_t seed,
                                              int refine_iters = 400) {
    bool ball = domain.kind() == DomainKind::unit_ball;
    if (!ball && domain.kind() != DomainKind::half_space)
        fail(errc::unsupported_domain, "constant estimation runs on the ball or the half-space");
    if (domain.dim() != 2) fail(errc::unsupported_domain, "constant estimation is planar");
    if (trials < 10000) fail(errc::invalid_parameter, "the estimator needs at least 10^4 samples");

    VerificationReport rep;
    rep.suite_id = ball ? "constant-ball" : "constant-half";
    rep.seed = seed;
    rep.trials = trials;
    Rng rng(seed);

    auto ratio_of = [&](const Point& x, const Point& y) {
        double jv = j_metric(domain, x, y).value;
        if (jv < 1e-12) return -1.0;
        return v_closed(domain, x, y).value / jv;
    };

    // keep the best handful of sampled pairs as refinement starts
    struct Cand {
        double q;
        Point x, y;
    };
    std::vector<Cand> cands;
    double raw = 0;
    for (long i = 0; i < trials; ++i) {
        auto [x, y] = detail::sample_pair(rng, domain);
        double q = ratio_of(x, y);
        raw = std::max(raw, q);
        if (cands.size() < 6) {
            cands.push_back({q, x, y});
            std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.q > b.q; });
        } else if (q > cands.back().q) {
            cands.back() = {q, x, y};
            std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.q > b.q; });
        }
    }

    auto objective = [&](const std::vector<double>& c) {
        Point x{c[0], c[1]}, y{c[2], c[3]};
        if (!domain.contains(x) || !domain.contains(y)) return -std::numeric_limits<double>::infinity();
        if (domain.boundary_distance(x) < 1e-9 || domain.boundary_distance(y) < 1e-9)
            return -std::numeric_limits<double>::infinity();
        if (dist(x, y) < 1e-12) return -std::numeric_limits<double>::infinity();
        return ratio_of(x, y);
    };
    double refined = raw;
    for (const auto& cand : cands) {
        std::vector<double> start{cand.x[0], cand.x[1], cand.y[0], cand.y[1]};
        for (double step : {0.05, 0.005}) {
            auto argmax = detail::nelder_mead_max(objective, start, step, refine_iters);
            refined = std::max(refined, objective(argmax));
            start = argmax;
        }
    }

    rep.estimate = refined;
    rep.detail("raw_estimate", raw);
    rep.detail("refined_estimate", refined);
    double ref_lo = ball ? 1.431 : 1.432;
    double ref_hi = ball ? 1.432 : 1.433;
    rep.detail("reference_interval_low", ref_lo);
    rep.detail("reference_interval_high", ref_hi);
    rep.detail("within_reference", (refined > ref_lo && refined < ref_hi) ? 1.0 : 0.0);
    rep.note(detail::pi_over_log3 + 1e-6 - refined);
    rep.note(refined - 1.0);
    return rep;
}

/// Extremal-configuration suite: on circles internally tangent to the
/// boundary, equal-angle pairs maximize the product of boundary distances at
/// the symmetric position, hence minimize the hyperbolic distance.
inline VerificationReport extremal_config_suite(const DomainSpec& domain, long trials, std::uint64_t seed) {
    bool ball = domain.kind() == DomainKind::unit_ball;
    if (!ball && domain.kind() != DomainKind::half_space)
        fail(errc::unsupported_domain, "extremal suite runs on the ball or the half-space");

    VerificationReport rep;
    rep.suite_id = ball ? "extremal-ball" : "extremal-half";
    rep.seed = seed;
    rep.trials = trials;
    Rng rng(seed);

    using C = std::complex<double>;
    for (long i = 0; i < trials; ++i) {
        double alpha = (i % 5 == 0) ? detail::pi / 2.0 : rng.uniform(0.15, detail::pi - 0.15);
        C ea, center;
        C tangency;
        if (ball) {
            double psi = rng.uniform(0, 2 * detail::pi), s = rng.uniform(0.1, 0.9);
            ea = std::polar(1.0, psi);
            center = s * ea;
            tangency = ea;
        } else {
            double h = rng.uniform(0.2, 2.0);
            center = C(0.0, h);
            tangency = C(0.0, 0.0);
        }

        auto place = [&](double theta, C& x, C& y) {
            if (ball) {
                double s = std::abs(center);
                if (alpha < detail::pi / 2.0) {
                    x = center - ea * (1.0 - s) * std::polar(1.0, alpha - theta);
                    y = center - ea * (1.0 - s) * std::polar(1.0, -(alpha + theta));
                } else if (alpha == detail::pi / 2.0) {
                    x = center + ea * (1.0 - s) * std::polar(1.0, -(detail::pi - theta));
                    y = center + ea * (1.0 - s) * std::polar(1.0, theta);
                } else {
                    x = center + ea * (1.0 - s) * std::polar(1.0, -(detail::pi - alpha + theta));
                    y = center + ea * (1.0 - s) * std::polar(1.0, detail::pi - alpha - theta);
                }
            } else {
                if (alpha < detail::pi / 2.0) {
                    x = center * (1.0 + std::polar(1.0, alpha + theta));
                    y = center * (1.0 + std::polar(1.0, -(alpha - theta)));
                } else if (alpha == detail::pi / 2.0) {
                    x = center * (1.0 - std::polar(1.0, -theta));
                    y = center * (1.0 - std::polar(1.0, detail::pi - theta));
                } else {
                    x = center * (1.0 - std::polar(1.0, -(detail::pi - alpha - theta)));
                    y = center * (1.0 - std::polar(1.0, detail::pi - alpha + theta));
                }
            }
        };

        bool right_angle = alpha == detail::pi / 2.0;
        double theta_sym = right_angle ? detail::pi / 2.0 : 0.0;
        double theta_hi = right_angle ? detail::pi / 2.0 : detail::pi - alpha;
        double theta = rng.uniform(0.05 * theta_hi, 0.95 * theta_hi);

        C x, y, xs, ys;
        place(theta, x, y);
        place(theta_sym, xs, ys);

        Point px{x.real(), x.imag()}, py{y.real(), y.imag()};
        Point pxs{xs.real(), xs.imag()}, pys{ys.real(), ys.imag()};
        Point pz{tangency.real(), tangency.imag()};

        // construction self-checks: both pairs sit on the circle and view
        // the tangency at angle alpha
        rep.note(1e-9 - std::abs(detail::angle_nd(px, pz, py) - alpha));
        rep.note(1e-9 - std::abs(detail::angle_nd(pxs, pz, pys) - alpha));
        rep.note(1e-10 - std::abs(dist(px, py) - dist(pxs, pys)));

        double prod, prod_sym;
        if (ball) {
            prod = (1.0 - std::norm(x)) * (1.0 - std::norm(y));
            prod_sym = (1.0 - std::norm(xs)) * (1.0 - std::norm(ys));
            rep.note(1e-10 - std::abs(std::abs(xs) - std::abs(ys)));
        } else {
            prod = x.imag() * y.imag();
            prod_sym = xs.imag() * ys.imag();
            rep.note(1e-10 - std::abs(xs.imag() - ys.imag()));
        }
        rep.note(prod_sym - prod + 1e-12);
        if (theta > 0.05 * theta_hi && std::abs(theta - theta_sym) > 0.04 * theta_hi)
            rep.note(prod_sym - prod); // strict inequality away from the symmetric position

        // hyperbolic comparison needs interior points
        bool interior = ball ? (std::abs(x) < 1 && std::abs(y) < 1 && std::abs(xs) < 1 && std::abs(ys) < 1)
                             : (x.imag() > 0 && y.imag() > 0 && xs.imag() > 0 && ys.imag() > 0);
        if (interior) {
            double rho_xy = detail::rho_canonical(domain, px, py).value;
            double rho_sym = detail::rho_canonical(domain, pxs, pys).value;
            rep.note(rho_xy - rho_sym + 1e-9);
        }
    }
    return rep;
}

/// Punctured-space relations: the visual angle, quasihyperbolic and distance
/// ratio metrics are tied by v = sqrt(k^2 - log^2(|y|/|x|)) and
/// v <= (pi / log 3) j, with equality at antipodal pairs.
inline VerificationReport punctured_suite(long trials, std::uint64_t seed) {
    VerificationReport rep;
    rep.suite_id = "punctured";
    rep.seed = seed;
    rep.trials = trials;
    Rng rng(seed);
    DomainSpec dom = DomainSpec::punctured_space(2);

    for (long i = 0; i < trials; ++i) {
        Point x = rng.uniform(0.1, 2.0) * rng.direction(2);
        Point y = rng.uniform(0.1, 2.0) * rng.direction(2);
        if (x == y) continue;
        double v = v_punctured(x, y).value;
        double k = k_punctured(x, y).value;
        double jv = j_metric(dom, x, y).value;
        double logr = std::log(y.norm() / x.norm());
        double recon = std::sqrt(std::max(0.0, k * k - logr * logr));
        rep.note(1e-12 * (1.0 + v) - std::abs(v - recon));
        rep.note(detail::pi_over_log3 * jv - v + 1e-9);
        rep.note(k - v + 1e-12); // v <= k

        Point w = rng.uniform(0.1, 2.0) * rng.direction(2);
        Point mw = -1.0 * w;
        double gap = detail::pi_over_log3 * j_metric(dom, w, mw).value - v_punctured(w, mw).value;
        rep.note(1e-9 - std::abs(gap));
    }
    return rep;
}

} // namespace vam
