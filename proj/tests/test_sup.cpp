#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "vam/metrics.hpp"
#include "vam/random.hpp"
#include "vam/sup.hpp"
#include "vam/verify.hpp"

using namespace vam;

namespace {
constexpr double pi = 3.14159265358979323846;

DomainSpec random_convex_polygon(std::uint64_t seed, int sides = 8) {
    Rng rng(seed);
    std::vector<double> angs;
    for (int i = 0; i < sides; ++i) angs.push_back(rng.uniform(0, 2 * pi));
    std::sort(angs.begin(), angs.end());
    std::vector<std::array<double, 2>> verts;
    for (double a : angs) {
        double r = rng.uniform(0.8, 1.4);
        verts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    return DomainSpec::polygon(verts);
}

Point sample_in(Rng& rng, const DomainSpec& dom, double margin = 1e-4) {
    for (;;) {
        Point p = dom.kind() == DomainKind::unit_ball
                      ? rng.in_ball(2, margin)
                      : Point{rng.uniform(-1.6, 1.6), rng.uniform(-1.6, 1.6)};
        if (dom.contains(p) && dom.boundary_distance(p) > margin) return p;
    }
}
} // namespace

TEST_CASE("sampler options are validated") {
    CHECK_THROWS_AS(BoundarySampler(DomainSpec::unit_ball(2), {.coarse_count = 8}), error);
    CHECK_THROWS_AS(BoundarySampler(DomainSpec::unit_ball(2), {.refine_tolerance = 0.0}), error);
    BoundarySampler S(DomainSpec::half_space(2));
    CHECK(S.include_infinity());
    BoundarySampler B(DomainSpec::unit_ball(2));
    CHECK_FALSE(B.include_infinity());
}

TEST_CASE("visual angle supremum on canonical domains") {
    BoundarySampler S(DomainSpec::unit_ball(2));
    CHECK(v_sup(S, Point{0.0, 0.0}, Point{0.5, 0.0}).value == doctest::Approx(pi / 6).epsilon(1e-6));
    CHECK(v_sup(S, Point{0.1, 0.1}, Point{0.1, 0.1}).value == 0.0);
    CHECK_THROWS_AS(v_sup(S, Point{2.0, 0.0}, Point{0.0, 0.0}), error);
    CHECK_THROWS_AS(v_sup(S, Point{1.0 - 1e-14, 0.0}, Point{0.0, 0.0}), error); // on the boundary

    BoundarySampler P(DomainSpec::punctured_space(2));
    CHECK(v_sup(P, Point{1.0, 0.0}, Point{0.0, 1.0}).value == doctest::Approx(pi / 2).epsilon(1e-12));
    // the puncture lies on the open segment between antipodal points
    CHECK(v_sup(P, Point{1.0, 0.0}, Point{-1.0, 0.0}).value == doctest::Approx(pi).epsilon(1e-12));
    // same-ray pairs are at pseudo-distance zero
    CHECK(v_sup(P, Point{1.0, 0.0}, Point{2.0, 0.0}).value == 0.0);
}

TEST_CASE("closed forms match the sampling oracle on a thousand random pairs") {
    SUBCASE("ball") {
        DomainSpec d = DomainSpec::unit_ball(2);
        BoundarySampler S(d);
        Rng rng(7);
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            auto [x, y] = detail::sample_pair(rng, d);
            worst = std::max(worst, std::abs(v_ball(x, y).value - v_sup(S, x, y).value));
        }
        CHECK(worst < 1e-6);
    }
    SUBCASE("half-plane") {
        DomainSpec d = DomainSpec::half_space(2);
        BoundarySampler S(d);
        Rng rng(8);
        double worst = 0;
        for (int i = 0; i < 1000; ++i) {
            auto [x, y] = detail::sample_pair(rng, d);
            worst = std::max(worst, std::abs(v_half(x, y).value - v_sup(S, x, y).value));
        }
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("triangular ratio metric") {
    BoundarySampler S(DomainSpec::unit_ball(2));
    CHECK(s_triangular(S, Point{0.0, 0.0}, Point{0.5, 0.0}).value == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(s_triangular(S, Point{0.3, 0.3}, Point{0.3, 0.3}).value == 0.0);

    SUBCASE("half-plane values match the reflection formula") {
        DomainSpec h = DomainSpec::half_space(2);
        BoundarySampler SH(h);
        CHECK(s_triangular(SH, Point{0.0, 1.0}, Point{0.0, 2.0}).value == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
        Rng rng(9);
        for (int i = 0; i < 300; ++i) {
            Point x = rng.in_half(2, 2.0, 1e-3), y = rng.in_half(2, 2.0, 1e-3);
            if (x == y) continue;
            Point ybar{y[0], -y[1]};
            double expected = dist(x, y) / dist(x, ybar);
            CHECK(s_triangular(SH, x, y).value == doctest::Approx(expected).epsilon(1e-7));
        }
    }
}

TEST_CASE("Ptolemaic angular metric") {
    DomainSpec h = DomainSpec::half_space(2);
    BoundarySampler SH(h);
    CHECK(r_ptolemaic(SH, Point{0.3, 1.0}, Point{0.3, 1.0}).value == 0.0);
    CHECK(r_ptolemaic(SH, Point{0.0, 1.0}, Point{0.0, 2.0}).value >= 1.0 / 3.0 - 1e-9);

    BoundarySampler SB(DomainSpec::unit_ball(2));
    double rv = r_ptolemaic(SB, Point{0.0, 0.0}, Point{0.5, 0.0}).value;
    CHECK(rv >= 1.0 / 3.0 - 1e-9);
    CHECK(rv <= 1.0);
}

TEST_CASE("double angle metric") {
    DomainSpec h = DomainSpec::half_space(2);
    BoundarySampler SH(h);
    CHECK(v_double(SH, Point{0.4, 0.7}, Point{0.4, 0.7}).value == 0.0);

    SUBCASE("dominates the visual angle metric when infinity is on the boundary") {
        Rng rng(10);
        for (int i = 0; i < 200; ++i) {
            auto [x, y] = detail::sample_pair(rng, h);
            CHECK(v_double(SH, x, y).value >= v_half(x, y).value - 1e-6);
        }
    }

    SUBCASE("fixing one boundary point at infinity reduces to the single-point integrand") {
        Rng rng(11);
        for (int i = 0; i < 1000; ++i) {
            Point x = rng.in_half(2), y = rng.in_half(2), z{rng.uniform(-3, 3), 0.0};
            if (x == y || z == x || z == y) continue;
            double dxz = dist(x, z), dyz = dist(y, z), dxy = dist(x, y);
            double bracket = dxz / dyz + dyz / dxz - dxy * dxy / (dxz * dyz);
            double reduced = std::acos(std::clamp(bracket / 2.0, -1.0, 1.0));
            CHECK(std::abs(reduced - detail::angle_nd(x, z, y)) < 1e-11);
        }
    }
}

TEST_CASE("sin-half transform") {
    CHECK(starred(MetricValue{pi, MetricId::v}).value == doctest::Approx(1.0));
    CHECK(starred(MetricValue{0.0, MetricId::v}).value == 0.0);
    CHECK(starred(MetricValue{pi / 2, MetricId::vbar}).value == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-14));
    CHECK(starred(MetricValue{pi / 2, MetricId::vbar}).id == MetricId::vbar_star);
    CHECK_THROWS_AS(starred(MetricValue{0.5, MetricId::s}), error);
}

TEST_CASE("segment through the boundary forces the maximal angle") {
    DomainSpec notch = DomainSpec::polygon(
        {{-2, -1}, {2, -1}, {2, 1}, {0.1, 1}, {0.1, -0.5}, {-0.1, -0.5}, {-0.1, 1}, {-2, 1}});
    BoundarySampler S(notch);
    CHECK(v_sup(S, Point{-1.0, 0.5}, Point{1.0, 0.5}).value == doctest::Approx(pi));
    CHECK(s_triangular(S, Point{-1.0, 0.5}, Point{1.0, 0.5}).value == doctest::Approx(1.0));
}

TEST_CASE("domain monotonicity") {
    DomainSpec square = DomainSpec::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    BoundarySampler S(square);
    Point x{-0.5, 0.0}, y{0.5, 0.0};
    // the inscribed disk touches the square where the supremum is attained
    CHECK(v_sup(S, x, y).value >= v_ball(x, y).value - 1e-6);

    DomainSpec small = DomainSpec::polygon({{-0.9, -0.9}, {0.9, -0.9}, {0.9, 0.9}, {-0.9, 0.9}});
    BoundarySampler Ss(small);
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        Point a{rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
        Point b{rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)};
        if (a == b) continue;
        CHECK(v_sup(Ss, a, b).value >= v_sup(S, a, b).value - 1e-7);
        CHECK(s_triangular(Ss, a, b).value >= s_triangular(S, a, b).value - 1e-7);
    }
}

TEST_CASE("similarity invariance of the supremum evaluation") {
    DomainSpec poly = DomainSpec::polygon({{-1, -0.2}, {0.8, -0.7}, {1.1, 0.5}, {0.0, 1.0}, {-0.9, 0.6}});
    BoundarySampler S(poly);
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        double phi = rng.uniform(0, 2 * pi), lam = rng.uniform(0.3, 3.0);
        double tx = rng.uniform(-4, 4), ty = rng.uniform(-4, 4);
        double c = std::cos(phi), s = std::sin(phi);
        auto tr = [&](double px, double py) {
            return std::array<double, 2>{lam * (c * px - s * py) + tx, lam * (s * px + c * py) + ty};
        };
        std::vector<std::array<double, 2>> tv;
        for (const auto& p : poly.polygon_vertices()) tv.push_back(tr(p.x, p.y));
        BoundarySampler S2(DomainSpec::polygon(tv));
        Point a{0.1, 0.1}, b{-0.3, 0.2};
        auto ta = tr(a[0], a[1]), tb = tr(b[0], b[1]);
        double v0 = v_sup(S, a, b).value;
        double v1 = v_sup(S2, Point{ta[0], ta[1]}, Point{tb[0], tb[1]}).value;
        CHECK(std::abs(v0 - v1) < 1e-8);
    }
}

TEST_CASE("triangle inequalities on random triples") {
    // smaller counts here; the acceptance suite runs the full battery
    for (int domain_case = 0; domain_case < 2; ++domain_case) {
        DomainSpec dom = domain_case == 0 ? DomainSpec::unit_ball(2) : random_convex_polygon(99);
        BoundarySampler S(dom);
        Rng rng(1234);
        for (int i = 0; i < 300; ++i) {
            Point x = sample_in(rng, dom), y = sample_in(rng, dom), z = sample_in(rng, dom);
            if (x == y || y == z || x == z) continue;
            auto tri = [&](auto f) {
                double xy = f(x, y), xz = f(x, z), zy = f(z, y);
                CHECK(xz + zy - xy >= -1e-7);
            };
            if (domain_case == 0) {
                tri([&](const Point& p, const Point& q) { return v_ball(p, q).value; });
                tri([&](const Point& p, const Point& q) { return rho_star(dom, p, q).value; });
                tri([&](const Point& p, const Point& q) { return std::sin(v_ball(p, q).value / 2); });
            } else {
                tri([&](const Point& p, const Point& q) { return v_sup(S, p, q).value; });
                tri([&](const Point& p, const Point& q) { return std::sin(v_sup(S, p, q).value / 2); });
            }
            tri([&](const Point& p, const Point& q) { return s_triangular(S, p, q).value; });
            tri([&](const Point& p, const Point& q) { return r_ptolemaic(S, p, q).value; });
            tri([&](const Point& p, const Point& q) { return v_double(S, p, q).value; });
        }
    }
}

TEST_CASE("mutual orderings of the metrics") {
    DomainSpec h = DomainSpec::half_space(2);
    BoundarySampler SH(h);
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        auto [x, y] = detail::sample_pair(rng, h);
        double s = s_triangular(SH, x, y).value;
        double r = r_ptolemaic(SH, x, y).value;
        double v = v_half(x, y).value;
        double vb = v_double(SH, x, y).value;
        CHECK(r - s >= -1e-7);
        CHECK(vb - v >= -1e-6);
        CHECK(s - std::sin(v / 2) >= -1e-7);
        CHECK(r - std::sin(vb / 2) >= -1e-7);
    }
    DomainSpec b = DomainSpec::unit_ball(2);
    BoundarySampler SB(b);
    Rng rng2(15);
    for (int i = 0; i < 200; ++i) {
        auto [x, y] = detail::sample_pair(rng2, b);
        double s = s_triangular(SB, x, y).value;
        double r = r_ptolemaic(SB, x, y).value;
        double v = v_ball(x, y).value;
        double vb = v_double(SB, x, y).value;
        CHECK(s - std::sin(v / 2) >= -1e-7);
        CHECK(r - std::sin(vb / 2) >= -1e-7);
    }
}

TEST_CASE("pseudometric warnings") {
    BoundarySampler punct(DomainSpec::punctured_space(2));
    CHECK(punct.pseudometric_warning_v());
    BoundarySampler half(DomainSpec::half_space(2));
    CHECK_FALSE(half.pseudometric_warning_v());
    CHECK(half.pseudometric_warning_vbar()); // boundary is a single line
    BoundarySampler ball(DomainSpec::unit_ball(2));
    CHECK_FALSE(ball.pseudometric_warning_v());
    CHECK(ball.pseudometric_warning_vbar()); // boundary is a single circle
    BoundarySampler poly(DomainSpec::polygon({{-1, -1}, {1, -1}, {0, 1}}));
    CHECK_FALSE(poly.pseudometric_warning_v());
    CHECK_FALSE(poly.pseudometric_warning_vbar());
    BoundarySampler seg(DomainSpec::generic2d({PolylinePiece{{{-1.0, 0.0}, {1.0, 0.0}}, false}}));
    CHECK(seg.pseudometric_warning_v());
}

TEST_CASE("sup values respect the metric ranges") {
    DomainSpec dom = random_convex_polygon(101);
    BoundarySampler S(dom);
    Rng rng(16);
    for (int i = 0; i < 200; ++i) {
        Point x = sample_in(rng, dom), y = sample_in(rng, dom);
        if (x == y) continue;
        CHECK(v_sup(S, x, y).value <= pi);
        CHECK(s_triangular(S, x, y).value <= 1.0);
        CHECK(r_ptolemaic(S, x, y).value <= 1.0);
        CHECK(v_double(S, x, y).value <= pi);
    }
}

TEST_CASE("punctured space pair metrics use the origin and infinity") {
    BoundarySampler P(DomainSpec::punctured_space(2));
    Point x{1.0, 0.0}, y{0.0, 2.0};
    double expected = dist(x, y) / (x.norm() + y.norm());
    CHECK(s_triangular(P, x, y).value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r_ptolemaic(P, x, y).value == doctest::Approx(expected).epsilon(1e-12));
}
