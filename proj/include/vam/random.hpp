#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "vam/point.hpp"

namespace vam {

/// Deterministic random source.  Variates are derived from the raw 64-bit
/// stream directly so that a seed pins the exact sample sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * unit(); }

    int index(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

    /// Uniform in the open unit ball, rejecting a thin boundary shell.
    Point in_ball(int n, double margin = 1e-6) {
        for (;;) {
            std::vector<double> c(static_cast<size_t>(n));
            double s = 0;
            for (double& v : c) {
                v = uniform(-1.0, 1.0);
                s += v * v;
            }
            if (s < (1.0 - margin) * (1.0 - margin)) return Point(std::move(c));
        }
    }

    /// Point of the unit ball with 1-|x| of order 10^-k, k up to `depth`.
    Point in_ball_near_boundary(int n, double depth = 6.0) {
        Point d = direction(n);
        double r = 1.0 - std::pow(10.0, -uniform(0.5, depth));
        return r * d;
    }

    /// Uniform in the half-space box (-extent, extent)^{n-1} x (margin, extent).
    Point in_half(int n, double extent = 2.0, double margin = 1e-6) {
        std::vector<double> c(static_cast<size_t>(n));
        for (size_t i = 0; i + 1 < c.size(); ++i) c[i] = uniform(-extent, extent);
        c.back() = uniform(margin, extent);
        return Point(std::move(c));
    }

    /// Half-space point whose height is of order 10^-k, k up to `depth`.
    Point in_half_near_boundary(int n, double extent = 2.0, double depth = 6.0) {
        std::vector<double> c(static_cast<size_t>(n));
        for (size_t i = 0; i + 1 < c.size(); ++i) c[i] = uniform(-extent, extent);
        c.back() = std::pow(10.0, -uniform(0.5, depth));
        return Point(std::move(c));
    }

    Point direction(int n) {
        for (;;) {
            std::vector<double> c(static_cast<size_t>(n));
            double s = 0;
            for (double& v : c) {
                v = uniform(-1.0, 1.0);
                s += v * v;
            }
            if (s > 1e-8 && s <= 1.0) {
                double inv = 1.0 / std::sqrt(s);
                for (double& v : c) v *= inv;
                return Point(std::move(c));
            }
        }
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace vam
