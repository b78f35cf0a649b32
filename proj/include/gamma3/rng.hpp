#pragma once

#include <cstdint>

#include "gamma3/geometry.hpp"

namespace gamma3 {

/// Deterministic splitmix64 generator. Hand-rolled so that verification
/// reports are reproducible across standard-library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Random point on the unit circle.
    Complex unit() {
        const double t = uniform(0.0, kTwoPi);
        return {std::cos(t), std::sin(t)};
    }

    Complex complex_in_disc(double radius) {
        while (true) {
            const double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y <= 1.0) return {radius * x, radius * y};
        }
    }

  private:
    std::uint64_t state_;
};

}  // namespace gamma3
