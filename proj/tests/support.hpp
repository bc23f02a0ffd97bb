#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "mcam/geometry.hpp"

namespace mcam::test {

inline std::string scenario_path(const std::string& name) { return std::string(MCAM_SCENARIO_DIR) + "/" + name; }

// Hand-rolled generator for property tests; fixed seed per test keeps failures reproducible.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    Vec3 vec(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}; }

    Vec3 nonzero_vec(double scale = 1.0, double min_norm = 1e-2) {
        for (;;) {
            const Vec3 v = vec(scale);
            if (norm(v) > min_norm) {
                return v;
            }
        }
    }

    Vec3 unit() { return normalized(nonzero_vec(1.0, 0.1)); }

private:
    std::mt19937_64 rng_;
};

inline double max_abs(const Vec3& a) { return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)}); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

}  // namespace mcam::test
