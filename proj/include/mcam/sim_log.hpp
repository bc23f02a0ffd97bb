#pragma once

#include <vector>

#include "mcam/dynamics.hpp"

namespace mcam {

/// One logged tick of an engagement.
struct SimRecord {
    double t = 0.0;
    ParticleState pursuer;
    ParticleState evader;
    CurvatureControl pursuer_control;
    CurvatureControl evader_control;
    double gamma = 0.0;
    double range = 0.0;      // |r|
    double w_norm = 0.0;     // |w|
    double rdot_norm = 0.0;  // |r_dot|
};

/// Uniformly sampled time series with strictly increasing t.
struct SimLog {
    std::vector<SimRecord> records;
    double sample_interval = 0.0;

    [[nodiscard]] bool empty() const noexcept { return records.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return records.size(); }
};

}  // namespace mcam
