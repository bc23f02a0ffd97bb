#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "mcam/dynamics.hpp"
#include "mcam/geometry.hpp"

namespace mcam {

struct AgentConfig {
    Vec3 position;
    Vec3 heading{1.0, 0.0, 0.0};
    SpeedProfile speed = SpeedProfile::constant(1.0);
};

/// Open-loop evader curvature program.
///   straight:  u = v = 0
///   sinusoid:  u = A sin(W t + phi), v = A cos(W t + phi)
///   random:    seeded uniform samples in [-k, k]^2, held for hold_time, clipped to |(u, v)| <= k
///   circular:  constant (u, v)
struct EvaderProfileConfig {
    enum class Kind { straight, sinusoid, random, circular };
    Kind kind = Kind::straight;
    double amplitude = 0.3;
    double angular_frequency = 1.0;
    double phase = 0.0;
    std::uint64_t seed = 0;
    double hold_time = 0.5;
    double curvature_bound = 0.3;
    double u = 0.0;
    double v = 0.0;
};

struct GainConfig {
    enum class Mode { explicit_mu, certificate };
    Mode mode = Mode::certificate;
    double mu = 0.0;                 // explicit mode only
    double epsilon_o = 0.02;         // target closeness of Gamma to -1
    std::optional<double> r_o;       // defaults to |r(0)| / 10
};

struct StopConfig {
    double capture_radius = 0.05;
    double max_time = 20.0;
    std::optional<double> gamma_threshold;
};

struct ScenarioConfig {
    std::string name = "scenario";
    AgentConfig pursuer;
    AgentConfig evader;
    EvaderProfileConfig profile;
    GainConfig gain;
    double dt = 1e-3;
    StopConfig stop;
    std::optional<double> curvature_cap;
    std::optional<double> nu_max;  // defaults to nu_e_high / nu_p_low
    int log_every = 1;
    std::optional<double> navigation_constant;  // PPNG N, defaults to mu nu_p r_o
    double transient_fraction = 0.05;
};

/// Throws ConfigError on any invariant violation (dt <= 0, negative capture radius, ...).
void validate(const ScenarioConfig& cfg);

/// Parses a JSON document; unknown keys anywhere are rejected with ConfigError.
[[nodiscard]] ScenarioConfig parse_config(const std::string& json_text);

/// Reads and parses a config file. Throws IoError when the file cannot be read.
[[nodiscard]] ScenarioConfig load_config(const std::filesystem::path& path);

/// Serialises a config back to JSON text accepted by parse_config.
[[nodiscard]] std::string to_json(const ScenarioConfig& cfg);

}  // namespace mcam
