#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcam/analysis.hpp"
#include "mcam/config.hpp"
#include "mcam/sim_log.hpp"

namespace mcam {

/// Evaluates an evader curvature program. Deterministic and side-effect free;
/// the random program derives each held segment from (seed, segment index).
class EvaderProfile {
public:
    explicit EvaderProfile(const EvaderProfileConfig& cfg);

    [[nodiscard]] CurvatureControl at(double t) const;

    /// a priori bound on sqrt(u^2 + v^2) over all t.
    [[nodiscard]] double curvature_bound() const noexcept;

    /// True when the program has jumps (random profile); jumps happen at multiples of hold_time().
    [[nodiscard]] bool piecewise_constant() const noexcept;
    [[nodiscard]] double hold_time() const noexcept { return cfg_.hold_time; }

private:
    [[nodiscard]] CurvatureControl segment(std::int64_t index) const;

    EvaderProfileConfig cfg_;
};

/// Open-loop evader input of a config at time t >= 0.
[[nodiscard]] CurvatureControl evader_profile(const ScenarioConfig& cfg, double t);

/// Hypotheses implied by a config: speed bounds from the speed profiles, kappa_e_max
/// from the evader program, Gamma(0) and |r(0)| from the initial placement.
/// Throws HypothesisError when the config cannot satisfy them (e.g. A3 for nu_e >= nu_p).
[[nodiscard]] HypothesisSet hypotheses_for(const ScenarioConfig& cfg);

/// r_o of a config (explicit value or |r(0)| / 10).
[[nodiscard]] double resolved_r_o(const ScenarioConfig& cfg);

/// Certificate for a config (valid in either gain mode).
[[nodiscard]] GainCertificate certificate_for(const ScenarioConfig& cfg);

/// Throws ConfigError unless nu_e / nu_p equals `ratio` for constant speeds.
void require_speed_ratio(const ScenarioConfig& cfg, double ratio);

enum class GuidanceLaw { mcpg, ppng };
enum class StopReason { capture, max_time, gamma_threshold };

[[nodiscard]] std::string to_string(GuidanceLaw law);
[[nodiscard]] std::string to_string(StopReason reason);

struct RunResult {
    std::string name;
    GuidanceLaw law = GuidanceLaw::mcpg;
    SimLog log;
    double mu = 0.0;
    double navigation_constant = 0.0;  // PPNG runs only
    double r_o = 0.0;
    double epsilon = 0.0;  // closeness used for time-to-threshold
    std::optional<GainCertificate> certificate;
    StopReason stop = StopReason::max_time;
};

/// Integrates the engagement until the first stop condition holds.
/// Guidance degeneracy surfaces as DegeneracyError carrying the time stamp.
[[nodiscard]] RunResult run(const ScenarioConfig& cfg, GuidanceLaw law = GuidanceLaw::mcpg);

struct GuidanceComparison {
    RunResult mcpg;
    RunResult ppng;
    /// Per logged MCPG tick: |A_mcpg - (N_eff / N) A_ppng| / |A_mcpg| (0 when both vanish).
    std::vector<double> relative_residual;
    std::vector<double> absolute_residual;
    [[nodiscard]] double max_relative_residual() const noexcept;
};

/// Runs MCPG and PPNG on the same config and evaluates both laws on every MCPG tick.
[[nodiscard]] GuidanceComparison compare_guidance(const ScenarioConfig& cfg);

struct SweepRow {
    double mu = 0.0;
    std::optional<double> time_to_threshold;
    double final_gamma = 0.0;
    double final_time = 0.0;
};

/// Runs the config once per gain (explicit mu), concurrently; rows follow `gains` order.
[[nodiscard]] std::vector<SweepRow> sweep(const ScenarioConfig& cfg, const std::vector<double>& gains);

}  // namespace mcam
