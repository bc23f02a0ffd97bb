#pragma once

#include <optional>

#include "mcam/dynamics.hpp"
#include "mcam/sim_log.hpp"

namespace mcam {

/// Bounds under which high-gain MCPG reaches motion camouflage in finite time.
/// Tags A1..A7 in error messages refer to the hypothesis each field feeds.
struct HypothesisSet {
    double nu_p_low = 1.0;   // A1
    double nu_p_high = 1.0;  // A1
    double nu_e_low = 0.9;   // A2
    double nu_e_high = 0.9;  // A2
    double nu_max = 0.9;     // A3: nu_e / nu_p <= nu_max < 1
    double alpha_p = 0.0;    // A5: |d nu_p / dt| bound
    double alpha_e = 0.0;    // A5: |d nu_e / dt| bound
    double kappa_e_max = 0.0;  // A4: bound on sqrt(u_e^2 + v_e^2)
    double gamma0 = 0.0;       // A6: Gamma(0) < 1
    double r0_initial = 10.0;  // A7: |r(0)| > 0
};

/// Throws HypothesisError("A1".."A7", ...) for the first violated hypothesis.
void validate(const HypothesisSet& h);

/// Constants realising the accessibility argument for one engagement.
struct GainCertificate {
    double epsilon = 0.0;
    double r_o = 0.0;
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double T = 0.0;
    double mu = 0.0;
    double gamma0 = 0.0;
    double c2_required = 0.0;  // the lower bound c2 had to clear
};

/// Smallest c2 accepted by certify() when the required bound is not positive.
inline constexpr double kMinC2 = 1e-9;

/// d Gamma / dt along trajectories for the given states and curvature inputs,
/// using the speed rates stored in the states.
/// Throws DegeneracyError when |r| or |r_dot| is below the guard.
[[nodiscard]] double gamma_dot(const ParticleState& pursuer, const ParticleState& evader,
                               const CurvatureControl& pursuer_control, const CurvatureControl& evader_control);

/// The only part of d Gamma / dt the pursuer controls enter:
/// nu_p^2 [(b . y_p) u_p + (b . z_p) v_p]. Nonpositive under MCPG when nu_p > nu_e.
[[nodiscard]] double pursuer_control_term(const ParticleState& pursuer, const ParticleState& evader,
                                          const CurvatureControl& pursuer_control);

/// c1 = [alpha_p + alpha_e + nu_e_high^2 kappa_e_max] / [nu_p_low (1 - nu_max)].
[[nodiscard]] double compute_c1(const HypothesisSet& h);

/// mu = K (nu_p_high (1 + nu_max) / r_o + c0), K = nu_p_high (1 + nu_max) / (nu_p_low^3 (1 - nu_max)).
[[nodiscard]] double mu_for_c0(const HypothesisSet& h, double r_o, double c0);

/// Inverse of mu_for_c0.
[[nodiscard]] double c0_from_mu(const HypothesisSet& h, double r_o, double mu);

/// epsilon = min(epsilon_o, 1 - gamma0^2). Throws HypothesisError("A6") when gamma0 = 1
/// and ConfigError when epsilon_o is outside (0, 1) or the result is not positive.
[[nodiscard]] double select_epsilon(double epsilon_o, double gamma0);

/// T = (|r(0)| - r_o) / (nu_p_high (1 + nu_max)); throws unless 0 < r_o < |r(0)|.
[[nodiscard]] double horizon_T(const HypothesisSet& h, double r_o);

/// tanh(atanh(gamma0) - c2 t). Throws ConfigError for |gamma0| >= 1.
[[nodiscard]] double gamma_envelope(double gamma0, double c2, double t);

/// Lower bound on c2 guaranteeing Gamma(T) <= -1 + epsilon:
/// nu_p_high (1 + nu_max) (atanh(gamma0) - ln(epsilon / (2 - epsilon)) / 2) / (|r(0)| - r_o).
[[nodiscard]] double required_c2(const HypothesisSet& h, double r_o, double epsilon);

/// Chains select_epsilon -> compute_c1 -> required_c2 -> c0 -> mu_for_c0 -> horizon_T.
/// c2 is the smallest admissible value (at least kMinC2) and c0 the smallest value
/// consistent with both c2 and c0 >= 2 c1 / sqrt(epsilon).
[[nodiscard]] GainCertificate certify(const HypothesisSet& h, double epsilon_o, double r_o);

/// Largest angle (radians) between a post-transient baseline direction and the
/// mean of those directions. The first transient_fraction of the logged time span is skipped.
[[nodiscard]] double baseline_dispersion(const SimLog& log, double transient_fraction = 0.05);

/// First logged time with Gamma <= -1 + epsilon, if any.
[[nodiscard]] std::optional<double> time_to_threshold(const SimLog& log, double epsilon);

}  // namespace mcam
