#include "mcam/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcam/errors.hpp"
#include "mcam/guidance.hpp"

namespace mcam {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// b = -(1/|r_dot|^3) r_dot x (r_dot x r^). Equal to (r^ - Gamma r_dot^)/|r_dot|
// but free of the cancellation that form suffers near Gamma = -1.
Vec3 gamma_gradient(const Vec3& r, const Vec3& r_dot) {
    const double rn = norm(r);
    const double vn = norm(r_dot);
    return -(cross(r_dot, cross(r_dot, r / rn))) / (vn * vn * vn);
}

}  // namespace

void validate(const HypothesisSet& h) {
    if (!positive_finite(h.nu_p_low) || !std::isfinite(h.nu_p_high) || h.nu_p_high < h.nu_p_low) {
        throw HypothesisError("A1", "pursuer speed bounds need 0 < nu_p_low <= nu_p_high < inf");
    }
    if (!positive_finite(h.nu_e_low) || !std::isfinite(h.nu_e_high) || h.nu_e_high < h.nu_e_low) {
        throw HypothesisError("A2", "evader speed bounds need 0 < nu_e_low <= nu_e_high < inf");
    }
    if (!positive_finite(h.nu_max) || h.nu_max >= 1.0) {
        throw HypothesisError("A3", "speed ratio bound nu_max must lie in (0, 1), got " + std::to_string(h.nu_max));
    }
    if (!std::isfinite(h.kappa_e_max) || h.kappa_e_max < 0.0) {
        throw HypothesisError("A4", "evader curvature bound must be finite and nonnegative");
    }
    if (!std::isfinite(h.alpha_p) || !std::isfinite(h.alpha_e) || h.alpha_p < 0.0 || h.alpha_e < 0.0) {
        throw HypothesisError("A5", "speed-rate bounds must be finite and nonnegative");
    }
    if (!std::isfinite(h.gamma0) || h.gamma0 < -1.0 || h.gamma0 >= 1.0) {
        throw HypothesisError("A6", "initial Gamma must lie in [-1, 1), got " + std::to_string(h.gamma0));
    }
    if (!positive_finite(h.r0_initial)) {
        throw HypothesisError("A7", "initial baseline length must be positive");
    }
}

double gamma_dot(const ParticleState& pursuer, const ParticleState& evader, const CurvatureControl& pursuer_control,
                 const CurvatureControl& evader_control) {
    const Vec3 r = baseline(pursuer.position, evader.position);
    const Vec3 r_dot = relative_velocity(pursuer, evader);
    const double dep = departure(r, r_dot);  // guards |r| and |r_dot|

    const double nu_p2 = pursuer.speed * pursuer.speed;
    const double nu_e2 = evader.speed * evader.speed;
    const Vec3 r_ddot = pursuer.speed_rate * pursuer.frame.x - evader.speed_rate * evader.frame.x +
                        nu_p2 * (pursuer_control.u * pursuer.frame.y + pursuer_control.v * pursuer.frame.z) -
                        nu_e2 * (evader_control.u * evader.frame.y + evader_control.v * evader.frame.z);

    return norm(r_dot) / norm(r) * dep + dot(gamma_gradient(r, r_dot), r_ddot);
}

double pursuer_control_term(const ParticleState& pursuer, const ParticleState& evader,
                            const CurvatureControl& pursuer_control) {
    const Vec3 r = baseline(pursuer.position, evader.position);
    const Vec3 r_dot = relative_velocity(pursuer, evader);
    (void)departure(r, r_dot);  // guards
    const Vec3 b = gamma_gradient(r, r_dot);
    return pursuer.speed * pursuer.speed *
           (dot(b, pursuer.frame.y) * pursuer_control.u + dot(b, pursuer.frame.z) * pursuer_control.v);
}

double compute_c1(const HypothesisSet& h) {
    validate(h);
    const double num = h.alpha_p + h.alpha_e + h.nu_e_high * h.nu_e_high * h.kappa_e_max;
    return num / (h.nu_p_low * (1.0 - h.nu_max));
}

namespace {

double mu_scale(const HypothesisSet& h) {
    return h.nu_p_high * (1.0 + h.nu_max) / (h.nu_p_low * h.nu_p_low * h.nu_p_low * (1.0 - h.nu_max));
}

void check_r_o(double r_o) {
    if (!positive_finite(r_o)) {
        throw ConfigError("r_o must be positive, got " + std::to_string(r_o));
    }
}

}  // namespace

double mu_for_c0(const HypothesisSet& h, double r_o, double c0) {
    validate(h);
    check_r_o(r_o);
    return mu_scale(h) * (h.nu_p_high * (1.0 + h.nu_max) / r_o + c0);
}

double c0_from_mu(const HypothesisSet& h, double r_o, double mu) {
    validate(h);
    check_r_o(r_o);
    return mu / mu_scale(h) - h.nu_p_high * (1.0 + h.nu_max) / r_o;
}

double select_epsilon(double epsilon_o, double gamma0) {
    if (!(epsilon_o > 0.0 && epsilon_o < 1.0)) {
        throw ConfigError("epsilon_o must lie in (0, 1), got " + std::to_string(epsilon_o));
    }
    if (!std::isfinite(gamma0) || gamma0 >= 1.0 || gamma0 < -1.0) {
        throw HypothesisError("A6", "initial Gamma must lie in [-1, 1), got " + std::to_string(gamma0));
    }
    const double eps = std::min(epsilon_o, 1.0 - gamma0 * gamma0);
    if (!(eps > 0.0)) {
        throw ConfigError("Gamma(0) = -1 leaves no admissible epsilon");
    }
    return eps;
}

double horizon_T(const HypothesisSet& h, double r_o) {
    validate(h);
    check_r_o(r_o);
    if (!(r_o < h.r0_initial)) {
        throw ConfigError("r_o must be smaller than the initial baseline length |r(0)|");
    }
    return (h.r0_initial - r_o) / (h.nu_p_high * (1.0 + h.nu_max));
}

double gamma_envelope(double gamma0, double c2, double t) {
    if (!(std::abs(gamma0) < 1.0)) {
        throw ConfigError("envelope needs |Gamma(0)| < 1");
    }
    return std::tanh(std::atanh(gamma0) - c2 * t);
}

double required_c2(const HypothesisSet& h, double r_o, double epsilon) {
    validate(h);
    check_r_o(r_o);
    if (!(r_o < h.r0_initial)) {
        throw ConfigError("r_o must be smaller than the initial baseline length |r(0)|");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw ConfigError("epsilon must lie in (0, 1)");
    }
    const double target = 0.5 * std::log(epsilon / (2.0 - epsilon));
    return h.nu_p_high * (1.0 + h.nu_max) * (std::atanh(h.gamma0) - target) / (h.r0_initial - r_o);
}

GainCertificate certify(const HypothesisSet& h, double epsilon_o, double r_o) {
    validate(h);
    check_r_o(r_o);
    if (!(r_o < h.r0_initial)) {
        throw ConfigError("r_o must be smaller than the initial baseline length |r(0)|");
    }
    GainCertificate cert;
    cert.gamma0 = h.gamma0;
    cert.r_o = r_o;
    cert.epsilon = select_epsilon(epsilon_o, h.gamma0);
    cert.c1 = compute_c1(h);
    cert.c2_required = required_c2(h, r_o, cert.epsilon);

    const double c1_term = cert.c1 / std::sqrt(cert.epsilon);
    const double c2_min = std::max(cert.c2_required, kMinC2);
    cert.c0 = std::max(c2_min + c1_term, 2.0 * c1_term);
    cert.c2 = cert.c0 - c1_term;
    cert.mu = mu_for_c0(h, r_o, cert.c0);
    cert.T = horizon_T(h, r_o);
    return cert;
}

double baseline_dispersion(const SimLog& log, double transient_fraction) {
    if (log.empty()) {
        throw ConfigError("baseline dispersion of an empty log");
    }
    if (!(transient_fraction >= 0.0 && transient_fraction < 1.0)) {
        throw ConfigError("transient fraction must lie in [0, 1)");
    }
    const double t0 = log.records.front().t;
    const double t_start = t0 + transient_fraction * (log.records.back().t - t0);

    std::vector<Vec3> directions;
    for (const auto& rec : log.records) {
        if (rec.t >= t_start) {
            directions.push_back(normalized(baseline(rec.pursuer.position, rec.evader.position)));
        }
    }
    Vec3 sum{};
    for (const auto& d : directions) {
        sum += d;
    }
    const Vec3 mean = normalized(sum);
    double worst = 0.0;
    for (const auto& d : directions) {
        worst = std::max(worst, angle_between(d, mean));
    }
    return worst;
}

std::optional<double> time_to_threshold(const SimLog& log, double epsilon) {
    for (const auto& rec : log.records) {
        if (rec.gamma <= -1.0 + epsilon) {
            return rec.t;
        }
    }
    return std::nullopt;
}

}  // namespace mcam
