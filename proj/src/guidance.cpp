#include "mcam/guidance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcam/errors.hpp"

namespace mcam {

namespace {

double checked_range(const Vec3& r) {
    const double n = norm(r);
    if (!(n >= kGuidanceGuard)) {
        throw DegeneracyError("baseline length " + std::to_string(n) + " is below the non-collision guard");
    }
    return n;
}

double checked_speed(const Vec3& r_dot) {
    const double n = norm(r_dot);
    if (!(n >= kGuidanceGuard)) {
        throw DegeneracyError("relative speed " + std::to_string(n) + " is below the guard");
    }
    return n;
}

}  // namespace

EngagementView make_view(const ParticleState& pursuer, const ParticleState& evader) noexcept {
    return {baseline(pursuer.position, evader.position), relative_velocity(pursuer, evader), pursuer.frame.x,
            pursuer.frame.y, pursuer.frame.z};
}

Vec3 baseline(const Vec3& r_p, const Vec3& r_e) noexcept { return r_p - r_e; }

Vec3 relative_velocity(const ParticleState& pursuer, const ParticleState& evader) noexcept {
    return pursuer.velocity() - evader.velocity();
}

Vec3 transverse_w(const Vec3& r, const Vec3& r_dot) {
    const double rn = checked_range(r);
    return cross(r, cross(r_dot, r)) / (rn * rn);
}

Vec3 transverse_w_projection(const Vec3& r, const Vec3& r_dot) {
    const Vec3 rhat = r / checked_range(r);
    return r_dot - dot(rhat, r_dot) * rhat;
}

double gamma(const Vec3& r, const Vec3& r_dot) {
    const double rn = checked_range(r);
    const double vn = checked_speed(r_dot);
    return std::clamp(dot(r, r_dot) / rn / vn, -1.0, 1.0);
}

double departure(const Vec3& r, const Vec3& r_dot) {
    const double rn = checked_range(r);
    const double vn = checked_speed(r_dot);
    const double s = norm(cross(r, r_dot)) / rn / vn;
    return std::clamp(s * s, 0.0, 1.0);
}

Vec3 los_rate(const Vec3& r, const Vec3& r_dot) {
    const double rn = checked_range(r);
    return cross(r, r_dot) / (rn * rn);
}

Vec3 mcpg_lateral(const EngagementView& view) {
    const double rn = checked_range(view.r);
    return cross(view.x_p, cross(view.r_dot, view.r)) / rn;
}

CurvatureControl mcpg_controls(const EngagementView& view, double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw ConfigError("feedback gain must be finite and nonnegative");
    }
    const Vec3 a = mcpg_lateral(view);
    return {mu * dot(a, view.y_p), mu * dot(a, view.z_p)};
}

CurvatureControl mcpg_controls_triple(const EngagementView& view, double mu) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw ConfigError("feedback gain must be finite and nonnegative");
    }
    const Vec3 c = cross(view.r_dot, view.r) / checked_range(view.r);
    return {-mu * dot(c, view.z_p), mu * dot(c, view.y_p)};
}

Vec3 mcpg_acceleration(const EngagementView& view, double mu, double nu_p) {
    return (mu * nu_p * nu_p) * mcpg_lateral(view);
}

Vec3 ppng_lateral(const Vec3& omega_l, const Vec3& v_m, double n) noexcept { return n * cross(omega_l, v_m); }

double mcpg_ppng_gain_map(double mu, double nu_p, double r_o, double range) {
    if (!(mu > 0.0) || !(nu_p > 0.0) || !(r_o > 0.0) || !(range > 0.0)) {
        throw ConfigError("gain map inputs must all be positive");
    }
    const double n_mcpg = mu * nu_p * r_o;
    return n_mcpg * (range / r_o);
}

CurvatureControl controls_from_lateral(const Vec3& a, const FrenetFrame& frame, double nu) {
    if (!(nu > 0.0)) {
        throw ConfigError("speed must be positive");
    }
    const double inv = 1.0 / (nu * nu);
    return {dot(a, frame.y) * inv, dot(a, frame.z) * inv};
}

}  // namespace mcam
