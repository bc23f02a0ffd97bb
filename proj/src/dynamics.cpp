#include "mcam/dynamics.hpp"

#include <cmath>
#include <string>

#include "mcam/errors.hpp"

namespace mcam {

CurvatureControl CurvatureControl::saturated(double cap) const noexcept {
    const double m = magnitude();
    if (m <= cap || m == 0.0) {
        return *this;
    }
    const double s = cap / m;
    return {u * s, v * s};
}

SpeedProfile SpeedProfile::constant(double speed) {
    if (!std::isfinite(speed) || speed <= 0.0) {
        throw ConfigError("speed must be positive and finite, got " + std::to_string(speed));
    }
    return {Kind::constant, speed, 0.0, 0.0, 0.0};
}

SpeedProfile SpeedProfile::scripted(double base, double amplitude, double angular_frequency, double phase) {
    if (!std::isfinite(base) || !std::isfinite(amplitude) || !std::isfinite(angular_frequency) ||
        !std::isfinite(phase)) {
        throw ConfigError("scripted speed parameters must be finite");
    }
    if (amplitude < 0.0 || amplitude >= base) {
        throw ConfigError("scripted speed needs 0 <= amplitude < base");
    }
    return {Kind::scripted, base, amplitude, angular_frequency, phase};
}

double SpeedProfile::speed(double t) const noexcept {
    if (kind_ == Kind::constant) {
        return base_;
    }
    return base_ + amplitude_ * std::sin(omega_ * t + phase_);
}

double SpeedProfile::rate(double t) const noexcept {
    if (kind_ == Kind::constant) {
        return 0.0;
    }
    return amplitude_ * omega_ * std::cos(omega_ * t + phase_);
}

void validate(const ParticleState& s, double tol) {
    if (!is_finite(s.position) || !is_finite(s.frame.x) || !is_finite(s.frame.y) || !is_finite(s.frame.z) ||
        !std::isfinite(s.speed) || !std::isfinite(s.speed_rate)) {
        throw GeometryError("particle state has non-finite components");
    }
    if (orthonormality_error(s.frame) > tol) {
        throw GeometryError("particle frame is not orthonormal");
    }
    if (!(s.speed > 0.0)) {
        throw ConfigError("particle speed must be positive");
    }
}

ParticleState make_particle(const Vec3& position, const Vec3& heading, const SpeedProfile& speed) {
    if (!is_finite(position) || !is_finite(heading)) {
        throw ConfigError("initial position and heading must be finite");
    }
    return {position, frame_from_tangent(heading), speed.speed(0.0), speed.rate(0.0)};
}

ParticleStateRate state_derivative(const ParticleState& s, const CurvatureControl& c) noexcept {
    const double nu = s.speed;
    const FrenetFrame& f = s.frame;
    return {
        nu * f.x,
        nu * (c.u * f.y + c.v * f.z),
        -(nu * c.u) * f.x,
        -(nu * c.v) * f.x,
        s.speed_rate,
    };
}

namespace {

ParticleState advance(const ParticleState& s, const ParticleStateRate& k, double h, const SpeedProfile& profile,
                      double t) {
    return {
        s.position + h * k.position,
        {s.frame.x + h * k.x, s.frame.y + h * k.y, s.frame.z + h * k.z},
        profile.speed(t),
        profile.rate(t),
    };
}

ParticleState combine(const ParticleState& s, const ParticleStateRate& k1, const ParticleStateRate& k2,
                      const ParticleStateRate& k3, const ParticleStateRate& k4, double dt,
                      const SpeedProfile& profile, double t_end) {
    const double w = dt / 6.0;
    auto mix = [&](const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) { return w * (a + 2.0 * (b + c) + d); };
    ParticleState out{
        s.position + mix(k1.position, k2.position, k3.position, k4.position),
        {s.frame.x + mix(k1.x, k2.x, k3.x, k4.x), s.frame.y + mix(k1.y, k2.y, k3.y, k4.y),
         s.frame.z + mix(k1.z, k2.z, k3.z, k4.z)},
        profile.speed(t_end),
        profile.rate(t_end),
    };
    out.frame = orthonormalize(out.frame);
    return out;
}

}  // namespace

ParticleState step(const ParticleState& s, const CurvatureControl& c, double dt, const SpeedProfile& profile,
                   double t) {
    if (!(dt > 0.0)) {
        throw ConfigError("time step must be positive");
    }
    const double half = 0.5 * dt;
    ParticleState s0 = s;
    s0.speed = profile.speed(t);
    s0.speed_rate = profile.rate(t);
    const auto k1 = state_derivative(s0, c);
    const auto k2 = state_derivative(advance(s0, k1, half, profile, t + half), c);
    const auto k3 = state_derivative(advance(s0, k2, half, profile, t + half), c);
    const auto k4 = state_derivative(advance(s0, k3, dt, profile, t + dt), c);
    return combine(s0, k1, k2, k3, k4, dt, profile, t + dt);
}

ParticleState step(const ParticleState& s, const CurvatureControl& c, double dt) {
    return step(s, c, dt, SpeedProfile::constant(s.speed), 0.0);
}

EngagementState step_engagement(const EngagementState& s, const PursuerLaw& pursuer_law,
                                const EvaderInput& evader_input, const SpeedProfile& pursuer_speed,
                                const SpeedProfile& evader_speed, double t, double dt) {
    if (!(dt > 0.0)) {
        throw ConfigError("time step must be positive");
    }
    const double half = 0.5 * dt;
    const double pull = 1e-6 * dt;
    const CurvatureControl ce_start = evader_input(t + pull);
    const CurvatureControl ce_mid = evader_input(t + half);
    const CurvatureControl ce_end = evader_input(t + dt - pull);

    ParticleState p0 = s.pursuer;
    p0.speed = pursuer_speed.speed(t);
    p0.speed_rate = pursuer_speed.rate(t);
    ParticleState e0 = s.evader;
    e0.speed = evader_speed.speed(t);
    e0.speed_rate = evader_speed.rate(t);

    const auto kp1 = state_derivative(p0, pursuer_law(p0, e0));
    const auto ke1 = state_derivative(e0, ce_start);

    const ParticleState p2 = advance(p0, kp1, half, pursuer_speed, t + half);
    const ParticleState e2 = advance(e0, ke1, half, evader_speed, t + half);
    const auto kp2 = state_derivative(p2, pursuer_law(p2, e2));
    const auto ke2 = state_derivative(e2, ce_mid);

    const ParticleState p3 = advance(p0, kp2, half, pursuer_speed, t + half);
    const ParticleState e3 = advance(e0, ke2, half, evader_speed, t + half);
    const auto kp3 = state_derivative(p3, pursuer_law(p3, e3));
    const auto ke3 = state_derivative(e3, ce_mid);

    const ParticleState p4 = advance(p0, kp3, dt, pursuer_speed, t + dt);
    const ParticleState e4 = advance(e0, ke3, dt, evader_speed, t + dt);
    const auto kp4 = state_derivative(p4, pursuer_law(p4, e4));
    const auto ke4 = state_derivative(e4, ce_end);

    return {combine(p0, kp1, kp2, kp3, kp4, dt, pursuer_speed, t + dt),
            combine(e0, ke1, ke2, ke3, ke4, dt, evader_speed, t + dt)};
}

}  // namespace mcam
