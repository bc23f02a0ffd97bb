#pragma once

#include <functional>

#include "mcam/geometry.hpp"

namespace mcam {

/// Natural curvatures steering the tangent toward y (u) and z (v).
struct CurvatureControl {
    double u = 0.0;
    double v = 0.0;

    [[nodiscard]] double magnitude() const noexcept { return std::hypot(u, v); }

    /// Scales (u, v) down so that its magnitude does not exceed cap (cap > 0).
    [[nodiscard]] CurvatureControl saturated(double cap) const noexcept;

    friend constexpr bool operator==(const CurvatureControl&, const CurvatureControl&) = default;
};

/// Speed as a function of time. Constant, or a scripted sinusoidal modulation
/// base + amplitude * sin(angular_frequency * t + phase) with amplitude < base.
class SpeedProfile {
public:
    enum class Kind { constant, scripted };

    /// Throws ConfigError for a nonpositive or non-finite speed.
    static SpeedProfile constant(double speed);
    /// Throws ConfigError unless 0 <= amplitude < base and all values are finite.
    static SpeedProfile scripted(double base, double amplitude, double angular_frequency, double phase);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] double base() const noexcept { return base_; }
    [[nodiscard]] double amplitude() const noexcept { return amplitude_; }
    [[nodiscard]] double angular_frequency() const noexcept { return omega_; }
    [[nodiscard]] double phase() const noexcept { return phase_; }

    [[nodiscard]] double speed(double t) const noexcept;
    [[nodiscard]] double rate(double t) const noexcept;

    /// Bounds realised over all t: speed in [lower(), upper()], |rate| <= rate_bound().
    [[nodiscard]] double lower() const noexcept { return base_ - amplitude_; }
    [[nodiscard]] double upper() const noexcept { return base_ + amplitude_; }
    [[nodiscard]] double rate_bound() const noexcept { return amplitude_ * std::abs(omega_); }

private:
    SpeedProfile(Kind kind, double base, double amplitude, double omega, double phase)
        : kind_(kind), base_(base), amplitude_(amplitude), omega_(omega), phase_(phase) {}

    Kind kind_;
    double base_;
    double amplitude_;
    double omega_;
    double phase_;
};

/// One agent: position, natural Frenet frame, speed and its time derivative.
struct ParticleState {
    Vec3 position;
    FrenetFrame frame;
    double speed = 1.0;
    double speed_rate = 0.0;

    [[nodiscard]] Vec3 velocity() const noexcept { return speed * frame.x; }
};

/// Throws GeometryError / ConfigError when the state breaks its invariants
/// (non-finite data, frame off by more than tol, nonpositive speed).
void validate(const ParticleState& s, double tol = 1e-9);

/// Agent at `position` heading along `heading` with the deterministic initial frame.
[[nodiscard]] ParticleState make_particle(const Vec3& position, const Vec3& heading, const SpeedProfile& speed);

/// Time derivative of a ParticleState.
struct ParticleStateRate {
    Vec3 position;
    Vec3 x;
    Vec3 y;
    Vec3 z;
    double speed = 0.0;
};

/// Right-hand side of the kinematic model:
///   r' = nu x,  x' = nu (y u + z v),  y' = -nu x u,  z' = -nu x v,  nu' = speed_rate.
[[nodiscard]] ParticleStateRate state_derivative(const ParticleState& s, const CurvatureControl& c) noexcept;

/// Classical RK4 step with the control held fixed, followed by frame repair.
/// The speed is taken from `profile` at each stage time (t is the step start).
[[nodiscard]] ParticleState step(const ParticleState& s, const CurvatureControl& c, double dt,
                                 const SpeedProfile& profile, double t);

/// Constant-speed overload: keeps s.speed.
[[nodiscard]] ParticleState step(const ParticleState& s, const CurvatureControl& c, double dt);

struct EngagementState {
    ParticleState pursuer;
    ParticleState evader;
};

/// Closed-loop pursuer law, evaluated on every RK4 stage.
using PursuerLaw = std::function<CurvatureControl(const ParticleState& pursuer, const ParticleState& evader)>;
/// Open-loop evader input as a function of time.
using EvaderInput = std::function<CurvatureControl(double t)>;

/// One RK4 step of the coupled two-agent system starting at time t.
///
/// The pursuer law is re-evaluated on each stage state, so the integrated
/// trajectory is that of the continuous feedback system rather than a
/// zero-order-hold approximation. The evader input is sampled strictly
/// inside [t, t + dt] (endpoints pulled in by 1e-6 dt), so a piecewise
/// constant input that switches on a tick boundary is never smeared across a step.
[[nodiscard]] EngagementState step_engagement(const EngagementState& s, const PursuerLaw& pursuer_law,
                                              const EvaderInput& evader_input, const SpeedProfile& pursuer_speed,
                                              const SpeedProfile& evader_speed, double t, double dt);

}  // namespace mcam
