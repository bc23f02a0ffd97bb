#pragma once

#include "mcam/dynamics.hpp"
#include "mcam/geometry.hpp"

namespace mcam {

/// |r| or |r_dot| below this raise DegeneracyError instead of producing silent zeros.
inline constexpr double kGuidanceGuard = 1e-9;

/// What the pursuer senses: baseline r = r_p - r_e, its rate, and the pursuer frame.
struct EngagementView {
    Vec3 r;
    Vec3 r_dot;
    Vec3 x_p;
    Vec3 y_p;
    Vec3 z_p;
};

[[nodiscard]] EngagementView make_view(const ParticleState& pursuer, const ParticleState& evader) noexcept;

/// r = r_p - r_e (points from the evader to the pursuer).
[[nodiscard]] Vec3 baseline(const Vec3& r_p, const Vec3& r_e) noexcept;

/// r_dot = nu_p x_p - nu_e x_e.
[[nodiscard]] Vec3 relative_velocity(const ParticleState& pursuer, const ParticleState& evader) noexcept;

/// Component of r_dot transverse to the baseline, r^ x (r_dot x r^).
/// The double-cross form keeps full relative accuracy as w -> 0.
[[nodiscard]] Vec3 transverse_w(const Vec3& r, const Vec3& r_dot);

/// Same quantity by projection, r_dot - (r^ . r_dot) r^. Loses relative accuracy
/// when w is small; kept as the second route for cross-checks.
[[nodiscard]] Vec3 transverse_w_projection(const Vec3& r, const Vec3& r_dot);

/// Gamma = r^ . r_dot^, in [-1, 1]. -1 is pure closing, 0 pure rotation, +1 pure opening.
[[nodiscard]] double gamma(const Vec3& r, const Vec3& r_dot);

/// 1 - Gamma^2, evaluated as |r x r_dot|^2 / (|r|^2 |r_dot|^2) to avoid cancellation near Gamma = -1.
[[nodiscard]] double departure(const Vec3& r, const Vec3& r_dot);

/// Line-of-sight angular velocity omega = (r / |r|^2) x r_dot.
[[nodiscard]] Vec3 los_rate(const Vec3& r, const Vec3& r_dot);

/// MCPG direction a = x_p x (r_dot x r^). Always perpendicular to x_p.
[[nodiscard]] Vec3 mcpg_lateral(const EngagementView& view);

/// u_p = mu (a . y_p), v_p = mu (a . z_p). mu = 0 gives an open-loop pursuer.
/// Throws DegeneracyError on a zero baseline and ConfigError on mu < 0.
[[nodiscard]] CurvatureControl mcpg_controls(const EngagementView& view, double mu);

/// The same controls through the scalar triple products
/// u_p = -mu (r_dot x r^) . z_p, v_p = mu (r_dot x r^) . y_p.
[[nodiscard]] CurvatureControl mcpg_controls_triple(const EngagementView& view, double mu);

/// Lateral acceleration of the MCPG pursuer, mu nu_p^2 a.
[[nodiscard]] Vec3 mcpg_acceleration(const EngagementView& view, double mu, double nu_p);

/// Pure proportional navigation, A = N (omega_L x v_M).
[[nodiscard]] Vec3 ppng_lateral(const Vec3& omega_l, const Vec3& v_m, double n) noexcept;

/// Effective navigation gain of MCPG at the given range: N_MCPG * range / r_o with
/// N_MCPG = mu nu_p r_o, so that MCPG acceleration = ppng_lateral(omega, nu_p x_p, result).
/// Throws ConfigError on nonpositive input.
[[nodiscard]] double mcpg_ppng_gain_map(double mu, double nu_p, double r_o, double range);

/// Curvatures realising a lateral acceleration A for a particle at speed nu
/// (A is projected onto the normal plane).
[[nodiscard]] CurvatureControl controls_from_lateral(const Vec3& a, const FrenetFrame& frame, double nu);

}  // namespace mcam
