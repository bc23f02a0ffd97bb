#pragma once

#include <cmath>

namespace mcam {

/// Plain 3-vector. Components must stay finite; constructors do not check,
/// use is_finite() at trust boundaries (config loading, state validation).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3& operator+=(const Vec3& o) noexcept {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o) noexcept {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s) noexcept {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
    friend constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
    friend constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
    friend constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
    friend constexpr Vec3 operator/(const Vec3& a, double s) noexcept { return {a.x / s, a.y / s, a.z / s}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

// Dot and cross products are evaluated with FMA-compensated arithmetic so that
// quantities like |r x r_dot| stay accurate to a few ulps even when r and r_dot
// are nearly parallel, which is exactly the regime the pursuit converges to.

/// Compensated dot product (result as if computed in twice the working precision).
[[nodiscard]] double dot(const Vec3& a, const Vec3& b) noexcept;

/// Cross product; each component uses Kahan's difference-of-products.
[[nodiscard]] Vec3 cross(const Vec3& a, const Vec3& b) noexcept;

/// a x (b x c).
[[nodiscard]] Vec3 bac_cab(const Vec3& a, const Vec3& b, const Vec3& c) noexcept;

[[nodiscard]] double norm_squared(const Vec3& a) noexcept;
[[nodiscard]] double norm(const Vec3& a) noexcept;

/// Unit vector along a. Throws GeometryError when |a| <= min_norm.
[[nodiscard]] Vec3 normalized(const Vec3& a, double min_norm = 0.0);

/// Angle in [0, pi] between two nonzero vectors, via atan2(|a x b|, a.b).
[[nodiscard]] double angle_between(const Vec3& a, const Vec3& b) noexcept;

[[nodiscard]] inline bool is_finite(const Vec3& a) noexcept {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Right-handed orthonormal triple: x is the unit tangent, {y, z} span the normal plane.
struct FrenetFrame {
    Vec3 x{1.0, 0.0, 0.0};
    Vec3 y{0.0, 1.0, 0.0};
    Vec3 z{0.0, 0.0, 1.0};

    friend constexpr bool operator==(const FrenetFrame&, const FrenetFrame&) = default;
};

/// Largest deviation of the frame from the orthonormal right-handed contract:
/// max over | |x|-1 |, |x.y|, ..., | x.(y x z) - 1 |.
[[nodiscard]] double orthonormality_error(const FrenetFrame& f) noexcept;

/// Length below which a tangent or projected normal counts as degenerate.
inline constexpr double kFrameDegeneracy = 1e-6;

/// Gram-Schmidt repair in the order x, y, z. The tangent direction is kept
/// exactly (only rescaled); y loses its x component; z is rebuilt as x cross y.
/// Throws GeometryError on |x| < 1e-6, y parallel to x, or a left-handed input.
[[nodiscard]] FrenetFrame orthonormalize(const FrenetFrame& f);

/// Frame with the given tangent. y comes from the canonical axis least aligned
/// with the tangent (ties go to e1, then e2, then e3), z = x cross y.
/// Throws GeometryError when |tangent| <= 1e-9.
[[nodiscard]] FrenetFrame frame_from_tangent(const Vec3& tangent);

}  // namespace mcam
