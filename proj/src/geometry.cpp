#include "mcam/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "mcam/errors.hpp"

namespace mcam {

namespace {

// a*b - c*d with one rounding error (Kahan).
double diff_of_products(double a, double b, double c, double d) noexcept {
    const double cd = c * d;
    const double err = std::fma(-c, d, cd);
    const double dop = std::fma(a, b, -cd);
    return dop + err;
}

// Error-free transformations used by the compensated dot product.
void two_sum(double a, double b, double& s, double& e) noexcept {
    s = a + b;
    const double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}

void two_prod(double a, double b, double& p, double& e) noexcept {
    p = a * b;
    e = std::fma(a, b, -p);
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) noexcept {
    double p = 0.0;
    double s = 0.0;
    double h = 0.0;
    double r = 0.0;
    double q = 0.0;
    two_prod(a.x, b.x, p, s);
    two_prod(a.y, b.y, h, r);
    two_sum(p, h, p, q);
    s += q + r;
    two_prod(a.z, b.z, h, r);
    two_sum(p, h, p, q);
    s += q + r;
    return p + s;
}

Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
    return {diff_of_products(a.y, b.z, a.z, b.y), diff_of_products(a.z, b.x, a.x, b.z),
            diff_of_products(a.x, b.y, a.y, b.x)};
}

Vec3 bac_cab(const Vec3& a, const Vec3& b, const Vec3& c) noexcept { return cross(a, cross(b, c)); }

double norm_squared(const Vec3& a) noexcept { return dot(a, a); }

double norm(const Vec3& a) noexcept { return std::hypot(a.x, a.y, a.z); }

Vec3 normalized(const Vec3& a, double min_norm) {
    const double n = norm(a);
    if (!(n > min_norm)) {
        throw GeometryError("cannot normalize a vector of length " + std::to_string(n));
    }
    return a / n;
}

double angle_between(const Vec3& a, const Vec3& b) noexcept { return std::atan2(norm(cross(a, b)), dot(a, b)); }

double orthonormality_error(const FrenetFrame& f) noexcept {
    const std::array<double, 7> devs{
        std::abs(norm(f.x) - 1.0),
        std::abs(norm(f.y) - 1.0),
        std::abs(norm(f.z) - 1.0),
        std::abs(dot(f.x, f.y)),
        std::abs(dot(f.y, f.z)),
        std::abs(dot(f.z, f.x)),
        std::abs(dot(f.x, cross(f.y, f.z)) - 1.0),
    };
    return *std::max_element(devs.begin(), devs.end());
}

FrenetFrame orthonormalize(const FrenetFrame& f) {
    const double xn = norm(f.x);
    if (!(xn >= kFrameDegeneracy)) {
        throw GeometryError("frame tangent has degenerate length " + std::to_string(xn));
    }
    const Vec3 x = f.x / xn;
    const Vec3 y_perp = f.y - dot(x, f.y) * x;
    const double yn = norm(y_perp);
    if (!(yn >= kFrameDegeneracy)) {
        throw GeometryError("frame normal y is parallel to the tangent");
    }
    const Vec3 y = y_perp / yn;
    const Vec3 z = cross(x, y);
    if (dot(z, f.z) <= 0.0) {
        throw GeometryError("frame is not right-handed");
    }
    return {x, y, z};
}

FrenetFrame frame_from_tangent(const Vec3& tangent) {
    const double n = norm(tangent);
    if (!(n > 1e-9)) {
        throw GeometryError("cannot build a frame from a zero tangent");
    }
    const Vec3 x = tangent / n;
    const std::array<double, 3> alignment{std::abs(x.x), std::abs(x.y), std::abs(x.z)};
    // min_element returns the first minimum, which gives the e1, e2, e3 tie order.
    const auto axis = std::min_element(alignment.begin(), alignment.end()) - alignment.begin();
    Vec3 e{};
    if (axis == 0) {
        e.x = 1.0;
    } else if (axis == 1) {
        e.y = 1.0;
    } else {
        e.z = 1.0;
    }
    const Vec3 y = normalized(e - dot(x, e) * x);
    return {x, y, cross(x, y)};
}

}  // namespace mcam
