#include <cmath>

#include "doctest.h"
#include "mcam/errors.hpp"
#include "mcam/geometry.hpp"
#include "support.hpp"

using namespace mcam;
using mcam::test::Gen;
using mcam::test::max_abs;

namespace {

// Textbook component formulas, no compensation.
Vec3 naive_cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double naive_dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

bool frame_near(const FrenetFrame& a, const FrenetFrame& b, double tol) {
    return max_abs(a.x - b.x) <= tol && max_abs(a.y - b.y) <= tol && max_abs(a.z - b.z) <= tol;
}

}  // namespace

TEST_CASE("cross of canonical axes") {
    CHECK(cross({1, 0, 0}, {0, 1, 0}) == Vec3{0, 0, 1});
    CHECK(cross({0, 1, 0}, {1, 0, 0}) == Vec3{0, 0, -1});
    Gen g(11);
    for (int i = 0; i < 100; ++i) {
        const Vec3 a = g.vec(5.0);
        CHECK(cross(a, a) == Vec3{0, 0, 0});
    }
}

TEST_CASE("cross is perpendicular to both factors") {
    Gen g(12);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 a = g.vec(10.0);
        const Vec3 b = g.vec(10.0);
        const Vec3 c = cross(a, b);
        const double scale = norm(a) * norm(a) * norm(b);
        CHECK(std::abs(dot(c, a)) <= 1e-12 * scale);
        CHECK(std::abs(dot(c, b)) <= 1e-12 * norm(a) * norm(b) * norm(b));
        CHECK(max_abs(c - naive_cross(a, b)) <= 1e-13 * norm(a) * norm(b));
    }
}

TEST_CASE("dot agrees with the plain sum") {
    Gen g(13);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 a = g.vec(3.0);
        const Vec3 b = g.vec(3.0);
        CHECK(std::abs(dot(a, b) - naive_dot(a, b)) <= 1e-14 * norm(a) * norm(b));
    }
}

TEST_CASE("bac_cab") {
    CHECK(bac_cab({1, 0, 0}, {0, 1, 0}, {1, 0, 0}) == Vec3{0, 1, 0});
    CHECK(max_abs(bac_cab({1, 2, 3}, {0.5, -1, 2}, {1, -2, 4})) == 0.0);

    Gen g(14);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 a = g.vec(4.0);
        const Vec3 b = g.vec(4.0);
        const Vec3 c = g.vec(4.0);
        const Vec3 expanded = b * naive_dot(a, c) - c * naive_dot(a, b);
        const double scale = norm(a) * norm(b) * norm(c);
        CHECK(max_abs(bac_cab(a, b, c) - expanded) <= 1e-12 * scale);
    }
}

TEST_CASE("norm, normalized and angle_between") {
    CHECK(norm({3, 4, 0}) == doctest::Approx(5.0));
    CHECK(normalized({0, 0, 2}) == Vec3{0, 0, 1});
    CHECK_THROWS_AS((void)normalized({0, 0, 0}), GeometryError);
    CHECK_THROWS_AS((void)normalized({1e-8, 0, 0}, 1e-6), GeometryError);
    CHECK(angle_between({1, 0, 0}, {0, 1, 0}) == doctest::Approx(M_PI / 2));
    CHECK(angle_between({1, 0, 0}, {-1, 0, 0}) == doctest::Approx(M_PI));
    CHECK(angle_between({1, 0, 0}, {1, 1e-12, 0}) == doctest::Approx(1e-12).epsilon(1e-6));
}

TEST_CASE("orthonormalize") {
    SUBCASE("orthonormal input is a fixed point") {
        Gen g(15);
        for (int i = 0; i < 100; ++i) {
            const FrenetFrame f = frame_from_tangent(g.nonzero_vec());
            CHECK(frame_near(orthonormalize(f), f, 1e-12));
        }
    }
    SUBCASE("hand Gram-Schmidt") {
        const FrenetFrame f{{1, 0, 0}, {0.01, 1, 0}, {0, 0, 1}};
        CHECK(frame_near(orthonormalize(f), FrenetFrame{}, 1e-9));
    }
    SUBCASE("tangent is only rescaled") {
        const FrenetFrame f{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        CHECK(orthonormalize(f).x == Vec3{1, 0, 0});
    }
    SUBCASE("perturbed frames are repaired and the repair is idempotent") {
        Gen g(16);
        for (int i = 0; i < 1000; ++i) {
            FrenetFrame f = frame_from_tangent(g.nonzero_vec());
            f.x += g.vec(1e-2);
            f.y += g.vec(1e-2);
            f.z += g.vec(1e-2);
            const FrenetFrame once = orthonormalize(f);
            CHECK(orthonormality_error(once) <= 1e-12);
            CHECK(max_abs(once.x - normalized(f.x)) <= 1e-15);
            CHECK(frame_near(orthonormalize(once), once, 1e-12));
        }
    }
    SUBCASE("degenerate inputs") {
        CHECK_THROWS_AS((void)orthonormalize({{1e-7, 0, 0}, {0, 1, 0}, {0, 0, 1}}), GeometryError);
        CHECK_THROWS_AS((void)orthonormalize({{1, 0, 0}, {2, 0, 0}, {0, 0, 1}}), GeometryError);
        CHECK_THROWS_AS((void)orthonormalize({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), GeometryError);
    }
}

TEST_CASE("frame_from_tangent") {
    CHECK(frame_near(frame_from_tangent({1, 0, 0}), FrenetFrame{}, 0.0));
    CHECK(frame_near(frame_from_tangent({3, 0, 0}), FrenetFrame{}, 0.0));

    // Tangent e3: e1 and e2 tie as least aligned, e1 wins, y = e1, z = e3 x e1 = e2.
    const FrenetFrame up = frame_from_tangent({0, 0, 1});
    CHECK(frame_near(up, FrenetFrame{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, 0.0));

    Gen g(17);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 t = g.nonzero_vec(5.0);
        const FrenetFrame f = frame_from_tangent(t);
        CHECK(orthonormality_error(f) <= 1e-12);
        CHECK(max_abs(f.x - normalized(t)) <= 1e-15);
    }
    CHECK_THROWS_AS((void)frame_from_tangent({0, 0, 0}), GeometryError);
    CHECK_THROWS_AS((void)frame_from_tangent({1e-10, 0, 0}), GeometryError);
}
