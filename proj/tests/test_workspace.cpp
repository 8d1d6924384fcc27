#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ccarm/workspace.hpp"

using namespace ccarm;

namespace {

const ArmGeometry kArm(0.37, 0.018);

bool has_violation(const ValidityReport& r, ViolationKind kind) {
    for (const auto& v : r.violations)
        if (v.kind == kind) return true;
    return false;
}

}  // namespace

TEST(CheckJoints, RestIsValid) {
    const auto report = check_joints(kArm, JointVector(0.0, 0.0));
    EXPECT_TRUE(report.valid);
    EXPECT_TRUE(report.violations.empty());
    EXPECT_DOUBLE_EQ(report.phi, 0.0);
}

TEST(CheckJoints, ModerateBendIsValid) {
    // phi = 2*0.02/0.018 = 2.2222 <= pi with default limits.
    const auto report = check_joints(kArm, JointVector(0.02, 0.02));
    EXPECT_TRUE(report.valid);
    EXPECT_NEAR(report.phi, 2.0 * 0.02 / 0.018, 1e-12);
    EXPECT_NEAR(report.phi, 2.2222, 1e-4);
}

TEST(CheckJoints, ExcessBendViolatesPhiLimit) {
    // phi = 2*0.03/0.018 = 3.3333 > pi.
    const auto report = check_joints(kArm, JointVector(0.03, 0.03));
    EXPECT_FALSE(report.valid);
    EXPECT_NEAR(report.phi, 2.0 * 0.03 / 0.018, 1e-12);
    EXPECT_TRUE(has_violation(report, ViolationKind::PhiLimit));
    EXPECT_FALSE(has_violation(report, ViolationKind::MuscleLimit));
}

TEST(CheckJoints, MuscleLimitViolation) {
    // Tight muscle bound makes |l1| = 0.04 the offender while phi stays legal.
    const ArmGeometry tight(0.37, 0.018, kPi, 0.03);
    const auto report = check_joints(tight, JointVector(0.02, 0.02));
    EXPECT_FALSE(report.valid);
    EXPECT_TRUE(has_violation(report, ViolationKind::MuscleLimit));
    EXPECT_FALSE(has_violation(report, ViolationKind::PhiLimit));
}

TEST(CheckJoints, BothLimitsCanFire) {
    const ArmGeometry tight(0.37, 0.018, 1.0, 0.05);
    const auto report = check_joints(tight, JointVector(0.03, 0.03));
    EXPECT_FALSE(report.valid);
    EXPECT_TRUE(has_violation(report, ViolationKind::PhiLimit));
    EXPECT_TRUE(has_violation(report, ViolationKind::MuscleLimit));
    EXPECT_EQ(report.violations.size(), 2u);  // only |l1| = 0.06 exceeds 0.05
}

TEST(BoundaryEllipse, AxisSamples) {
    // With n divisible by 4 the sampling hits theta = -pi, -pi/2, 0, pi/2.
    const auto samples = boundary_ellipse(kArm, 360);
    ASSERT_EQ(samples.size(), 360u);
    const auto& at_minus_pi = samples[0];
    const auto& at_zero = samples[180];
    // theta = 0: l2 = l3 = (r/2)*phi_max = 0.009*pi = 0.028274333882308138.
    EXPECT_DOUBLE_EQ(at_zero.theta, 0.0);
    EXPECT_NEAR(at_zero.l2, 0.028274333882308138, 1e-15);
    EXPECT_NEAR(at_zero.l3, 0.028274333882308138, 1e-15);
    // theta = -pi flips the sign of cos(theta).
    EXPECT_DOUBLE_EQ(at_minus_pi.theta, -kPi);
    EXPECT_NEAR(at_minus_pi.l2, -0.028274333882308138, 1e-15);
    EXPECT_NEAR(at_minus_pi.l3, -0.028274333882308138, 1e-15);
}

TEST(BoundaryEllipse, MapsBackToPhiMax) {
    for (const auto& s : boundary_ellipse(kArm, 257)) {
        const auto c = curve_from_joints(kArm, JointVector(s.l2, s.l3));
        EXPECT_NEAR(c.phi(), kArm.phi_max(), 1e-9);
        EXPECT_NEAR(std::abs(angle_difference(c.theta(), s.theta)), 0.0, 1e-9);
    }
}

TEST(BoundaryEllipse, BoundaryPointsAreValid) {
    // l_limit (0.0925) >= r*phi_max (0.0565), so the whole rim is inside the
    // muscle bound and must pass the closed-region membership test.
    ASSERT_GE(kArm.l_limit(), kArm.r() * kArm.phi_max());
    for (const auto& s : boundary_ellipse(kArm, 360))
        EXPECT_TRUE(check_joints(kArm, JointVector(s.l2, s.l3)).valid);
}

TEST(BoundaryEllipse, RejectsTooFewSamples) {
    EXPECT_THROW(boundary_ellipse(kArm, 2), BadSampleCount);
}

TEST(ReachableSurface, ChordIdentityHoldsEverywhere) {
    const auto grid = reachable_surface(kArm, 36, 19);
    for (int i = 0; i < grid.n_theta; ++i) {
        for (int j = 0; j < grid.n_phi; ++j) {
            const double phi = grid.phis[j];
            const double expected =
                phi == 0.0 ? 0.37 : 2.0 * (0.37 / phi) * std::sin(phi / 2.0);
            EXPECT_NEAR(grid.at(i, j).norm(), expected, expected * 1e-12);
        }
    }
}

TEST(ReachableSurface, ZeroPhiRowIsRestTip) {
    const auto grid = reachable_surface(kArm, 12, 5);
    for (int i = 0; i < grid.n_theta; ++i) {
        const auto& p = grid.at(i, 0);
        EXPECT_DOUBLE_EQ(p.x, 0.0);
        EXPECT_DOUBLE_EQ(p.y, 0.0);
        EXPECT_DOUBLE_EQ(p.z, 0.37);
    }
}

TEST(ReachableSurface, RadiusExtremes) {
    // |p| = 2*(L0/phi)*sin(phi/2) decreases from L0 at phi=0 to 2*L0/pi at
    // phi=pi.
    const auto grid = reachable_surface(kArm, 360, 180);
    double rmin = std::numeric_limits<double>::infinity();
    double rmax = 0.0;
    for (const auto& p : grid.points) {
        rmin = std::min(rmin, p.norm());
        rmax = std::max(rmax, p.norm());
    }
    EXPECT_NEAR(rmax, 0.37, 1e-12);
    EXPECT_NEAR(rmin, 2.0 * 0.37 / kPi, 1e-12);
}

TEST(ReachableSurface, RejectsBadCounts) {
    EXPECT_THROW(reachable_surface(kArm, 0, 10), BadSampleCount);
    EXPECT_THROW(reachable_surface(kArm, 10, 1), BadSampleCount);
}

// The possibility region is star-shaped about the origin: scaling any valid
// joint vector toward zero keeps it valid (phi is homogeneous of degree 1).
TEST(Invariants, RegionIsStarShaped) {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> dl(-0.06, 0.06);
    std::uniform_real_distribution<double> scale(0.0, 1.0);
    int tested = 0;
    for (int i = 0; i < 3000; ++i) {
        const JointVector q(dl(rng), dl(rng));
        const auto report = check_joints(kArm, q);
        const double s = scale(rng);
        const double phi_scaled =
            detail::phi_from_joints(kArm.r(), s * q.l2(), s * q.l3());
        EXPECT_NEAR(phi_scaled, s * report.phi, 1e-12);
        if (!report.valid) continue;
        ++tested;
        EXPECT_TRUE(
            check_joints(kArm, JointVector(s * q.l2(), s * q.l3())).valid);
    }
    EXPECT_GT(tested, 100);
}

// Swapping l2 and l3 mirrors the bending plane (theta -> -theta) and leaves
// membership unchanged.
TEST(Invariants, SwapSymmetry) {
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> dl(-0.08, 0.08);
    for (int i = 0; i < 3000; ++i) {
        const double l2 = dl(rng), l3 = dl(rng);
        const auto a = check_joints(kArm, JointVector(l2, l3));
        const auto b = check_joints(kArm, JointVector(l3, l2));
        EXPECT_EQ(a.valid, b.valid);
        EXPECT_DOUBLE_EQ(a.phi, b.phi);
    }
}
