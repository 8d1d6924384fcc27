#ifndef CCARM_WORKSPACE_HPP
#define CCARM_WORKSPACE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "ccarm/errors.hpp"
#include "ccarm/forward_kinematics.hpp"
#include "ccarm/geometry.hpp"

namespace ccarm {

/// Why a joint combination fell outside the possibility map.
enum class ViolationKind { PhiLimit, MuscleLimit };

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Membership verdict for the possibility map: valid iff violations is empty.
struct ValidityReport {
    bool valid{true};
    double phi{0.0};
    std::vector<Violation> violations;
};

namespace detail {

// Boundary points land on the limits themselves; the region is closed, so a
// hair of rounding slack keeps them inside.
inline constexpr double kLimitSlack = 1e-12;

}  // namespace detail

/// Checks a joint combination against the bending limit phi <= phi_max and
/// the per-muscle bound |l_i| <= l_limit (l1 included through the sum
/// constraint). Boundary points count as valid.
inline ValidityReport check_joints(const ArmGeometry& geom,
                                   const JointVector& q) {
    ValidityReport report;
    report.phi = detail::phi_from_joints(geom.r(), q.l2(), q.l3());
    if (report.phi > geom.phi_max() + detail::kLimitSlack) {
        report.violations.push_back(
            {ViolationKind::PhiLimit,
             "phi = " + std::to_string(report.phi) + " exceeds phi_max = " +
                 std::to_string(geom.phi_max())});
    }
    const double ls[3] = {q.l1(), q.l2(), q.l3()};
    for (int i = 0; i < 3; ++i) {
        if (std::abs(ls[i]) > geom.l_limit() + detail::kLimitSlack) {
            report.violations.push_back(
                {ViolationKind::MuscleLimit,
                 "|l" + std::to_string(i + 1) + "| = " +
                     std::to_string(std::abs(ls[i])) + " exceeds l_limit = " +
                     std::to_string(geom.l_limit())});
        }
    }
    report.valid = report.violations.empty();
    return report;
}

/// One point of the phi = phi_max locus in the (l2, l3) plane.
struct BoundarySample {
    double theta;
    double l2;
    double l3;
};

/// n samples of the bending-limit boundary, theta uniform over [-pi, pi).
/// Each point maps back through curve_from_joints to phi = phi_max.
inline std::vector<BoundarySample> boundary_ellipse(const ArmGeometry& geom,
                                                    int n) {
    if (n < 3) throw BadSampleCount("boundary_ellipse: need n >= 3 samples");
    std::vector<BoundarySample> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = -kPi + kTwoPi * k / n;
        const double half = 0.5 * geom.r() * std::cos(theta) * geom.phi_max();
        const double wing =
            0.5 * std::sqrt(3.0) * geom.r() * std::sin(theta) * geom.phi_max();
        samples.push_back({theta, half - wing, half + wing});
    }
    return samples;
}

/// Tip positions tabulated over theta in [-pi, pi) x phi in [0, phi_max].
/// Rows iterate theta (n_theta of them, half-open), columns phi (n_phi,
/// inclusive of both ends).
struct SurfaceGrid {
    int n_theta{0};
    int n_phi{0};
    std::vector<double> thetas;
    std::vector<double> phis;
    std::vector<Point3> points;  // row-major: index = i_theta * n_phi + i_phi

    const Point3& at(int i_theta, int i_phi) const {
        return points[static_cast<std::size_t>(i_theta) * n_phi + i_phi];
    }
};

inline SurfaceGrid reachable_surface(const ArmGeometry& geom, int n_theta,
                                     int n_phi) {
    if (n_theta < 1) throw BadSampleCount("reachable_surface: need n_theta >= 1");
    if (n_phi < 2) throw BadSampleCount("reachable_surface: need n_phi >= 2");
    SurfaceGrid grid;
    grid.n_theta = n_theta;
    grid.n_phi = n_phi;
    grid.thetas.reserve(static_cast<std::size_t>(n_theta));
    grid.phis.reserve(static_cast<std::size_t>(n_phi));
    for (int i = 0; i < n_theta; ++i)
        grid.thetas.push_back(-kPi + kTwoPi * i / n_theta);
    for (int j = 0; j < n_phi; ++j)
        grid.phis.push_back(geom.phi_max() * j / (n_phi - 1));
    grid.points.reserve(static_cast<std::size_t>(n_theta) * n_phi);
    for (int i = 0; i < n_theta; ++i)
        for (int j = 0; j < n_phi; ++j)
            grid.points.push_back(
                detail::tip_raw(geom.L0(), grid.thetas[i], grid.phis[j]));
    return grid;
}

}  // namespace ccarm

#endif  // CCARM_WORKSPACE_HPP
