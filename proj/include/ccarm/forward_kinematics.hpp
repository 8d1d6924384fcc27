#ifndef CCARM_FORWARD_KINEMATICS_HPP
#define CCARM_FORWARD_KINEMATICS_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "ccarm/errors.hpp"
#include "ccarm/geometry.hpp"
#include "ccarm/math.hpp"

namespace ccarm {

/// Rotation and position of a frame on the backbone (the rotation/translation
/// blocks of the homogeneous transform).
struct Pose {
    Mat3 R = Mat3::identity();
    Point3 p{};
};

/// A pose tagged with the backbone coordinate it was sampled at.
class BackboneSample {
public:
    BackboneSample() = default;

    BackboneSample(double xi, Pose pose) : xi_(xi), pose_(std::move(pose)) {
        if (!(xi >= 0.0 && xi <= 1.0)) throw XiOutOfRange(xi);
    }

    double xi() const { return xi_; }
    const Pose& pose() const { return pose_; }

private:
    double xi_{0.0};
    Pose pose_{};
};

/// Samples the backbone frame at coordinate xi.
inline BackboneSample sample_at(const ArmGeometry& geom, const CurveParams& c,
                                double xi);

namespace detail {

// Thresholds below which (1 - cos(xi*phi))/phi and sin(xi*phi)/phi switch to
// their second-order series in phi. The direct branch uses
// 1 - cos(x) = 2*sin^2(x/2), so both branches agree to ~1e-15 relative at
// the crossover.
inline constexpr double kSeriesPhi = 1e-4;

/// A = (1 - cos(xi*phi))/phi and B = sin(xi*phi)/phi, finite for phi -> 0.
inline void arc_profile(double phi, double xi, double& A, double& B) {
    if (phi < kSeriesPhi) {
        const double xi2 = xi * xi;
        A = xi2 * phi * 0.5 - xi2 * xi2 * phi * phi * phi / 24.0;
        B = xi - xi2 * xi * phi * phi / 6.0;
        return;
    }
    const double alpha = xi * phi;
    const double s = std::sin(0.5 * alpha);
    A = 2.0 * s * s / phi;
    B = std::sin(alpha) / phi;
}

/// Backbone position at coordinate xi for arbitrary (theta, phi); stays
/// defined for phi beyond the modeling range so reconstruction residuals can
/// always be evaluated.
inline Point3 position_raw(double L0, double theta, double phi, double xi) {
    double A, B;
    arc_profile(phi, xi, A, B);
    return {L0 * std::cos(theta) * A, L0 * std::sin(theta) * A, L0 * B};
}

inline Point3 tip_raw(double L0, double theta, double phi) {
    return position_raw(L0, theta, phi, 1.0);
}

/// Rotation of the frame at bending angle alpha = xi*phi in the plane at
/// azimuth theta; the entries are regular in alpha, no series needed.
inline Mat3 rotation_raw(double theta, double alpha) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double ca = std::cos(alpha);
    const double sa = std::sin(alpha);
    Mat3 R;
    R.m[0][0] = ct * ct * ca + st * st;
    R.m[0][1] = ct * st * (ca - 1.0);
    R.m[0][2] = ct * sa;
    R.m[1][0] = R.m[0][1];
    R.m[1][1] = st * st * ca + ct * ct;
    R.m[1][2] = st * sa;
    R.m[2][0] = -R.m[0][2];
    R.m[2][1] = -R.m[1][2];
    R.m[2][2] = ca;
    return R;
}

}  // namespace detail

/// Pose of the backbone frame at coordinate xi in [0, 1] (0 = base, 1 = tip).
inline Pose pose_at(const ArmGeometry& geom, const CurveParams& c, double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) throw XiOutOfRange(xi);
    const double alpha = xi * c.phi();
    if (alpha == 0.0) {
        // Base frame, or a straight arm: pure translation along Z.
        return Pose{Mat3::identity(), {0.0, 0.0, geom.L0() * xi}};
    }
    return Pose{detail::rotation_raw(c.theta(), alpha),
                detail::position_raw(geom.L0(), c.theta(), c.phi(), xi)};
}

inline BackboneSample sample_at(const ArmGeometry& geom, const CurveParams& c,
                                double xi) {
    return BackboneSample(xi, pose_at(geom, c, xi));
}

/// Tip position; identical to pose_at(geom, c, 1).p.
inline Point3 tip_position(const ArmGeometry& geom, const CurveParams& c) {
    return pose_at(geom, c, 1.0).p;
}

/// n uniformly spaced backbone points from base (origin) to tip.
inline std::vector<Point3> backbone_polyline(const ArmGeometry& geom,
                                             const CurveParams& c, int n) {
    if (n < 2) throw BadSampleCount("backbone_polyline: need n >= 2 samples");
    std::vector<Point3> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double xi = static_cast<double>(k) / (n - 1);
        pts.push_back(pose_at(geom, c, xi).p);
    }
    return pts;
}

/// Pose from joint values: curve_from_joints composed with pose_at.
inline Pose fk_from_joints(const ArmGeometry& geom, const JointVector& q,
                           double xi) {
    return pose_at(geom, curve_from_joints(geom, q), xi);
}

}  // namespace ccarm

#endif  // CCARM_FORWARD_KINEMATICS_HPP
