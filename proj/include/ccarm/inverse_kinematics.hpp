#ifndef CCARM_INVERSE_KINEMATICS_HPP
#define CCARM_INVERSE_KINEMATICS_HPP

#include <cmath>

#include "ccarm/errors.hpp"
#include "ccarm/forward_kinematics.hpp"
#include "ccarm/geometry.hpp"

namespace ccarm {

/// Closed-form IK result: the recovered bending arc, the muscle length
/// changes realizing it, and the reconstruction residual |FK(curve) - target|.
struct IkSolution {
    CurveParams curve{};
    JointVector joints{};
    double residual{0.0};
};

namespace detail {

/// Closed-form reconstruction of (theta, phi) from a tip position, total for
/// any finite target. theta = atan2(Py, Px); phi = 2*atan2(rho, Pz) with
/// rho = sqrt(Px^2 + Py^2), the half-angle form of the arc relations (valid
/// everywhere off the Z axis, unlike the quotient form it is equivalent to).
/// On-axis targets reconstruct as straight.
struct TipReconstruction {
    double theta;
    double phi;
    double residual;
};

inline TipReconstruction reconstruct_tip(const ArmGeometry& geom,
                                         const Point3& target) {
    const double rho = std::hypot(target.x, target.y);
    TipReconstruction rec{};
    if (rho < 1e-12 * geom.L0()) {
        rec.theta = 0.0;
        rec.phi = 0.0;
    } else {
        rec.theta = std::atan2(target.y, target.x);
        rec.phi = 2.0 * std::atan2(rho, target.z);
    }
    rec.residual = (tip_raw(geom.L0(), rec.theta, rec.phi) - target).norm();
    return rec;
}

}  // namespace detail

/// Recovers curve parameters from a target tip position.
///
/// The target must lie on the constant-length reachable surface: the
/// reconstruction is verified by forward kinematics and rejected with
/// Unreachable (carrying the residual) when it misses by more than tol.
/// Targets needing phi >= phi_max are rejected with PhiOutOfRange.
inline CurveParams curve_from_tip(const ArmGeometry& geom, const Point3& target,
                                  double tol = 1e-6) {
    if (!target.finite())
        throw std::invalid_argument("curve_from_tip: non-finite target");
    if (!(tol > 0.0)) throw std::invalid_argument("curve_from_tip: tol must be > 0");
    const auto rec = detail::reconstruct_tip(geom, target);
    if (rec.phi >= geom.phi_max()) throw PhiOutOfRange(rec.phi, geom.phi_max());
    if (rec.residual > tol) throw Unreachable(rec.residual);
    return CurveParams(rec.theta, rec.phi);
}

/// The bending angle computed through the quotient form of the tip
/// relations: phi = 2*Py / (F1*F2) with F1 = L0*sin(atan(Py/Px)) and
/// F2 = Pz^2/L0^2 + Py^2/F1^2. Undefined on the Px = 0 and Py = 0
/// half-planes; retained as a cross-check oracle for curve_from_tip on the
/// domain where it is valid.
inline double phi_quotient_form(const ArmGeometry& geom, const Point3& target) {
    if (target.x == 0.0 || target.y == 0.0)
        throw DegenerateInput("phi_quotient_form: requires Px != 0 and Py != 0");
    const double F1 = geom.L0() * std::sin(std::atan(target.y / target.x));
    const double F2 = (target.z * target.z) / (geom.L0() * geom.L0()) +
                      (target.y * target.y) / (F1 * F1);
    return 2.0 * target.y / (F1 * F2);
}

/// Full IK: curve parameters plus joint values, with the residual recomputed
/// through the joint-space round trip (curve -> joints -> curve -> tip).
inline IkSolution joints_from_tip(const ArmGeometry& geom, const Point3& target,
                                  double tol = 1e-6) {
    IkSolution sol;
    sol.curve = curve_from_tip(geom, target, tol);
    sol.joints = joints_from_curve(geom, sol.curve);
    const Point3 tip = tip_position(geom, curve_from_joints(geom, sol.joints));
    sol.residual = (tip - target).norm();
    return sol;
}

}  // namespace ccarm

#endif  // CCARM_INVERSE_KINEMATICS_HPP
