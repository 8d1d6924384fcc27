#ifndef CCARM_GEOMETRY_HPP
#define CCARM_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <stdexcept>

#include "ccarm/errors.hpp"
#include "ccarm/math.hpp"

namespace ccarm {

/// Physical description of a single-section, three-muscle, constant-length
/// continuum arm plus the configurable joint/bending limits.
///
/// L0 is the backbone (and muscle rest) length, r the pitch radius at which
/// the three muscles sit around the backbone, 120 degrees apart.
class ArmGeometry {
public:
    ArmGeometry(double L0, double r)
        : ArmGeometry(L0, r, kPi, 0.25 * L0) {}

    ArmGeometry(double L0, double r, double phi_max, double l_limit)
        : L0_(L0), r_(r), phi_max_(phi_max), l_limit_(l_limit) {
        if (!(std::isfinite(L0) && L0 > 0.0))
            throw std::invalid_argument("ArmGeometry: L0 must be > 0");
        if (!(std::isfinite(r) && r > 0.0))
            throw std::invalid_argument("ArmGeometry: r must be > 0");
        if (!(std::isfinite(phi_max) && phi_max > 0.0 && phi_max <= kPi))
            throw std::invalid_argument("ArmGeometry: phi_max must be in (0, pi]");
        if (!(std::isfinite(l_limit) && l_limit > 0.0))
            throw std::invalid_argument("ArmGeometry: l_limit must be > 0");
    }

    double L0() const { return L0_; }
    double r() const { return r_; }
    double phi_max() const { return phi_max_; }
    double l_limit() const { return l_limit_; }

private:
    double L0_;
    double r_;
    double phi_max_;
    double l_limit_;
};

/// Muscle length changes (l1, l2, l3). Only l2 and l3 are independent;
/// l1 = -(l2 + l3) is maintained by construction, so every instance
/// satisfies the sum-to-zero constraint.
class JointVector {
public:
    JointVector() = default;

    JointVector(double l2, double l3) : l2_(l2), l3_(l3) {
        if (!(std::isfinite(l2) && std::isfinite(l3)))
            throw std::invalid_argument("JointVector: non-finite component");
    }

    /// Builds from a full triple, rejecting triples that violate the
    /// sum-to-zero constraint by more than 1e-12 * L0.
    static JointVector from_triple(const ArmGeometry& geom, double l1,
                                   double l2, double l3) {
        if (std::abs(l1 + l2 + l3) > 1e-12 * geom.L0())
            throw std::invalid_argument(
                "JointVector: l1 + l2 + l3 != 0 beyond tolerance");
        return JointVector(l2, l3);
    }

    double l1() const { return -(l2_ + l3_); }
    double l2() const { return l2_; }
    double l3() const { return l3_; }

private:
    double l2_{0.0};
    double l3_{0.0};
};

/// Bending-arc descriptors: theta is the azimuth of the bending plane
/// measured from +X, phi the angle subtended by the arc. The curvature
/// radius lambda = L0 / phi is derived on demand (it diverges as phi -> 0,
/// so it is never stored).
///
/// Straight configurations (phi == 0) store theta = 0 by convention and
/// report straight() == true.
class CurveParams {
public:
    CurveParams() = default;

    CurveParams(double theta, double phi) : theta_(theta), phi_(phi) {
        if (!(std::isfinite(theta) && std::isfinite(phi)))
            throw std::invalid_argument("CurveParams: non-finite component");
        if (phi < 0.0 || phi > kPi)
            throw std::invalid_argument("CurveParams: phi outside [0, pi]");
        if (theta < -kPi || theta > kPi)
            throw std::invalid_argument("CurveParams: theta outside [-pi, pi]");
        if (phi_ == 0.0) theta_ = 0.0;
    }

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    bool straight() const { return phi_ == 0.0; }

    /// Curvature radius in meters; defined only for bent configurations.
    double lambda(const ArmGeometry& geom) const {
        if (straight())
            throw DegenerateInput("lambda undefined for the straight configuration");
        return geom.L0() / phi_;
    }

private:
    double theta_{0.0};
    double phi_{0.0};
};

/// Positions of the three actuation points on the base plane. A1 lies on
/// +X; the points form an equilateral triangle of side r*sqrt(3).
inline std::array<Point3, 3> actuator_anchors(const ArmGeometry& geom) {
    const double r = geom.r();
    const double h = 0.5 * std::sqrt(3.0) * r;
    return {Point3{r, 0.0, 0.0}, Point3{-0.5 * r, h, 0.0},
            Point3{-0.5 * r, -h, 0.0}};
}

/// Signed distances from the base center to the projections of the three
/// actuation points onto the bending-plane axis.
inline std::array<double, 3> projection_distances(const ArmGeometry& geom,
                                                  double theta) {
    const double r = geom.r();
    return {r * std::cos(theta), r * std::cos(2.0 * kPi / 3.0 - theta),
            r * std::cos(4.0 * kPi / 3.0 - theta)};
}

/// Muscle length changes realizing the given bending arc.
///
/// l1 = -r*cos(theta)*phi, l2/l3 = (r/2*cos(theta) -/+ sqrt(3)/2*r*sin(theta))*phi.
/// Shared subexpressions keep l1 + l2 + l3 = 0 down to rounding.
inline JointVector joints_from_curve(const ArmGeometry& geom,
                                     const CurveParams& c) {
    if (c.phi() > geom.phi_max())
        throw PhiOutOfRange(c.phi(), geom.phi_max());
    const double half = 0.5 * geom.r() * std::cos(c.theta()) * c.phi();
    const double wing = 0.5 * std::sqrt(3.0) * geom.r() * std::sin(c.theta()) * c.phi();
    return JointVector(half - wing, half + wing);
}

/// Raw joint-to-curve formulas, shared with the validity and sweep paths
/// that must stay total even when phi lands outside [0, phi_max].
namespace detail {

inline double phi_from_joints(double r, double l2, double l3) {
    return (2.0 / r) * std::sqrt((l2 * l2 + l3 * l3 + l2 * l3) / 3.0);
}

inline double theta_from_joints(double l2, double l3) {
    return std::atan2(l3 - l2, std::sqrt(3.0) * (l2 + l3));
}

}  // namespace detail

/// Recovers the bending arc from muscle length changes.
///
/// phi = (2/r)*sqrt((l2^2 + l3^2 + l2*l3)/3); theta via the two-argument
/// arctangent of (l3 - l2, sqrt(3)*(l2 + l3)), which covers the full
/// [-pi, pi] range. l2 = l3 = 0 yields the straight configuration.
inline CurveParams curve_from_joints(const ArmGeometry& geom,
                                     const JointVector& q) {
    if (q.l2() == 0.0 && q.l3() == 0.0) return CurveParams(0.0, 0.0);
    double phi = detail::phi_from_joints(geom.r(), q.l2(), q.l3());
    if (phi > geom.phi_max()) {
        // Joints sitting exactly on the bending limit may recover a hair
        // above it; snap those back instead of rejecting.
        if (phi > geom.phi_max() + 1e-12) throw PhiOutOfRange(phi, geom.phi_max());
        phi = geom.phi_max();
    }
    return CurveParams(detail::theta_from_joints(q.l2(), q.l3()), phi);
}

/// Total muscle lengths L_i = L0 + l_i.
inline std::array<double, 3> total_lengths(const ArmGeometry& geom,
                                           const JointVector& q) {
    return {geom.L0() + q.l1(), geom.L0() + q.l2(), geom.L0() + q.l3()};
}

}  // namespace ccarm

#endif  // CCARM_GEOMETRY_HPP
