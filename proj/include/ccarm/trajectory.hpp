#ifndef CCARM_TRAJECTORY_HPP
#define CCARM_TRAJECTORY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "ccarm/errors.hpp"
#include "ccarm/forward_kinematics.hpp"
#include "ccarm/geometry.hpp"
#include "ccarm/inverse_kinematics.hpp"
#include "ccarm/workspace.hpp"

namespace ccarm {

/// Spiral sweep description: the bending angle ramps linearly from phi_start
/// to phi_end while the bending plane winds `turns` full revolutions.
struct PathSpec {
    int turns{3};
    int n_samples{500};
    double phi_start{0.01};
    double phi_end{0.0};

    static PathSpec defaults(const ArmGeometry& geom) {
        PathSpec spec;
        spec.phi_end = 0.9 * geom.phi_max();
        return spec;
    }
};

/// One timestep of a trajectory sweep.
struct PathSample {
    double s{0.0};         // path parameter in [0, 1]
    Point3 target{};       // requested tip position
    double theta_ik{0.0};  // recovered bending azimuth, unwrapped over the sweep
    double phi_ik{0.0};    // recovered bending angle
    double l1{0.0};
    double l2{0.0};
    double l3{0.0};
    bool valid{false};     // workspace check passed and residual <= tol
    double residual{0.0};  // |FK(joints) - target| in meters
};

/// Aggregates of a sweep, the quantitative content of the profile plots and
/// the possibility-map overlay.
struct SummaryReport {
    std::size_t n_samples{0};
    std::size_t n_valid{0};
    std::size_t n_invalid{0};
    double max_residual{0.0};
    double theta_ik_min{0.0};
    double theta_ik_max{0.0};
    double phi_ik_min{0.0};
    double phi_ik_max{0.0};
    double l2_min{0.0};
    double l2_max{0.0};
    double l3_min{0.0};
    double l3_max{0.0};
    // Fraction of samples whose muscle lengths are realized inside the
    // possibility map; a sample only counts when its IK solution is valid.
    double inside_fraction{0.0};
};

namespace detail {

inline void validate_path_spec(const ArmGeometry& geom, const PathSpec& spec) {
    if (spec.n_samples < 2)
        throw SpecInvalid("PathSpec: n_samples must be >= 2");
    if (spec.turns < 0) throw SpecInvalid("PathSpec: turns must be >= 0");
    if (!(spec.phi_start >= 0.0))
        throw SpecInvalid("PathSpec: phi_start must be >= 0");
    if (!(spec.phi_start < spec.phi_end))
        throw SpecInvalid("PathSpec: phi_start must be < phi_end");
    if (!(spec.phi_end <= geom.phi_max()))
        throw SpecInvalid("PathSpec: phi_end must be <= phi_max");
}

}  // namespace detail

/// Generates the sweep path: a spiral on the reachable dome, built directly
/// in (theta, phi) parameter space so every target is exactly reachable.
/// Starts near the top point [0, 0, L0] (phi = phi_start) and winds outward
/// and downward to phi_end.
inline std::vector<Point3> generate_spiral(const ArmGeometry& geom,
                                           const PathSpec& spec) {
    detail::validate_path_spec(geom, spec);
    std::vector<Point3> path;
    path.reserve(static_cast<std::size_t>(spec.n_samples));
    for (int k = 0; k < spec.n_samples; ++k) {
        const double s = static_cast<double>(k) / (spec.n_samples - 1);
        const double theta = -kPi + std::fmod(kTwoPi * spec.turns * s, kTwoPi);
        const double phi = spec.phi_start + s * (spec.phi_end - spec.phi_start);
        path.push_back(detail::tip_raw(geom.L0(), theta, phi));
    }
    return path;
}

/// Runs the closed-form IK over every path point and validates each result
/// against the possibility map. Unreachable points are recorded with
/// valid = false rather than aborting the sweep. theta_ik is unwrapped
/// across the +-pi seam by nearest-revolution continuation so profiles stay
/// continuous. Samples are mutually independent; output order matches input
/// order.
inline std::vector<PathSample> run_ik_sweep(const ArmGeometry& geom,
                                            const std::vector<Point3>& path,
                                            double tol = 1e-6) {
    if (path.empty()) throw EmptyInput("run_ik_sweep: empty path");
    std::vector<PathSample> samples;
    samples.reserve(path.size());
    const std::size_t n = path.size();
    for (std::size_t k = 0; k < n; ++k) {
        PathSample sample;
        sample.s = n > 1 ? static_cast<double>(k) / (n - 1) : 0.0;
        sample.target = path[k];

        const auto rec = detail::reconstruct_tip(geom, sample.target);
        const double half = 0.5 * geom.r() * std::cos(rec.theta) * rec.phi;
        const double wing =
            0.5 * std::sqrt(3.0) * geom.r() * std::sin(rec.theta) * rec.phi;
        const JointVector q(half - wing, half + wing);
        sample.l1 = q.l1();
        sample.l2 = q.l2();
        sample.l3 = q.l3();

        // Residual through the full joint-space round trip.
        const double phi_rt = detail::phi_from_joints(geom.r(), q.l2(), q.l3());
        const double theta_rt =
            (q.l2() == 0.0 && q.l3() == 0.0) ? 0.0
                                             : detail::theta_from_joints(q.l2(), q.l3());
        sample.residual =
            (detail::tip_raw(geom.L0(), theta_rt, phi_rt) - sample.target).norm();

        sample.phi_ik = rec.phi;
        sample.theta_ik =
            samples.empty() ? rec.theta
                            : unwrap_nearest(samples.back().theta_ik, rec.theta);
        sample.valid =
            check_joints(geom, q).valid && sample.residual <= tol;
        samples.push_back(sample);
    }
    return samples;
}

inline SummaryReport sweep_report(const std::vector<PathSample>& samples) {
    if (samples.empty()) throw EmptyInput("sweep_report: no samples");
    SummaryReport report;
    report.n_samples = samples.size();
    report.theta_ik_min = report.theta_ik_max = samples.front().theta_ik;
    report.phi_ik_min = report.phi_ik_max = samples.front().phi_ik;
    report.l2_min = report.l2_max = samples.front().l2;
    report.l3_min = report.l3_max = samples.front().l3;
    for (const auto& s : samples) {
        if (s.valid)
            ++report.n_valid;
        else
            ++report.n_invalid;
        report.max_residual = std::max(report.max_residual, s.residual);
        report.theta_ik_min = std::min(report.theta_ik_min, s.theta_ik);
        report.theta_ik_max = std::max(report.theta_ik_max, s.theta_ik);
        report.phi_ik_min = std::min(report.phi_ik_min, s.phi_ik);
        report.phi_ik_max = std::max(report.phi_ik_max, s.phi_ik);
        report.l2_min = std::min(report.l2_min, s.l2);
        report.l2_max = std::max(report.l2_max, s.l2);
        report.l3_min = std::min(report.l3_min, s.l3);
        report.l3_max = std::max(report.l3_max, s.l3);
    }
    report.inside_fraction =
        static_cast<double>(report.n_valid) / static_cast<double>(report.n_samples);
    return report;
}

}  // namespace ccarm

#endif  // CCARM_TRAJECTORY_HPP
