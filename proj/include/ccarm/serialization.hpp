#ifndef CCARM_SERIALIZATION_HPP
#define CCARM_SERIALIZATION_HPP

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccarm/forward_kinematics.hpp"
#include "ccarm/geometry.hpp"
#include "ccarm/inverse_kinematics.hpp"
#include "ccarm/trajectory.hpp"
#include "ccarm/workspace.hpp"

namespace ccarm {

/// CSV numbers carry 9 significant digits, matching the library's 1e-9
/// round-trip tolerances.
inline std::string format_g9(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

inline nlohmann::json to_json(const Pose& pose) {
    nlohmann::json j;
    j["R"] = {{pose.R.m[0][0], pose.R.m[0][1], pose.R.m[0][2]},
              {pose.R.m[1][0], pose.R.m[1][1], pose.R.m[1][2]},
              {pose.R.m[2][0], pose.R.m[2][1], pose.R.m[2][2]}};
    j["p"] = {pose.p.x, pose.p.y, pose.p.z};
    return j;
}

inline nlohmann::json to_json(const ArmGeometry& geom, const IkSolution& sol) {
    nlohmann::json j;
    j["theta"] = sol.curve.theta();
    j["phi"] = sol.curve.phi();
    if (sol.curve.straight())
        j["lambda"] = nullptr;
    else
        j["lambda"] = sol.curve.lambda(geom);
    j["l1"] = sol.joints.l1();
    j["l2"] = sol.joints.l2();
    j["l3"] = sol.joints.l3();
    j["residual"] = sol.residual;
    return j;
}

inline nlohmann::json to_json(const ValidityReport& report) {
    nlohmann::json j;
    j["valid"] = report.valid;
    j["phi"] = report.phi;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations) {
        j["violations"].push_back(
            {{"kind", v.kind == ViolationKind::PhiLimit ? "PhiLimit"
                                                        : "MuscleLimit"},
             {"detail", v.detail}});
    }
    return j;
}

inline nlohmann::json to_json(const SummaryReport& report) {
    return nlohmann::json{{"samples", report.n_samples},
                          {"valid", report.n_valid},
                          {"invalid", report.n_invalid},
                          {"max_residual", report.max_residual},
                          {"theta_ik_min", report.theta_ik_min},
                          {"theta_ik_max", report.theta_ik_max},
                          {"phi_ik_min", report.phi_ik_min},
                          {"phi_ik_max", report.phi_ik_max},
                          {"l2_min", report.l2_min},
                          {"l2_max", report.l2_max},
                          {"l3_min", report.l3_min},
                          {"l3_max", report.l3_max},
                          {"inside_fraction", report.inside_fraction}};
}

/// Backbone polyline rows under the header `xi,x,y,z`.
inline void write_polyline_csv(std::ostream& out,
                               const std::vector<Point3>& pts) {
    out << "xi,x,y,z\n";
    const std::size_t n = pts.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double xi = n > 1 ? static_cast<double>(k) / (n - 1) : 0.0;
        out << format_g9(xi) << ',' << format_g9(pts[k].x) << ','
            << format_g9(pts[k].y) << ',' << format_g9(pts[k].z) << '\n';
    }
}

/// Possibility-map boundary rows under the header `theta,l2,l3`.
inline void write_boundary_csv(std::ostream& out,
                               const std::vector<BoundarySample>& samples) {
    out << "theta,l2,l3\n";
    for (const auto& s : samples)
        out << format_g9(s.theta) << ',' << format_g9(s.l2) << ','
            << format_g9(s.l3) << '\n';
}

/// Reachable-surface rows under the header `theta,phi,x,y,z`; theta-major.
inline void write_surface_csv(std::ostream& out, const SurfaceGrid& grid) {
    out << "theta,phi,x,y,z\n";
    for (int i = 0; i < grid.n_theta; ++i) {
        for (int j = 0; j < grid.n_phi; ++j) {
            const Point3& p = grid.at(i, j);
            out << format_g9(grid.thetas[i]) << ',' << format_g9(grid.phis[j])
                << ',' << format_g9(p.x) << ',' << format_g9(p.y) << ','
                << format_g9(p.z) << '\n';
        }
    }
}

/// Sweep rows under the header
/// `s,px,py,pz,theta_ik,phi_ik,l1,l2,l3,valid,residual`.
inline void write_sweep_csv(std::ostream& out,
                            const std::vector<PathSample>& samples) {
    out << "s,px,py,pz,theta_ik,phi_ik,l1,l2,l3,valid,residual\n";
    for (const auto& s : samples) {
        out << format_g9(s.s) << ',' << format_g9(s.target.x) << ','
            << format_g9(s.target.y) << ',' << format_g9(s.target.z) << ','
            << format_g9(s.theta_ik) << ',' << format_g9(s.phi_ik) << ','
            << format_g9(s.l1) << ',' << format_g9(s.l2) << ','
            << format_g9(s.l3) << ',' << (s.valid ? 1 : 0) << ','
            << format_g9(s.residual) << '\n';
    }
}

}  // namespace ccarm

#endif  // CCARM_SERIALIZATION_HPP
