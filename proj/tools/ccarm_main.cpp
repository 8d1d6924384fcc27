// Command-line front end for the constant-curvature arm kinematics library.
//
// Subcommands: fk, ik, workspace, simulate. Data goes to stdout or --out;
// diagnostics go to stderr. Exit codes: 0 success, 1 domain error (target
// unreachable, joints outside the possibility map, not all sweep samples
// valid), 2 usage error (bad flags or config).

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccarm/ccarm.hpp"

namespace {

struct GlobalOptions {
    std::string config_path;
    std::string format{"csv"};
    std::string out_path;
    double L0{0.37};
    double r{0.018};
    double phi_max{ccarm::kPi};
    double l_limit{-1.0};  // sentinel: default 0.25 * L0
    bool inline_geometry_used{false};
};

ccarm::ArmGeometry resolve_geometry(const GlobalOptions& opts) {
    if (!opts.config_path.empty()) {
        if (opts.inline_geometry_used)
            throw ccarm::ConfigError(
                "give either --config or inline geometry flags, not both");
        return ccarm::load_geometry_file(opts.config_path);
    }
    const double l_limit = opts.l_limit > 0.0 ? opts.l_limit : 0.25 * opts.L0;
    return ccarm::ArmGeometry(opts.L0, opts.r, opts.phi_max, l_limit);
}

/// Opens the data sink: --out path or stdout.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw ccarm::ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_pose(std::ostream& out, const std::string& format,
                const ccarm::Pose& pose) {
    if (format == "json") {
        out << ccarm::to_json(pose).dump(2) << '\n';
        return;
    }
    out << "r11,r12,r13,r21,r22,r23,r31,r32,r33,px,py,pz\n";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out << ccarm::format_g9(pose.R.m[i][j]) << ',';
    out << ccarm::format_g9(pose.p.x) << ',' << ccarm::format_g9(pose.p.y)
        << ',' << ccarm::format_g9(pose.p.z) << '\n';
}

void write_polyline(std::ostream& out, const std::string& format,
                    const std::vector<ccarm::Point3>& pts) {
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        const std::size_t n = pts.size();
        for (std::size_t k = 0; k < n; ++k) {
            const double xi = n > 1 ? static_cast<double>(k) / (n - 1) : 0.0;
            rows.push_back(
                {{"xi", xi}, {"x", pts[k].x}, {"y", pts[k].y}, {"z", pts[k].z}});
        }
        out << rows.dump(2) << '\n';
        return;
    }
    ccarm::write_polyline_csv(out, pts);
}

struct FkArgs {
    double l2{0.0}, l3{0.0};
    double theta{0.0}, phi{0.0};
    double xi{1.0};
    int polyline{0};
    bool has_l2{false}, has_l3{false}, has_theta{false}, has_phi{false};
};

int run_fk(const GlobalOptions& opts, const FkArgs& args) {
    const auto geom = resolve_geometry(opts);
    const bool joint_input = args.has_l2 || args.has_l3;
    const bool curve_input = args.has_theta || args.has_phi;
    if (joint_input == curve_input) {
        std::cerr << "fk: give either --l2/--l3 or --theta/--phi\n";
        return 2;
    }
    if (joint_input && !(args.has_l2 && args.has_l3)) {
        std::cerr << "fk: --l2 and --l3 must be given together\n";
        return 2;
    }
    if (curve_input && !(args.has_theta && args.has_phi)) {
        std::cerr << "fk: --theta and --phi must be given together\n";
        return 2;
    }
    const ccarm::CurveParams curve =
        joint_input
            ? ccarm::curve_from_joints(geom, ccarm::JointVector(args.l2, args.l3))
            : ccarm::CurveParams(args.theta, args.phi);
    OutputSink sink(opts.out_path);
    if (args.polyline > 0) {
        write_polyline(sink.stream(), opts.format,
                       ccarm::backbone_polyline(geom, curve, args.polyline));
    } else {
        write_pose(sink.stream(), opts.format,
                   ccarm::pose_at(geom, curve, args.xi));
    }
    return 0;
}

struct IkArgs {
    double x{0.0}, y{0.0}, z{0.0};
    double tol{1e-6};
};

int run_ik(const GlobalOptions& opts, const IkArgs& args) {
    const auto geom = resolve_geometry(opts);
    const auto sol = ccarm::joints_from_tip(geom, {args.x, args.y, args.z}, args.tol);
    OutputSink sink(opts.out_path);
    if (opts.format == "json") {
        sink.stream() << ccarm::to_json(geom, sol).dump(2) << '\n';
    } else {
        sink.stream() << "theta,phi,lambda,l1,l2,l3,residual\n"
                      << ccarm::format_g9(sol.curve.theta()) << ','
                      << ccarm::format_g9(sol.curve.phi()) << ','
                      << (sol.curve.straight()
                              ? std::string()
                              : ccarm::format_g9(sol.curve.lambda(geom)))
                      << ',' << ccarm::format_g9(sol.joints.l1()) << ','
                      << ccarm::format_g9(sol.joints.l2()) << ','
                      << ccarm::format_g9(sol.joints.l3()) << ','
                      << ccarm::format_g9(sol.residual) << '\n';
    }
    return 0;
}

struct WorkspaceArgs {
    int boundary{0};
    std::vector<int> surface;
    bool check{false};
    double l2{0.0}, l3{0.0};
    bool has_l2{false}, has_l3{false};
};

int run_workspace(const GlobalOptions& opts, const WorkspaceArgs& args) {
    const auto geom = resolve_geometry(opts);
    const int modes = (args.boundary > 0 ? 1 : 0) +
                      (args.surface.empty() ? 0 : 1) + (args.check ? 1 : 0);
    if (modes != 1) {
        std::cerr << "workspace: give exactly one of --boundary, --surface, --check\n";
        return 2;
    }
    OutputSink sink(opts.out_path);
    if (args.boundary > 0) {
        const auto samples = ccarm::boundary_ellipse(geom, args.boundary);
        if (opts.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& s : samples)
                rows.push_back({{"theta", s.theta}, {"l2", s.l2}, {"l3", s.l3}});
            sink.stream() << rows.dump(2) << '\n';
        } else {
            ccarm::write_boundary_csv(sink.stream(), samples);
        }
        return 0;
    }
    if (!args.surface.empty()) {
        const auto grid =
            ccarm::reachable_surface(geom, args.surface[0], args.surface[1]);
        if (opts.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < grid.n_theta; ++i)
                for (int j = 0; j < grid.n_phi; ++j) {
                    const auto& p = grid.at(i, j);
                    rows.push_back({{"theta", grid.thetas[i]},
                                    {"phi", grid.phis[j]},
                                    {"x", p.x},
                                    {"y", p.y},
                                    {"z", p.z}});
                }
            sink.stream() << rows.dump(2) << '\n';
        } else {
            ccarm::write_surface_csv(sink.stream(), grid);
        }
        return 0;
    }
    if (!(args.has_l2 && args.has_l3)) {
        std::cerr << "workspace --check: --l2 and --l3 are required\n";
        return 2;
    }
    const auto report =
        ccarm::check_joints(geom, ccarm::JointVector(args.l2, args.l3));
    sink.stream() << ccarm::to_json(report).dump(2) << '\n';
    return report.valid ? 0 : 1;
}

struct SimulateArgs {
    int turns{3};
    int samples{500};
    double phi_start{0.01};
    std::optional<double> phi_end;
    double tol{1e-6};
};

int run_simulate(const GlobalOptions& opts, const SimulateArgs& args) {
    const auto geom = resolve_geometry(opts);
    ccarm::PathSpec spec = ccarm::PathSpec::defaults(geom);
    spec.turns = args.turns;
    spec.n_samples = args.samples;
    spec.phi_start = args.phi_start;
    if (args.phi_end) spec.phi_end = *args.phi_end;

    const auto path = ccarm::generate_spiral(geom, spec);
    const auto sweep = ccarm::run_ik_sweep(geom, path, args.tol);
    const auto report = ccarm::sweep_report(sweep);

    if (!opts.out_path.empty()) {
        OutputSink sink(opts.out_path);
        ccarm::write_sweep_csv(sink.stream(), sweep);
    }
    std::cout << ccarm::to_json(report).dump(2) << '\n';
    return report.n_invalid == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kinematics of a single-section, three-muscle, constant-length continuum arm"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_option("--config", opts.config_path,
                   "Geometry config file (keys: L0_m, r_m, phi_max_rad, l_limit_m)");
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "Write data to this file instead of stdout");
    auto* l0_opt = app.add_option("--L0", opts.L0, "Backbone length [m]")
                       ->capture_default_str();
    auto* r_opt = app.add_option("--r", opts.r, "Actuator pitch radius [m]")
                      ->capture_default_str();
    auto* phimax_opt =
        app.add_option("--phi-max", opts.phi_max, "Bending limit [rad]");
    auto* llimit_opt =
        app.add_option("--l-limit", opts.l_limit,
                       "Per-muscle length-change bound [m] (default 0.25*L0)");

    FkArgs fk;
    auto* fk_cmd = app.add_subcommand("fk", "Forward kinematics: pose or backbone polyline");
    auto* fk_l2 = fk_cmd->add_option("--l2", fk.l2, "Muscle 2 length change [m]");
    auto* fk_l3 = fk_cmd->add_option("--l3", fk.l3, "Muscle 3 length change [m]");
    auto* fk_theta = fk_cmd->add_option("--theta", fk.theta, "Bending-plane angle [rad]");
    auto* fk_phi = fk_cmd->add_option("--phi", fk.phi, "Bending angle [rad]");
    fk_cmd->add_option("--xi", fk.xi, "Backbone coordinate in [0,1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    fk_cmd->add_option("--polyline", fk.polyline, "Emit n backbone samples instead of one pose")
        ->check(CLI::Range(2, 1000000));

    IkArgs ik;
    auto* ik_cmd = app.add_subcommand("ik", "Closed-form inverse kinematics for a tip target");
    ik_cmd->add_option("--x", ik.x, "Target x [m]")->required();
    ik_cmd->add_option("--y", ik.y, "Target y [m]")->required();
    ik_cmd->add_option("--z", ik.z, "Target z [m]")->required();
    ik_cmd->add_option("--tol", ik.tol, "Acceptance tolerance [m]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    WorkspaceArgs ws;
    auto* ws_cmd = app.add_subcommand("workspace", "Possibility map and reachable surface");
    ws_cmd->add_option("--boundary", ws.boundary, "Emit n boundary-ellipse samples")
        ->check(CLI::Range(3, 10000000));
    ws_cmd->add_option("--surface", ws.surface, "Emit tip grid: n_theta n_phi")
        ->expected(2);
    ws_cmd->add_flag("--check", ws.check, "Check one (l2, l3) pair");
    auto* ws_l2 = ws_cmd->add_option("--l2", ws.l2, "Muscle 2 length change [m]");
    auto* ws_l3 = ws_cmd->add_option("--l3", ws.l3, "Muscle 3 length change [m]");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand(
        "simulate", "Spiral-path IK sweep; summary JSON on stdout, sweep CSV via --out");
    sim_cmd->add_option("--turns", sim.turns, "Spiral windings")->capture_default_str();
    sim_cmd->add_option("--samples", sim.samples, "Number of path samples")
        ->capture_default_str();
    sim_cmd->add_option("--phi-start", sim.phi_start, "Initial bending angle [rad]")
        ->capture_default_str();
    sim_cmd->add_option("--phi-end", sim.phi_end, "Final bending angle [rad] (default 0.9*phi_max)");
    sim_cmd->add_option("--tol", sim.tol, "IK acceptance tolerance [m]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    opts.inline_geometry_used =
        l0_opt->count() || r_opt->count() || phimax_opt->count() || llimit_opt->count();
    fk.has_l2 = fk_l2->count() > 0;
    fk.has_l3 = fk_l3->count() > 0;
    fk.has_theta = fk_theta->count() > 0;
    fk.has_phi = fk_phi->count() > 0;
    ws.has_l2 = ws_l2->count() > 0;
    ws.has_l3 = ws_l3->count() > 0;

    try {
        if (fk_cmd->parsed()) return run_fk(opts, fk);
        if (ik_cmd->parsed()) return run_ik(opts, ik);
        if (ws_cmd->parsed()) return run_workspace(opts, ws);
        if (sim_cmd->parsed()) return run_simulate(opts, sim);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const ccarm::Unreachable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ccarm::PhiOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ccarm::SpecInvalid& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ccarm::XiOutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ccarm::BadSampleCount& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ccarm::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ccarm::KinematicsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
