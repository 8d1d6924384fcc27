// Minimal tour of the library: bend the arm, invert the tip position, and
// run a short spiral sweep.

#include <cstdio>

#include "ccarm/ccarm.hpp"

int main() {
    const ccarm::ArmGeometry geom(0.37, 0.018);

    // Bend by a quarter circle in the +X plane and look at the tip.
    const ccarm::CurveParams bend(0.0, ccarm::kPi / 2.0);
    const ccarm::Point3 tip = ccarm::tip_position(geom, bend);
    std::printf("tip at theta=0, phi=pi/2: [%.6f, %.6f, %.6f] m\n", tip.x,
                tip.y, tip.z);

    // Recover the configuration from the tip alone.
    const auto sol = ccarm::joints_from_tip(geom, tip);
    std::printf("recovered phi=%.6f rad, joints [%.6f, %.6f, %.6f] m, "
                "residual %.2e m\n",
                sol.curve.phi(), sol.joints.l1(), sol.joints.l2(),
                sol.joints.l3(), sol.residual);

    // Sweep a 2-turn spiral over the reachable dome.
    ccarm::PathSpec spec = ccarm::PathSpec::defaults(geom);
    spec.turns = 2;
    spec.n_samples = 100;
    const auto sweep = ccarm::run_ik_sweep(geom, ccarm::generate_spiral(geom, spec));
    const auto report = ccarm::sweep_report(sweep);
    std::printf("sweep: %zu samples, %zu valid, max residual %.2e m\n",
                report.n_samples, report.n_valid, report.max_residual);
    return 0;
}
