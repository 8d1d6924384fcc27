#ifndef CCARM_CCARM_HPP
#define CCARM_CCARM_HPP

// Umbrella header for the constant-curvature arm kinematics library.

#include "ccarm/config.hpp"
#include "ccarm/errors.hpp"
#include "ccarm/forward_kinematics.hpp"
#include "ccarm/geometry.hpp"
#include "ccarm/inverse_kinematics.hpp"
#include "ccarm/math.hpp"
#include "ccarm/serialization.hpp"
#include "ccarm/trajectory.hpp"
#include "ccarm/workspace.hpp"

#endif  // CCARM_CCARM_HPP
