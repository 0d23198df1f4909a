#ifndef CORIOLIS_KINEMATICS_HPP
#define CORIOLIS_KINEMATICS_HPP

#include <Eigen/Core>

#include "coriolis/constants.hpp"
#include "coriolis/geometry.hpp"
#include "coriolis/species.hpp"

namespace coriolis {

// Lab frame used throughout: x west, y south, z up.

/// Wave-packet displacement mismatch at the recombination pulse [m].
using ClosureVector = Eigen::Vector3d;

/// Relative velocities of the interfering wave packets during the four
/// intervals of the sequence, to first order in the rotation rate.
struct RelativeVelocitySet {
  Eigen::Vector3d v12;    // [t1, t2]
  Eigen::Vector3d v23;    // [t2, t3]
  Eigen::Vector3d v34;    // [t3, t4]
  Eigen::Vector3d v4inf;  // [t4, inf)
};

/// Unit vectors of the tip-tilt mirror rotation axes in the horizontal
/// plane. axis_yp is oriented along north (the direction about which a
/// positive rate opposes the Earth-induced drift); axis_xp is rotated
/// from it by the enclosed angle, toward west.
struct MirrorAxes {
  Eigen::Vector3d axis_xp;
  Eigen::Vector3d axis_yp;
};

MirrorAxes mirror_axes(double axis_angle);

/// Residual rotation rate about the north axis after compensation:
/// Omega_eff = Omega*cos(latitude) - (comp_rate_yp + comp_rate_xp*cos(axis_angle)).
/// Positive applied rates reduce the residual.
double compensated_rate(const SequenceGeometry& g,
                        double earth_rate = constants.earth_rotation_rate);

/// Residual rotation rate about the west axis. Earth's rotation has no
/// component here, so this is driven purely by the x' compensation rate.
double residual_west_rate(const SequenceGeometry& g);

/// Relative wave-packet velocities with the effective (compensated)
/// rotation rates in place of the raw Earth rate.
RelativeVelocitySet relative_velocities(
    const AtomSpecies& species, const SequenceGeometry& g,
    double earth_rate = constants.earth_rotation_rate);

/// Displacement mismatch of the interfering packets at the final pulse:
///   delta_x = 4 n v_r Omega_eff T (T + T')
///   delta_y = 4 n v_r Omega_west T (T + T')
///   delta_z = 2 n v_r tau
ClosureVector closure_error(const AtomSpecies& species,
                            const SequenceGeometry& g,
                            double earth_rate = constants.earth_rotation_rate);

/// Magnitude of the vector sum of rotation rates about two axes enclosing
/// axis_angle: sqrt(r1^2 + r2^2 + 2 r1 r2 cos(axis_angle)). Arguments are
/// magnitudes of rotation about axes oriented so both Earth-rotation
/// projections are positive.
double combine_axis_rates(double r1, double r2, double axis_angle);

}  // namespace coriolis

#endif  // CORIOLIS_KINEMATICS_HPP
