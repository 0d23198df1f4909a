#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coriolis/kinematics.hpp"
#include "coriolis/species.hpp"

using namespace coriolis;

namespace {

SequenceGeometry reference_geometry() {
  SequenceGeometry g;
  g.bragg_order = 5;
  g.pulse_separation = 0.250;
  g.mid_separation = 0.002;
  return g;
}

}  // namespace

TEST_CASE("mirror axes span the horizontal plane with the enclosed angle") {
  const MirrorAxes axes = mirror_axes(kDefaultAxisAngle);
  CHECK(axes.axis_yp.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(axes.axis_xp.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(axes.axis_yp.z() == 0.0);
  CHECK(axes.axis_xp.z() == 0.0);
  CHECK(axes.axis_xp.dot(axes.axis_yp) ==
        doctest::Approx(std::cos(kDefaultAxisAngle)).epsilon(1e-14));
  // y' points along north (-y in the west/south/up lab frame).
  CHECK(axes.axis_yp.y() == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("compensated rate vanishes at the horizontal Earth rate") {
  SequenceGeometry g = reference_geometry();
  // Horizontal component of Earth's rotation at the default latitude,
  // computed independently: 7.2921150e-5 * cos(37.87 deg).
  const double horizontal = 5.756436530839414e-5;
  CHECK(compensated_rate(g) == doctest::Approx(horizontal).epsilon(1e-12));

  g.comp_rate_yp = horizontal;
  CHECK(compensated_rate(g) == doctest::Approx(0.0).epsilon(1e-18));

  // A rate about x' contributes its projection cos(axis_angle) onto y'.
  g.comp_rate_yp = 0.0;
  g.comp_rate_xp = horizontal / std::cos(g.axis_angle);
  CHECK(compensated_rate(g) == doctest::Approx(0.0).epsilon(1e-18));
}

TEST_CASE("west residual is driven by the x' rate only") {
  SequenceGeometry g = reference_geometry();
  CHECK(residual_west_rate(g) == 0.0);
  g.comp_rate_yp = 1e-4;
  CHECK(residual_west_rate(g) == 0.0);
  g.comp_rate_xp = 2e-5;
  CHECK(residual_west_rate(g) ==
        doctest::Approx(-2e-5 * std::sin(g.axis_angle)).epsilon(1e-14));
}

TEST_CASE("closure error matches the closed form") {
  const AtomSpecies cs = cesium_species();
  const SequenceGeometry g = reference_geometry();
  const ClosureVector d = closure_error(cs, g);
  // 4 n v_r (Omega cos latitude) T (T + T') for 2n = 10, T = 250 ms,
  // computed independently: 255.494 nm.
  CHECK(d.x() == doctest::Approx(2.55494270554283e-7).epsilon(1e-10));
  CHECK(d.y() == 0.0);
  CHECK(d.z() == 0.0);

  SequenceGeometry delayed = g;
  delayed.final_pulse_delay = 40e-6;
  const ClosureVector dz = closure_error(cs, delayed);
  CHECK(dz.z() ==
        doctest::Approx(2.0 * 5 * cs.recoil_velocity() * 40e-6).epsilon(1e-12));
}

TEST_CASE("closure error is linear and antisymmetric in the drive") {
  const AtomSpecies cs = cesium_species();
  SequenceGeometry g = reference_geometry();

  const double base = closure_error(cs, g, 1e-5).x();
  CHECK(closure_error(cs, g, 2e-5).x() ==
        doctest::Approx(2.0 * base).epsilon(1e-12));

  // Over-compensating by twice the Earth rate flips the sign exactly.
  g.comp_rate_yp = 2.0 * compensated_rate(g);
  CHECK(closure_error(cs, g).x() ==
        doctest::Approx(-closure_error(cs, reference_geometry()).x())
            .epsilon(1e-12));

  SequenceGeometry pos = reference_geometry();
  SequenceGeometry neg = reference_geometry();
  pos.final_pulse_delay = 17e-6;
  neg.final_pulse_delay = -17e-6;
  CHECK(closure_error(cs, pos).z() ==
        doctest::Approx(-closure_error(cs, neg).z()).epsilon(1e-14));
}

TEST_CASE("relative velocities close the interferometer on average") {
  const AtomSpecies cs = cesium_species();
  SequenceGeometry g = reference_geometry();
  g.comp_rate_xp = -26.2e-6;
  g.comp_rate_yp = 40e-6;
  const RelativeVelocitySet v = relative_velocities(cs, g);

  // Vertical components: +2 n v_r during [t1,t2], -2 n v_r during [t3,t4].
  const double two_n_vr = 2.0 * g.bragg_order * cs.recoil_velocity();
  CHECK(v.v12.z() == doctest::Approx(two_n_vr).epsilon(1e-14));
  CHECK(v.v34.z() == doctest::Approx(-two_n_vr).epsilon(1e-14));
  CHECK(v.v4inf.norm() == 0.0);

  // The horizontal drift accumulated by the closed sequence,
  // v12*T + v23*T' + v34*T, equals the closure error of the same geometry.
  const Eigen::Vector3d drift = v.v12 * g.pulse_separation +
                                v.v23 * g.mid_separation +
                                v.v34 * g.pulse_separation;
  const ClosureVector d = closure_error(cs, g);
  CHECK(drift.x() == doctest::Approx(d.x()).epsilon(1e-12));
  CHECK(drift.y() == doctest::Approx(d.y()).epsilon(1e-12));
  CHECK(drift.z() == doctest::Approx(0.0).epsilon(1e-18));
}

TEST_CASE("combining rates about the two mirror axes") {
  // Law of cosines with the 82 degree enclosed angle; the reference value
  // was computed independently.
  CHECK(combine_axis_rates(51.3e-6, 22e-6, kDefaultAxisAngle) ==
        doctest::Approx(58.564763497234914e-6).epsilon(1e-12));
  // Degenerate cases.
  CHECK(combine_axis_rates(3.0, 4.0, std::numbers::pi / 2.0) ==
        doctest::Approx(5.0).epsilon(1e-14));
  CHECK(combine_axis_rates(1.0, 0.0, 0.3) == doctest::Approx(1.0));
}
