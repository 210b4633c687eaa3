#pragma once

#include <span>
#include <vector>

#include "momtun/geometry.hpp"
#include "momtun/half_integer.hpp"

namespace momtun {

/// One real phase per directed tunneling bond, phi(j->i) = -phi(i->j),
/// satisfying the plaquette flux constraints
///
///     sum of phi over the directed bonds of plaquette P  =  J * Omega(P)  (mod 2*pi)
///
/// where Omega(P) is the plaquette's solid angle.  Phases are stored reduced
/// to (-pi, pi].  The assignment keeps its own copy of the geometry.
class PhaseAssignment {
 public:
  PhaseAssignment(Geometry geometry, HalfInt j, std::vector<double> bond_phases);

  const Geometry& geometry() const { return geometry_; }
  HalfInt moment() const { return j_; }

  /// Directed phase phi(from -> to).  Throws std::invalid_argument if the
  /// pair is not a bond.
  double phase(int from, int to) const;

  /// Phase stored for bond b in its i<j direction.
  double bond_phase(int b) const { return phases_[b]; }

 private:
  Geometry geometry_;
  HalfInt j_;
  std::vector<double> phases_;  // one per geometry bond, direction i < j
};

/// Builds a constraint-satisfying assignment in the spanning-tree gauge:
/// breadth-first tree from site 0 carries zero phases, the remaining bond
/// phases are solved plaquette by plaquette.  Deterministic.
/// Throws std::domain_error for J < 0.
PhaseAssignment assign_phases(const Geometry& geometry, HalfInt j);

/// Directed phase sum around plaquette p, reduced to [0, 2*pi).
double plaquette_flux(const PhaseAssignment& assignment, int plaquette);

/// Gauge transformation phi(i->j) -> phi(i->j) + f[j] - f[i].  Fluxes are
/// unchanged; the Hamiltonian spectrum is invariant.
PhaseAssignment apply_gauge(const PhaseAssignment& assignment, std::span<const double> site_phases);

/// Reduce an angle to (-pi, pi].
double wrap_angle(double a);
/// Reduce an angle to [0, 2*pi).
double wrap_angle_positive(double a);

}  // namespace momtun
