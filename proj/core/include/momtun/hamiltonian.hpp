#pragma once

#include "momtun/gauge.hpp"
#include "momtun/geometry.hpp"
#include "momtun/half_integer.hpp"
#include "momtun/hermitian_matrix.hpp"
#include "momtun/vec3.hpp"

namespace momtun {

/// Magnetic field in reduced units h = g*mu_B*H.  Energies are measured in
/// units of the tunneling amplitude; the Zeeman scale is J*h.  Valid for
/// J*h much smaller than the well depth (not enforced here).
struct FieldSpec {
  Vec3 direction{0.0, 0.0, 1.0};  // unit vector
  double h = 0.0;                 // magnitude, >= 0
  HalfInt j;
};

/// Tunneling Hamiltonian: entry(i,j) = w * exp(i*phi_ij) on bonds, zero on
/// the diagonal and for non-bonded pairs (antipodal wells in particular).
/// Throws std::invalid_argument if the phases were built for a different
/// geometry.
HermitianMatrix build_tunneling(const Geometry& geometry, const PhaseAssignment& phases, double w);

/// Zeeman term: real diagonal with entry k = -J * h * (direction . site_k).
/// With the field along (0,0,1) in the six-fold arrangement this is
/// J*diag(-h, h, 0, 0, 0, 0); along (1,1,1)/sqrt(3) in the eight-fold case it
/// is -h*J*(3,-3,1,-1,-1,1,1,-1)/3.
/// Throws std::domain_error unless |direction| = 1 (1e-12) and h >= 0.
HermitianMatrix zeeman(const Geometry& geometry, const FieldSpec& field);

namespace detail {
/// Zeeman diagonal with signed magnitude, used internally for finite
/// differences in h.
HermitianMatrix zeeman_signed(const Geometry& geometry, HalfInt j, Vec3 direction, double h);
}  // namespace detail

}  // namespace momtun
