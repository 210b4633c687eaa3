#pragma once

#include <span>
#include <vector>

#include "momtun/geometry.hpp"
#include "momtun/half_integer.hpp"
#include "momtun/vec3.hpp"

namespace momtun {

/// F = -T ln sum_i exp(-E_i/T), evaluated with a max-shift so deep levels do
/// not overflow.  k_B = 1.  Throws std::domain_error for T <= 0.
double free_energy(std::span<const double> eigs, double temperature);

/// Reduced zero-field susceptibility chi~ = -d^2F/dh^2 at h -> 0 for the
/// tunneling + Zeeman Hamiltonian (units: k_B = 1, g*mu_B = 1; the physical
/// susceptibility is (g*mu_B)^2 * chi~).  Computed with a symmetric 5-point
/// second difference, step delta = 0.01*T/max(J,1).
double susceptibility(Coordination coordination, HalfInt j, double w, Vec3 direction,
                      double temperature);

/// Ground multiplet at zero field together with the per-member linear and
/// quadratic responses to a field along `direction`: the split branches are
/// fitted as E_i(h) = E0 - m_i h - (1/2) q_i h^2 over a small h range.
struct GroundMultiplet {
  double energy = 0.0;
  int degeneracy = 0;
  std::vector<double> moments;          // m_i = -dE_i/dh at small h > 0
  std::vector<double> quad_responses;   // q_i = -d^2E_i/dh^2
};

GroundMultiplet ground_multiplet(Coordination coordination, HalfInt j, double w, Vec3 direction);

/// Low-temperature limit of chi~: multiplets with no moment saturate at
/// (1/g0) sum q_i; multiplets carrying moments keep a Curie law with slope
/// (1/g0) sum m_i^2, i.e. chi~ = coefficient / T.
enum class LowTKind { Saturated, Curie };

struct LowTLimit {
  LowTKind kind = LowTKind::Saturated;
  double value = 0.0;  // saturated chi~ or the Curie coefficient
};

LowTLimit low_t_limit(const GroundMultiplet& multiplet);

/// Least-squares expansion of the ground state energy,
/// E_min(h) = e0 + linear*h + quadratic*h^2, over h in [0, 0.01*w/max(J,1/2)]
/// (9 samples; a cubic term is included in the fit and discarded to keep the
/// quadratic coefficient unbiased).
struct ZeemanExpansion {
  double e0 = 0.0;
  double linear = 0.0;
  double quadratic = 0.0;
};

ZeemanExpansion ground_state_expansion(Coordination coordination, HalfInt j, double w,
                                       Vec3 direction);

struct ThermoCurve {
  Coordination coordination = Coordination::SixFold;
  HalfInt j;
  double w = 1.0;
  Vec3 direction{0.0, 0.0, 1.0};
  std::vector<double> temperature;  // units of w/k_B
  std::vector<double> beta;         // 1/T
  std::vector<double> chi;          // reduced susceptibility, >= 0
};

/// chi~(T) over an ascending positive temperature grid.  The curve runs from
/// the Curie law J^2/(3T) at high T into the low_t_limit behavior at low T
/// and is isotropic in the field direction.
ThermoCurve susceptibility_curve(Coordination coordination, HalfInt j, double w,
                                 std::span<const double> temperatures, Vec3 direction);

}  // namespace momtun
