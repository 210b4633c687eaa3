#pragma once

#include <span>
#include <utility>
#include <vector>

#include "momtun/vec3.hpp"

namespace momtun {

/// Well arrangements of the cubic group treated by the tunneling model.
/// SixFold: octahedral wells along the coordinate axes, 8 triangular
/// plaquettes.  EightFold: cubic wells along the body diagonals, 6
/// quadrilateral plaquettes.
enum class Coordination { SixFold, EightFold };

inline int plaquette_count(Coordination c) { return c == Coordination::SixFold ? 8 : 6; }
inline int site_count(Coordination c) { return c == Coordination::SixFold ? 6 : 8; }
const char* coordination_name(Coordination c);

/// Wells on the unit sphere, their nearest-neighbor tunneling bonds and the
/// oriented plaquettes enclosed by the tunneling geodesics.  Immutable after
/// construction; safe to share across threads.
struct Geometry {
  Coordination coordination = Coordination::SixFold;
  std::vector<Vec3> sites;                      // unit vectors
  std::vector<std::pair<int, int>> bonds;       // i < j
  std::vector<std::vector<int>> plaquettes;     // oriented site loops, counterclockwise from outside
  std::vector<double> plaquette_solid_angles;   // steradians, all positive

  /// Index into bonds for the unordered pair {i,j}, or -1 if not bonded.
  int bond_index(int i, int j) const;
  int degree(int site) const;
};

Geometry build_geometry(Coordination coordination);

/// Signed solid angle (steradians) subtended by a closed geodesic polygon on
/// the unit sphere.  Positive for counterclockwise loops seen from outside;
/// reversing the loop negates the value.
/// Throws std::invalid_argument for fewer than 3 vertices and
/// std::domain_error when consecutive vertices are antipodal (degenerate
/// geodesic).
double solid_angle(std::span<const Vec3> loop);

}  // namespace momtun
