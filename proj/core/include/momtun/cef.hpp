#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "momtun/geometry.hpp"
#include "momtun/half_integer.hpp"
#include "momtun/spectra.hpp"
#include "momtun/vec3.hpp"

namespace momtun {

/// Cubic crystal-field constants.  The potential is evaluated classically,
/// substituting J_alpha -> J * n_alpha for a unit direction n:
///
///   U(n) = A J^4 (n_x^4 + n_y^4 + n_z^4 - 3/5)
///        + B J^4 (n_x^6 + n_y^6 + n_z^6 + 30 n_x^2 n_y^2 n_z^2 - 5/7)
///
/// (the sixth-order invariant carries 1/J^2, so both terms scale as J^4 and
/// the sector boundaries are independent of J).
struct CefParams {
  double a = 0.0;
  double b = 0.0;
  HalfInt j = HalfInt::from_twice(2);
};

/// Throws std::domain_error unless |n| = 1.
double classical_potential(const CefParams& params, Vec3 n);

/// Stability sectors of the (A,B) plane:
///   SixFold    A < B/3  and  A < -3B/2      (minima on the coordinate axes)
///   EightFold  A > B/3  and  A > 35B/6      (minima on the body diagonals)
///   TwelveFold -3B/2 < A < 35B/6            (minima on the edge centers)
/// Boundary when any defining equality holds within 1e-12 (relative).
/// Throws std::domain_error for (0,0).
enum class Sector { SixFold, EightFold, TwelveFold, Boundary };

const char* sector_name(Sector s);

Sector sector(double a, double b);

/// Brute-force global minima of the classical potential: Fibonacci sphere
/// grid (>= grid_points samples) refined by projected gradient descent,
/// clustered within 1e-4 rad.  Deterministic.
std::vector<Vec3> minima_bruteforce(const CefParams& params, int grid_points = 20000);

/// One row of the built-in rare-earth table: Hund ground-state J and the
/// tabulated class assignments for both coordinations.
struct IonRecord {
  std::string symbol;
  HalfInt j;
  int class_sixfold = 0;
  int class_eightfold = 0;
};

/// Parses the plain tabular ion data ("symbol 2J class6 class8" per line,
/// '#' comments).  Throws std::invalid_argument on malformed rows.
std::vector<IonRecord> parse_ion_table(std::string_view text);

/// The table shipped with the library.
const std::vector<IonRecord>& ion_table();

/// Comparison of the computed class against the tabulated one.  For the
/// six-fold case a mismatch is retried with J -> J + 2, the class equivalence
/// that corresponds to flipping the sign of the tunneling amplitude; the
/// eight-fold spectrum is invariant under that flip, so no retry exists and
/// a mismatch is final (such rows are reported, never silently corrected).
struct IonClassReport {
  std::string symbol;
  Coordination coordination = Coordination::SixFold;
  HalfInt j;
  ClassId computed;
  int table_class = 0;
  enum class Match { Direct, WSignFlip, Mismatch } match = Match::Direct;
};

/// Throws std::invalid_argument for unknown symbols (message lists the known
/// ones).
IonClassReport ion_class(std::string_view symbol, Coordination coordination);

}  // namespace momtun
