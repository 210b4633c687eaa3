#pragma once

#include <span>
#include <vector>

#include "momtun/geometry.hpp"
#include "momtun/half_integer.hpp"
#include "momtun/hermitian_matrix.hpp"

namespace momtun {

/// Full real eigenvalue multiset of a Hermitian matrix, ascending.
std::vector<double> eigenvalues(const HermitianMatrix& m);

/// The six-fold tunneling spectrum in closed form,
///   E_k = (-1)^k * 2w * chi(pi*(J + 2k)),  k = 0..5,
///   chi(x) = cos(2x/3)cos(x/2) - sqrt(cos^2(x/3) + sin^2(2x/3)sin^2(x/2)).
/// Returned ascending.
std::vector<double> closed_form_6(HalfInt j, double w);

/// The eight-fold tunneling spectrum in closed form,
///   E_k^+- = +- w * xi(pi*(J + 3k)),  k = 0..3,
///   xi(x)  = 2cos(x/2)cos(x/3) + sqrt(1 + 4sin^2(x/2)sin^2(x/3)),
/// the last form being the numerically stable factorization of
///   xi^2 = 3 + 2cos(x)cos(2x/3) + 4cos(x/2)cos(x/3)sqrt(4sin^2(x/2)sin^2(x/3)+1).
/// Returned ascending.
std::vector<double> closed_form_8(HalfInt j, double w);

/// Moments with equal tunneling spectra form classes of period p/2 in J
/// (p = number of plaquettes): with r = 2J mod p and m = min(r, p - r), the
/// class label is m + 1.  Six-fold: 5 classes; eight-fold: 4.
struct ClassId {
  Coordination coordination = Coordination::SixFold;
  int label = 1;      // 1 .. p/2 + 1
  int period = 4;     // p/2
  int remainder = 0;  // m, in units of 1/2: class members are |(p/2)n +- m/2|
};

ClassId classify(HalfInt j, Coordination coordination);

/// Class members as printed in the reference tables, e.g. "4n+-1/2".
std::string class_members(const ClassId& id);

struct LevelGroup {
  double energy = 0.0;
  int multiplicity = 0;
};

/// Groups adjacent eigenvalues within tol*max(1, |E|); group energy is the
/// mean of its members.  Input must be ascending.
std::vector<LevelGroup> degeneracy_groups(std::span<const double> eigs, double tol = 1e-8);

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::vector<LevelGroup> groups;
  double tolerance = 1e-8;
};

Spectrum spectrum_of(const HermitianMatrix& m, double tol = 1e-8);

}  // namespace momtun
