#include "momtun/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "momtun/jacobi.hpp"

namespace momtun {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> eigenvalues(const HermitianMatrix& m) {
  return hermitian_eigenvalues(m.data(), m.dim());
}

std::vector<double> closed_form_6(HalfInt j, double w) {
  std::vector<double> e;
  e.reserve(6);
  for (int k = 0; k < 6; ++k) {
    const double x = kPi * (j.value() + 2.0 * k);
    const double c3 = std::cos(x / 3.0), s23 = std::sin(2.0 * x / 3.0), s2 = std::sin(x / 2.0);
    const double chi =
        std::cos(2.0 * x / 3.0) * std::cos(x / 2.0) - std::sqrt(c3 * c3 + s23 * s23 * s2 * s2);
    e.push_back((k % 2 == 0 ? 2.0 : -2.0) * w * chi);
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<double> closed_form_8(HalfInt j, double w) {
  std::vector<double> e;
  e.reserve(8);
  for (int k = 0; k < 4; ++k) {
    const double x = kPi * (j.value() + 3.0 * k);
    const double s2 = std::sin(x / 2.0), s3 = std::sin(x / 3.0);
    const double xi = 2.0 * std::cos(x / 2.0) * std::cos(x / 3.0) +
                      std::sqrt(1.0 + 4.0 * s2 * s2 * s3 * s3);
    e.push_back(w * xi);
    e.push_back(-w * xi);
  }
  std::sort(e.begin(), e.end());
  return e;
}

ClassId classify(HalfInt j, Coordination coordination) {
  if (j.twice() < 0) throw std::domain_error("classify: J must be >= 0");
  const int p = plaquette_count(coordination);
  const int r = j.twice() % p;
  const int m = std::min(r, p - r);
  return ClassId{coordination, m + 1, p / 2, m};
}

std::string class_members(const ClassId& id) {
  const std::string period = std::to_string(id.period);
  if (id.remainder == 0) return period + "n";
  if (id.remainder == id.period && id.remainder % 2 == 0)
    return period + "n+" + std::to_string(id.remainder / 2);
  if (id.remainder % 2 == 0) return period + "n±" + std::to_string(id.remainder / 2);
  return period + "n±" + std::to_string(id.remainder) + "/2";
}

std::vector<LevelGroup> degeneracy_groups(std::span<const double> eigs, double tol) {
  std::vector<LevelGroup> groups;
  size_t i = 0;
  while (i < eigs.size()) {
    double sum = eigs[i];
    size_t j = i + 1;
    while (j < eigs.size() && eigs[j] - eigs[j - 1] <= tol * std::max(1.0, std::abs(eigs[j - 1]))) {
      sum += eigs[j];
      ++j;
    }
    groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return groups;
}

Spectrum spectrum_of(const HermitianMatrix& m, double tol) {
  Spectrum s;
  s.eigenvalues = eigenvalues(m);
  s.groups = degeneracy_groups(s.eigenvalues, tol);
  s.tolerance = tol;
  return s;
}

}  // namespace momtun
