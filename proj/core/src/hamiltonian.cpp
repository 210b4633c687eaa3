#include "momtun/hamiltonian.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace momtun {

HermitianMatrix build_tunneling(const Geometry& geometry, const PhaseAssignment& phases,
                                double w) {
  const Geometry& pg = phases.geometry();
  if (pg.coordination != geometry.coordination || pg.sites.size() != geometry.sites.size() ||
      pg.bonds != geometry.bonds)
    throw std::invalid_argument("build_tunneling: phases were built for a different geometry");

  const int n = static_cast<int>(geometry.sites.size());
  HermitianMatrix m(n);
  for (size_t b = 0; b < geometry.bonds.size(); ++b) {
    const auto& [i, j] = geometry.bonds[b];
    const double phi = phases.bond_phase(static_cast<int>(b));
    m.set(i, j, w * std::complex<double>(std::cos(phi), std::sin(phi)));
  }
  return m;
}

namespace detail {

HermitianMatrix zeeman_signed(const Geometry& geometry, HalfInt j, Vec3 direction, double h) {
  const int n = static_cast<int>(geometry.sites.size());
  HermitianMatrix m(n);
  for (int k = 0; k < n; ++k) m.set(k, k, -j.value() * h * dot(direction, geometry.sites[k]));
  return m;
}

}  // namespace detail

HermitianMatrix zeeman(const Geometry& geometry, const FieldSpec& field) {
  if (!is_unit(field.direction)) throw std::domain_error("zeeman: field direction must be a unit vector");
  if (field.h < 0.0) throw std::domain_error("zeeman: field magnitude must be >= 0");
  return detail::zeeman_signed(geometry, field.j, field.direction, field.h);
}

}  // namespace momtun
