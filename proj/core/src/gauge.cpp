#include "momtun/gauge.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace momtun {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_angle(double a) {
  a = std::remainder(a, kTwoPi);  // (-pi, pi], remainder gives [-pi, pi]
  if (a <= -std::numbers::pi) a += kTwoPi;
  return a;
}

double wrap_angle_positive(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

PhaseAssignment::PhaseAssignment(Geometry geometry, HalfInt j, std::vector<double> bond_phases)
    : geometry_(std::move(geometry)), j_(j), phases_(std::move(bond_phases)) {
  if (phases_.size() != geometry_.bonds.size())
    throw std::invalid_argument("PhaseAssignment: one phase per bond required");
  for (double& p : phases_) p = wrap_angle(p);
}

double PhaseAssignment::phase(int from, int to) const {
  const int b = geometry_.bond_index(from, to);
  if (b < 0) throw std::invalid_argument("PhaseAssignment::phase: sites are not bonded");
  return from < to ? phases_[b] : -phases_[b];
}

PhaseAssignment assign_phases(const Geometry& geometry, HalfInt j) {
  if (j.twice() < 0) throw std::domain_error("assign_phases: J must be >= 0");

  const int nsites = static_cast<int>(geometry.sites.size());
  const int nbonds = static_cast<int>(geometry.bonds.size());

  // Breadth-first spanning tree from site 0 with sorted adjacency: tree
  // edges carry zero phase.
  std::vector<std::vector<int>> neighbors(nsites);
  for (const auto& [a, b] : geometry.bonds) {
    neighbors[a].push_back(b);
    neighbors[b].push_back(a);
  }
  std::vector<std::optional<double>> phase(nbonds);
  std::vector<bool> seen(nsites, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : neighbors[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      phase[geometry.bond_index(u, v)] = 0.0;
      queue.push_back(v);
    }
  }

  const auto directed = [&](int from, int to) -> std::optional<double> {
    const int b = geometry.bond_index(from, to);
    if (!phase[b]) return std::nullopt;
    return from < to ? *phase[b] : -*phase[b];
  };

  // Solve the remaining phases plaquette by plaquette: whenever a plaquette
  // has a single unknown edge, the flux constraint fixes it.  The last
  // plaquette of each geometry is redundant (total flux J*4pi = 0 mod 2pi
  // for 2J integer) and is verified below.
  const int np = static_cast<int>(geometry.plaquettes.size());
  std::vector<double> target(np);
  for (int p = 0; p < np; ++p)
    target[p] = wrap_angle_positive(j.value() * geometry.plaquette_solid_angles[p]);

  bool progress = true;
  while (progress) {
    progress = false;
    for (int p = 0; p < np; ++p) {
      const auto& loop = geometry.plaquettes[p];
      const int len = static_cast<int>(loop.size());
      int unknown_from = -1, unknown_to = -1, unknowns = 0;
      double partial = 0.0;
      for (int k = 0; k < len; ++k) {
        const int from = loop[k], to = loop[(k + 1) % len];
        if (const auto ph = directed(from, to)) {
          partial += *ph;
        } else {
          ++unknowns;
          unknown_from = from;
          unknown_to = to;
        }
      }
      if (unknowns != 1) continue;
      const double need = wrap_angle(target[p] - partial);
      const int b = geometry.bond_index(unknown_from, unknown_to);
      phase[b] = unknown_from < unknown_to ? need : -need;
      progress = true;
    }
  }

  std::vector<double> phases(nbonds);
  for (int b = 0; b < nbonds; ++b) {
    if (!phase[b]) throw std::logic_error("assign_phases: constraint propagation stalled");
    phases[b] = *phase[b];
  }

  PhaseAssignment out(geometry, j, std::move(phases));
  for (int p = 0; p < np; ++p) {
    const double dev = wrap_angle(plaquette_flux(out, p) - target[p]);
    if (std::abs(dev) > 1e-9)
      throw std::logic_error("assign_phases: plaquette constraint violated after solve");
  }
  return out;
}

double plaquette_flux(const PhaseAssignment& assignment, int plaquette) {
  const auto& plaquettes = assignment.geometry().plaquettes;
  if (plaquette < 0 || plaquette >= static_cast<int>(plaquettes.size()))
    throw std::invalid_argument("plaquette_flux: index out of range");
  const auto& loop = plaquettes[plaquette];
  const int len = static_cast<int>(loop.size());
  double sum = 0.0;
  for (int k = 0; k < len; ++k) sum += assignment.phase(loop[k], loop[(k + 1) % len]);
  return wrap_angle_positive(sum);
}

PhaseAssignment apply_gauge(const PhaseAssignment& assignment, std::span<const double> site_phases) {
  const Geometry& g = assignment.geometry();
  if (site_phases.size() != g.sites.size())
    throw std::invalid_argument("apply_gauge: one phase per site required");
  std::vector<double> phases(g.bonds.size());
  for (size_t b = 0; b < g.bonds.size(); ++b) {
    const auto& [i, j] = g.bonds[b];
    phases[b] = wrap_angle(assignment.bond_phase(static_cast<int>(b)) + site_phases[j] - site_phases[i]);
  }
  return PhaseAssignment(g, assignment.moment(), std::move(phases));
}

}  // namespace momtun
