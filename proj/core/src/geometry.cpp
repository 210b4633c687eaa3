#include "momtun/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace momtun {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 from_spherical(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Orders the plaquette counterclockwise seen from outside the sphere.
std::vector<int> oriented(std::vector<int> loop, const std::vector<Vec3>& sites) {
  std::vector<Vec3> v;
  v.reserve(loop.size());
  for (int i : loop) v.push_back(sites[i]);
  if (solid_angle(v) < 0.0) std::reverse(loop.begin(), loop.end());
  return loop;
}

}  // namespace

const char* coordination_name(Coordination c) {
  return c == Coordination::SixFold ? "6-fold" : "8-fold";
}

int Geometry::bond_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (size_t b = 0; b < bonds.size(); ++b)
    if (bonds[b].first == i && bonds[b].second == j) return static_cast<int>(b);
  return -1;
}

int Geometry::degree(int site) const {
  int d = 0;
  for (const auto& [i, j] : bonds) d += (i == site || j == site);
  return d;
}

double solid_angle(std::span<const Vec3> loop) {
  const size_t n = loop.size();
  if (n < 3) throw std::invalid_argument("solid_angle: loop needs at least 3 vertices");
  for (size_t k = 0; k < n; ++k) {
    if (dot(loop[k], loop[(k + 1) % n]) <= -1.0 + 1e-12)
      throw std::domain_error("solid_angle: consecutive vertices are antipodal, geodesic degenerate");
  }
  // Fan of spherical triangles from vertex 0; each contributes the signed
  // solid angle 2*atan2(a.(b x c), 1 + a.b + b.c + c.a).
  double total = 0.0;
  for (size_t k = 1; k + 1 < n; ++k) {
    const Vec3 a = loop[0], b = loop[k], c = loop[k + 1];
    const double num = dot(a, cross(b, c));
    const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    total += 2.0 * std::atan2(num, den);
  }
  return total;
}

Geometry build_geometry(Coordination coordination) {
  Geometry g;
  g.coordination = coordination;

  if (coordination == Coordination::SixFold) {
    // Wells 1..6 at (theta, phi) = (0,0), (pi,0), (pi/2,0), (pi/2,pi),
    // (pi/2,pi/2), (pi/2,3pi/2): +z, -z, +x, -x, +y, -y.
    g.sites = {
        from_spherical(0.0, 0.0),        from_spherical(kPi, 0.0),
        from_spherical(kPi / 2, 0.0),    from_spherical(kPi / 2, kPi),
        from_spherical(kPi / 2, kPi / 2), from_spherical(kPi / 2, 3 * kPi / 2),
    };
    // Nearest neighbors are at 90 degrees; antipodal pairs (1,2),(3,4),(5,6)
    // do not tunnel.
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        if (std::abs(dot(g.sites[i], g.sites[j])) < 0.5) g.bonds.emplace_back(i, j);
    // One triangular plaquette per octant.
    for (int sz : {0, 1})
      for (int sx : {2, 3})
        for (int sy : {4, 5}) g.plaquettes.push_back(oriented({sz, sx, sy}, g.sites));
  } else {
    // Wells at the cube body diagonals, enumerated in antipodal pairs:
    // site 2k+1 at (arccos(1/sqrt3), (2k+1)pi/4), site 2k+2 opposite to it.
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    for (int k = 0; k < 4; ++k) {
      const Vec3 v = from_spherical(theta, (2 * k + 1) * kPi / 4);
      g.sites.push_back(v);
      g.sites.push_back(-v);
    }
    // Nearest neighbors are vertices sharing a cube edge (cos angle = 1/3).
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        if (std::abs(dot(g.sites[i], g.sites[j]) - 1.0 / 3.0) < 1e-9) g.bonds.emplace_back(i, j);
    // One quadrilateral plaquette per cube face, vertices sorted by angle
    // around the face normal.
    for (int axis = 0; axis < 3; ++axis) {
      for (int sign : {1, -1}) {
        std::vector<int> face;
        for (int i = 0; i < 8; ++i)
          if (sign * g.sites[i][axis] > 0.1) face.push_back(i);
        const Vec3 nrm = axis == 0 ? Vec3{double(sign), 0, 0}
                        : axis == 1 ? Vec3{0, double(sign), 0}
                                    : Vec3{0, 0, double(sign)};
        const Vec3 e1 = normalized(axis == 0 ? cross(nrm, Vec3{0, 0, 1}) : cross(nrm, Vec3{1, 0, 0}));
        const Vec3 e2 = cross(nrm, e1);
        std::sort(face.begin(), face.end(), [&](int a, int b) {
          return std::atan2(dot(g.sites[a], e2), dot(g.sites[a], e1)) <
                 std::atan2(dot(g.sites[b], e2), dot(g.sites[b], e1));
        });
        g.plaquettes.push_back(oriented(face, g.sites));
      }
    }
  }

  g.plaquette_solid_angles.reserve(g.plaquettes.size());
  for (const auto& p : g.plaquettes) {
    std::vector<Vec3> v;
    v.reserve(p.size());
    for (int i : p) v.push_back(g.sites[i]);
    g.plaquette_solid_angles.push_back(solid_angle(v));
  }
  return g;
}

}  // namespace momtun
