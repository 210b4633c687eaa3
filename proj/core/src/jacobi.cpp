#include "momtun/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momtun {

namespace {

// One Jacobi update of the pair (a(i,j), a(k,l)) for rotation (s, tau).
inline void rotate(std::vector<double>& a, int n, int i, int j, int k, int l, double s,
                   double tau) {
  double& x = a[static_cast<size_t>(i) * n + j];
  double& y = a[static_cast<size_t>(k) * n + l];
  const double g = x, h = y;
  x = g - s * (h + g * tau);
  y = h + s * (g - h * tau);
}

}  // namespace

std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n <= 0 || a.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("jacobi_symmetric_eigenvalues: bad dimensions");

  const auto idx = [n](int i, int j) { return static_cast<size_t>(i) * n + j; };
  std::vector<double> d(n), b(n), z(n, 0.0);
  for (int i = 0; i < n; ++i) d[i] = b[i] = a[idx(i, i)];

  for (int sweep = 1; sweep <= 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) off += std::abs(a[idx(p, q)]);
    if (off == 0.0) break;

    const double thresh = sweep < 4 ? 0.2 * off / (n * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double g = 100.0 * std::abs(a[idx(p, q)]);
        // After a few sweeps, rotations on entries that no longer affect the
        // diagonal at working precision are skipped by zeroing them.
        if (sweep > 4 && std::abs(d[p]) + g == std::abs(d[p]) &&
            std::abs(d[q]) + g == std::abs(d[q])) {
          a[idx(p, q)] = 0.0;
        } else if (std::abs(a[idx(p, q)]) > thresh) {
          double h = d[q] - d[p];
          double t;
          if (std::abs(h) + g == std::abs(h)) {
            t = a[idx(p, q)] / h;
          } else {
            const double theta = 0.5 * h / a[idx(p, q)];
            t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const double tau = s / (1.0 + c);
          h = t * a[idx(p, q)];
          z[p] -= h;
          z[q] += h;
          d[p] -= h;
          d[q] += h;
          a[idx(p, q)] = 0.0;
          for (int j = 0; j < p; ++j) rotate(a, n, j, p, j, q, s, tau);
          for (int j = p + 1; j < q; ++j) rotate(a, n, p, j, j, q, s, tau);
          for (int j = q + 1; j < n; ++j) rotate(a, n, p, j, q, j, s, tau);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      b[i] += z[i];
      d[i] = b[i];
      z[i] = 0.0;
    }
  }

  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> hermitian_eigenvalues(std::span<const std::complex<double>> a, int n) {
  if (n <= 0 || a.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("hermitian_eigenvalues: bad dimensions");

  // Doubled real symmetric embedding: H = A + iB  ->  [[A, -B], [B, A]].
  const int m = 2 * n;
  std::vector<double> real(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto v = a[static_cast<size_t>(i) * n + j];
      real[static_cast<size_t>(i) * m + j] = v.real();
      real[static_cast<size_t>(i) * m + (j + n)] = -v.imag();
      real[static_cast<size_t>(i + n) * m + j] = v.imag();
      real[static_cast<size_t>(i + n) * m + (j + n)] = v.real();
    }
  }

  const std::vector<double> doubled = jacobi_symmetric_eigenvalues(std::move(real), m);
  double scale = 1.0;
  for (double e : doubled) scale = std::max(scale, std::abs(e));

  std::vector<double> eigs(n);
  for (int k = 0; k < n; ++k) {
    const double lo = doubled[2 * k], hi = doubled[2 * k + 1];
    if (hi - lo > 1e-10 * scale)
      throw std::runtime_error("hermitian_eigenvalues: doubled spectrum did not pair up");
    eigs[k] = 0.5 * (lo + hi);
  }
  return eigs;
}

}  // namespace momtun
