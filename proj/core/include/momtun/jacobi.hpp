#pragma once

#include <complex>
#include <span>
#include <vector>

namespace momtun {

/// Eigenvalues of a real symmetric matrix (row-major, full storage) by cyclic
/// Jacobi rotations.  Ascending order.  Intended for the small matrices of
/// this library; cost is O(n^3) per sweep.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a, int n);

/// Eigenvalues of a complex Hermitian matrix via the doubled real symmetric
/// embedding [[A, -B], [B, A]] of H = A + iB; each eigenvalue of H appears
/// twice in the embedding and the pairs are averaged.  Ascending order.
/// Hermiticity is not checked here.
std::vector<double> hermitian_eigenvalues(std::span<const std::complex<double>> a, int n);

}  // namespace momtun
