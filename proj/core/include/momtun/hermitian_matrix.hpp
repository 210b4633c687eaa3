#pragma once

#include <complex>
#include <span>
#include <vector>

namespace momtun {

/// Small dense complex Hermitian matrix, Hermitian by construction: set()
/// writes an entry and its conjugate transpose together, diagonal entries are
/// real.
class HermitianMatrix {
 public:
  using Complex = std::complex<double>;

  explicit HermitianMatrix(int dimension);

  /// Validates Hermiticity of arbitrary row-major data within tol (relative
  /// to the largest entry magnitude); throws std::invalid_argument otherwise.
  static HermitianMatrix from_dense(int dimension, std::span<const Complex> row_major,
                                    double tol = 1e-12);

  int dim() const { return n_; }
  Complex operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  /// Sets (i,j) and (j,i) = conj(value).  For i == j the value must be real.
  void set(int i, int j, Complex value);
  void add(int i, int j, Complex value);

  double trace() const;
  double max_abs() const;
  int nonzero_offdiagonal_count(double tol = 0.0) const;

  HermitianMatrix& operator+=(const HermitianMatrix& other);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }

  std::span<const Complex> data() const { return a_; }

 private:
  int n_;
  std::vector<Complex> a_;  // row-major
};

}  // namespace momtun
