#include "momtun/hermitian_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momtun {

HermitianMatrix::HermitianMatrix(int dimension) : n_(dimension) {
  if (dimension <= 0) throw std::invalid_argument("HermitianMatrix: dimension must be positive");
  a_.assign(static_cast<size_t>(n_) * n_, Complex{0.0, 0.0});
}

HermitianMatrix HermitianMatrix::from_dense(int dimension, std::span<const Complex> row_major,
                                            double tol) {
  if (row_major.size() != static_cast<size_t>(dimension) * dimension)
    throw std::invalid_argument("from_dense: size mismatch");
  double scale = 1.0;
  for (const Complex& v : row_major) scale = std::max(scale, std::abs(v));
  HermitianMatrix m(dimension);
  for (int i = 0; i < dimension; ++i) {
    for (int j = i; j < dimension; ++j) {
      const Complex upper = row_major[static_cast<size_t>(i) * dimension + j];
      const Complex lower = row_major[static_cast<size_t>(j) * dimension + i];
      if (std::abs(upper - std::conj(lower)) > tol * scale)
        throw std::invalid_argument("from_dense: matrix is not Hermitian");
      if (i == j)
        m.set(i, i, upper.real());
      else
        m.set(i, j, 0.5 * (upper + std::conj(lower)));
    }
  }
  return m;
}

void HermitianMatrix::set(int i, int j, Complex value) {
  if (i == j) {
    if (value.imag() != 0.0)
      throw std::invalid_argument("HermitianMatrix::set: diagonal entries must be real");
    a_[static_cast<size_t>(i) * n_ + i] = value;
    return;
  }
  a_[static_cast<size_t>(i) * n_ + j] = value;
  a_[static_cast<size_t>(j) * n_ + i] = std::conj(value);
}

void HermitianMatrix::add(int i, int j, Complex value) {
  set(i, j, (*this)(i, j) + value);
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i).real();
  return t;
}

double HermitianMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : a_) m = std::max(m, std::abs(v));
  return m;
}

int HermitianMatrix::nonzero_offdiagonal_count(double tol) const {
  int count = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && std::abs((*this)(i, j)) > tol) ++count;
  return count;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  if (other.n_ != n_) throw std::invalid_argument("HermitianMatrix: dimension mismatch in sum");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

}  // namespace momtun
