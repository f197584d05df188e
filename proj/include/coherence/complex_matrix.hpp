#pragma once

#include <complex>
#include <vector>

namespace coherence {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {}

  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
  const cplx& operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }

  ComplexMatrix adjoint() const;
  cplx trace() const;

  // max_ij |a_ij - conj(a_ji)|
  double hermiticity_residual() const;

  bool all_finite() const;

  // max_ij |a_ij - b_ij|
  double max_abs_diff(const ComplexMatrix& other) const;

  // max off-diagonal magnitude
  double max_offdiag() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

 private:
  int dim_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);

}  // namespace coherence
