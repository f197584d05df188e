#include "coherence/complex_matrix.hpp"

#include <cmath>

namespace coherence {

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      out(i, j) = std::conj((*this)(j, i));
    }
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx sum = 0.0;
  for (int i = 0; i < dim_; ++i) {
    sum += (*this)(i, i);
  }
  return sum;
}

double ComplexMatrix::hermiticity_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
      return false;
    }
  }
  return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  double worst = 0.0;
  for (size_t k = 0; k < entries_.size(); ++k) {
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  }
  return worst;
}

double ComplexMatrix::max_offdiag() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      if (i != j) {
        worst = std::max(worst, std::abs((*this)(i, j)));
      }
    }
  }
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  for (size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] += other.entries_[k];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (cplx& e : entries_) {
    e *= scale;
  }
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int n = a.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) {
        continue;
      }
      for (int j = 0; j < n; ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix a) {
  a *= scale;
  return a;
}

}  // namespace coherence
