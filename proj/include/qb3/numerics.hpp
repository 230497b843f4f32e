#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qb3/tolerances.hpp"

namespace qb3 {

using cplx = std::complex<double>;

/// Raised when the shifted-QR eigenvalue iteration fails to converge within
/// the configured sweep cap. Never silently returns garbage.
class EigenvalueFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Small dense complex matrix, row-major. Sized for this artifact: every
/// matrix in the pipeline is at most 8x8.
class CMatrix {
 public:
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<cplx>& entries() const { return entries_; }

  CMatrix adjoint() const;
  CMatrix conjugate() const;
  CMatrix transpose() const;
  cplx trace() const;

  /// Largest |entry|.
  double max_abs() const;
  double frobenius_norm() const;

  /// Throws std::invalid_argument if any entry is NaN or infinite.
  void require_finite(const char* what) const;

 private:
  std::size_t rows_, cols_;
  std::vector<cplx> entries_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& a);

/// ||a - b||_max
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// 2x2 Pauli sigma_y in the computational basis.
CMatrix pauli_y();

struct QrResult {
  CMatrix q;
  CMatrix r;
};

/// Householder QR of a square matrix, with phases absorbed into q so that the
/// diagonal of r is real and nonnegative. That convention makes the
/// factorization unique for generic input and is what turns a Ginibre sample
/// into a Haar unitary.
QrResult qr_decompose(const CMatrix& a);

/// All eigenvalues (with algebraic multiplicity) of a square matrix of size
/// <= 8, via Hessenberg reduction + Wilkinson-shifted QR sweeps.
/// Throws EigenvalueFailure after kTol.eigen_max_sweeps sweeps on one
/// eigenvalue without deflation.
std::vector<cplx> eigenvalues(const CMatrix& a);

/// Determinant by partially pivoted elimination; square, size <= 8.
cplx determinant(const CMatrix& a);

}  // namespace qb3
