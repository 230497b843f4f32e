#include "qb3/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qb3 {

namespace {

constexpr std::size_t kMaxDim = 8;

void require_square_small(const CMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  }
  if (a.rows() == 0 || a.rows() > kMaxDim) {
    throw std::invalid_argument(std::string(what) + ": supported sizes are 1..8");
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("CMatrix: dimensions must be positive");
  }
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("CMatrix: dimensions must be positive");
  }
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("CMatrix: entry count does not match dimensions");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CMatrix CMatrix::conjugate() const {
  CMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = std::conj(entries_[i]);
  return m;
}

CMatrix CMatrix::transpose() const {
  CMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

cplx CMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix must be square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

void CMatrix::require_finite(const char* what) const {
  for (const cplx& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions do not match");
  }
  a.require_finite("matmul lhs");
  b.require_finite("matmul rhs");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix add: dimension mismatch");
  }
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sub: dimension mismatch");
  }
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

CMatrix operator*(cplx s, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m(0, 1) = cplx{0.0, -1.0};
  m(1, 0) = cplx{0.0, 1.0};
  return m;
}

QrResult qr_decompose(const CMatrix& a) {
  require_square_small(a, "qr_decompose");
  a.require_finite("qr_decompose");
  const std::size_t n = a.rows();

  CMatrix r = a;
  CMatrix q = CMatrix::identity(n);

  // Householder sweep: r becomes upper triangular, q accumulates reflectors.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    double colnorm = 0.0;
    for (std::size_t i = k; i < n; ++i) colnorm += std::norm(r(i, k));
    colnorm = std::sqrt(colnorm);
    if (colnorm == 0.0) continue;

    const cplx x0 = r(k, k);
    const cplx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cplx{1.0, 0.0};
    const cplx alpha = -phase * colnorm;

    std::vector<cplx> v(n - k);
    v[0] = x0 - alpha;
    for (std::size_t i = k + 1; i < n; ++i) v[i - k] = r(i, k);
    double vnorm2 = 0.0;
    for (const cplx& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) continue;

    // r <- (I - 2 v v^dag / |v|^2) r ; q <- q (I - 2 v v^dag / |v|^2)
    for (std::size_t j = k; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i - k]) * r(i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= dot * v[i - k];
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx dot = 0.0;
      for (std::size_t j = k; j < n; ++j) dot += q(i, j) * v[j - k];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= dot * std::conj(v[j - k]);
    }
  }

  // Zero the subdiagonal dust and force a real nonnegative diagonal on r by
  // absorbing phases into q.
  for (std::size_t r_i = 1; r_i < n; ++r_i)
    for (std::size_t c = 0; c < r_i; ++c) r(r_i, c) = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    if (std::abs(d) == 0.0) continue;
    const cplx phase = d / std::abs(d);
    for (std::size_t j = i; j < n; ++j) r(i, j) *= std::conj(phase);
    for (std::size_t row = 0; row < n; ++row) q(row, i) *= phase;
  }
  return {std::move(q), std::move(r)};
}

namespace {

// Householder similarity reduction to upper Hessenberg form.
CMatrix hessenberg(const CMatrix& a) {
  const std::size_t n = a.rows();
  CMatrix h = a;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double colnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) colnorm += std::norm(h(i, k));
    colnorm = std::sqrt(colnorm);
    if (colnorm == 0.0) continue;

    const cplx x0 = h(k + 1, k);
    const cplx phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : cplx{1.0, 0.0};
    const cplx alpha = -phase * colnorm;

    std::vector<cplx> v(n - k - 1);
    v[0] = x0 - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i - k - 1] = h(i, k);
    double vnorm2 = 0.0;
    for (const cplx& z : v) vnorm2 += std::norm(z);
    if (vnorm2 == 0.0) continue;

    // h <- P h P with P = I - 2 v v^dag / |v|^2 acting on rows/cols k+1..n-1.
    for (std::size_t j = 0; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i - k - 1]) * h(i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * v[i - k - 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
      cplx dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j - k - 1];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j - k - 1]);
    }
  }
  return h;
}

// Both roots of the 2x2 block [[a,b],[c,d]].
std::pair<cplx, cplx> eig2x2(cplx a, cplx b, cplx c, cplx d) {
  const cplx mean = 0.5 * (a + d);
  const cplx disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  return {mean + disc, mean - disc};
}

// Wilkinson shift: the eig2x2 root closer to d.
cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  auto [l1, l2] = eig2x2(a, b, c, d);
  return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

}  // namespace

std::vector<cplx> eigenvalues(const CMatrix& a) {
  require_square_small(a, "eigenvalues");
  a.require_finite("eigenvalues");
  const std::size_t n = a.rows();

  if (n == 1) return {a(0, 0)};

  CMatrix h = hessenberg(a);
  const double scale = std::max(h.frobenius_norm(), std::numeric_limits<double>::min());
  const double eps = std::numeric_limits<double>::epsilon();

  std::vector<cplx> eig;
  eig.reserve(n);

  auto subdiag_negligible = [&](std::size_t i) {
    double tst = std::abs(h(i - 1, i - 1)) + std::abs(h(i, i));
    if (tst == 0.0) tst = scale;
    return std::abs(h(i, i - 1)) <= eps * tst;
  };

  std::size_t hi = n - 1;  // active block is rows/cols lo..hi
  int sweeps = 0;
  while (true) {
    // Deflate converged trailing eigenvalues.
    while (hi > 0 && subdiag_negligible(hi)) {
      h(hi, hi - 1) = 0.0;
      eig.push_back(h(hi, hi));
      --hi;
      sweeps = 0;
    }
    if (hi == 0) {
      eig.push_back(h(0, 0));
      break;
    }

    // Find the start of the active unreduced block.
    std::size_t lo = hi;
    while (lo > 0 && !subdiag_negligible(lo)) --lo;

    if (hi - lo == 1) {
      auto [l1, l2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
      eig.push_back(l1);
      eig.push_back(l2);
      if (lo == 0) break;
      hi = lo - 1;
      sweeps = 0;
      continue;
    }

    if (++sweeps > kTol.eigen_max_sweeps) {
      throw EigenvalueFailure("eigenvalues: QR iteration did not converge");
    }

    cplx mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    if (sweeps % 30 == 0) {
      // Exceptional shift to break rare symmetric stalls.
      mu = cplx{std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0};
    }

    // One shifted QR sweep on the active block via Givens rotations:
    // H - mu I = Q R, then H <- R Q + mu I. Hessenberg form is preserved.
    const std::size_t m = hi - lo + 1;
    std::vector<cplx> cs(m - 1), sn(m - 1);
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;

    for (std::size_t k = lo; k < hi; ++k) {
      const cplx f = h(k, k);
      const cplx g = h(k + 1, k);
      const double r = std::sqrt(std::norm(f) + std::norm(g));
      cplx c, s;
      if (r == 0.0) {
        c = 1.0;
        s = 0.0;
      } else {
        c = std::conj(f) / r;  // rotation is applied as [[c, s],[-conj(s), conj(c)]]
        s = std::conj(g) / r;
      }
      cs[k - lo] = c;
      sn[k - lo] = s;
      for (std::size_t j = k; j <= hi; ++j) {
        const cplx t1 = h(k, j), t2 = h(k + 1, j);
        h(k, j) = c * t1 + s * t2;
        h(k + 1, j) = -std::conj(s) * t1 + std::conj(c) * t2;
      }
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const cplx c = cs[k - lo], s = sn[k - lo];
      const std::size_t top = lo;
      for (std::size_t i = top; i <= std::min(k + 2, hi); ++i) {
        const cplx t1 = h(i, k), t2 = h(i, k + 1);
        h(i, k) = t1 * std::conj(c) + t2 * std::conj(s);
        h(i, k + 1) = -t1 * s + t2 * c;
      }
    }
    for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
  }

  return eig;
}

cplx determinant(const CMatrix& a) {
  require_square_small(a, "determinant");
  a.require_finite("determinant");
  const std::size_t n = a.rows();

  CMatrix m = a;
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        pivot = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace qb3
