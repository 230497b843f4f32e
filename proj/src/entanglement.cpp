#include "qb3/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace qb3 {

namespace {

int bit_shift(Qubit q) { return 2 - static_cast<int>(q); }

double clamp_measure(double value, const char* what) {
  if (!std::isfinite(value) || value < -kTol.measure_range ||
      value > 1.0 + kTol.measure_range) {
    throw ConsistencyFailure(std::string(what) + " out of range: " + std::to_string(value));
  }
  return std::clamp(value, 0.0, 1.0);
}

// sigma_y (x) sigma_y, the two-qubit spin flip.
const CMatrix& spin_flip_2q() {
  static const CMatrix m = [] {
    CMatrix y2(4, 4);
    y2(0, 3) = -1.0;
    y2(1, 2) = 1.0;
    y2(2, 1) = 1.0;
    y2(3, 0) = -1.0;
    return y2;
  }();
  return m;
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix mat, std::vector<Qubit> qubits)
    : mat_(std::move(mat)), qubits_(std::move(qubits)) {
  const int d = mat_.rows();
  if (mat_.cols() != d || (d != 2 && d != 4)) {
    throw std::invalid_argument("DensityMatrix: matrix must be 2x2 or 4x4");
  }
  if (static_cast<int>(qubits_.size()) != (d == 2 ? 1 : 2) ||
      (qubits_.size() == 2 && qubits_[0] == qubits_[1])) {
    throw std::invalid_argument("DensityMatrix: qubit labels must be distinct and match the dimension");
  }
  mat_.require_finite("DensityMatrix");
  if (max_abs_diff(mat_, mat_.adjoint()) > kTol.hermiticity) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  const cplx tr = mat_.trace();
  if (std::abs(tr - cplx{1.0, 0.0}) > kTol.trace_one) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by " +
                                std::to_string(std::abs(tr - cplx{1.0, 0.0})));
  }
  for (const cplx& ev : eigenvalues(mat_)) {
    if (ev.real() < -kTol.psd_dust) {
      throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                  std::to_string(ev.real()));
    }
  }
}

DensityMatrix reduced_density(const PureState3Q& s, Qubit keep) {
  const auto& a = s.amplitudes();
  const int shift = bit_shift(keep);
  CMatrix rho(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      cplx sum = 0.0;
      for (int env = 0; env < 8; ++env) {
        if ((env >> shift) & 1) continue;  // env runs over the complement bits
        sum += a[env | (r << shift)] * std::conj(a[env | (c << shift)]);
      }
      rho(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(rho), {keep});
}

DensityMatrix reduced_density(const PureState3Q& s, Qubit keep_hi, Qubit keep_lo) {
  if (keep_hi == keep_lo) {
    throw std::invalid_argument("reduced_density: the two kept qubits must differ");
  }
  const auto& a = s.amplitudes();
  const int hi = bit_shift(keep_hi);
  const int lo = bit_shift(keep_lo);
  const int env_shift = 3 - hi - lo;  // bit position of the traced-out qubit
  CMatrix rho(4, 4);
  for (int r = 0; r < 4; ++r) {
    const int ri = ((r >> 1) << hi) | ((r & 1) << lo);
    for (int c = 0; c < 4; ++c) {
      const int ci = ((c >> 1) << hi) | ((c & 1) << lo);
      cplx sum = 0.0;
      for (int e = 0; e < 2; ++e) {
        sum += a[ri | (e << env_shift)] * std::conj(a[ci | (e << env_shift)]);
      }
      rho(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(rho), {keep_hi, keep_lo});
}

namespace {

// Diagonal-pivoted Cholesky factorization rho ~= l * l^dag using the first
// `rank` columns of l; stops once the residual diagonal falls below tol.
// No permutation is materialized -- only the product matters here.
int psd_rank_factor(const CMatrix& rho, CMatrix& l, double tol) {
  const int n = rho.rows();
  l = CMatrix(n, n);
  std::array<double, 8> d{};
  std::array<bool, 8> used{};
  for (int i = 0; i < n; ++i) d[i] = rho(i, i).real();
  int rank = 0;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    double dmax = tol;
    for (int i = 0; i < n; ++i) {
      if (!used[i] && d[i] > dmax) {
        dmax = d[i];
        p = i;
      }
    }
    if (p < 0) break;
    used[p] = true;
    const double piv = std::sqrt(d[p]);
    l(p, k) = piv;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      cplx v = rho(i, p);
      for (int j = 0; j < k; ++j) v -= l(i, j) * std::conj(l(p, j));
      l(i, k) = v / piv;
      d[i] -= std::norm(l(i, k));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

double concurrence_pair(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence_pair: expected a two-qubit (4x4) density matrix");
  }
  const CMatrix& flip = spin_flip_2q();

  // Reductions of pure three-qubit states have rank <= 2, which makes two of
  // the four lambdas exactly zero. Resolving those zeros through the generic
  // eigensolver costs sqrt(eps) ~ 1e-8 per lambda (the square root amplifies
  // eigenvalue dust), which is too coarse for the monogamy identity. A rank
  // factorization rho = l l^dag instead confines the spectrum to the small
  // symmetric matrix s = l^T (sy x sy) l, whose invariants give the lambdas
  // at full precision: lambda1 * lambda2 = |det s|, lambda1^2 + lambda2^2 =
  // ||s||_F^2, hence C^2 = (lambda1 - lambda2)^2 = ||s||_F^2 - 2 |det s|.
  CMatrix l(4, 4);
  const int rank = psd_rank_factor(rho.mat(), l, 1e-14);
  if (rank == 1) {
    cplx s00 = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) s00 += l(a, 0) * flip(a, b) * l(b, 0);
    return clamp_measure(std::abs(s00), "concurrence_pair");
  }
  if (rank == 2) {
    cplx s[2][2] = {};
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) s[j][k] += l(a, j) * flip(a, b) * l(b, k);
    const double frob_sq = std::norm(s[0][0]) + std::norm(s[0][1]) + std::norm(s[1][0]) +
                           std::norm(s[1][1]);
    const double det_abs = std::abs(s[0][0] * s[1][1] - s[0][1] * s[1][0]);
    return clamp_measure(std::sqrt(std::max(0.0, frob_sq - 2.0 * det_abs)), "concurrence_pair");
  }

  const CMatrix rho_tilde = flip * rho.mat().conjugate() * flip;
  const CMatrix r = rho.mat() * rho_tilde;

  // The spectrum of rho * rho_tilde is provably real nonnegative; anything
  // beyond rounding dust means the solver or the caller is broken.
  std::array<double, 4> lambda{};
  int i = 0;
  for (const cplx& ev : eigenvalues(r)) {
    if (std::abs(ev.imag()) > kTol.measure_range) {
      throw ConsistencyFailure("concurrence_pair: complex eigenvalue of rho*rho_tilde, imag " +
                               std::to_string(ev.imag()));
    }
    double re = ev.real();
    if (re < 0.0) {
      if (re < -kTol.psd_dust) {
        throw ConsistencyFailure("concurrence_pair: negative eigenvalue of rho*rho_tilde: " +
                                 std::to_string(re));
      }
      re = 0.0;
    }
    lambda[i++] = std::sqrt(re);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return clamp_measure(std::max(0.0, c), "concurrence_pair");
}

double concurrence_sq_bipartition(const PureState3Q& s, Qubit cut) {
  const DensityMatrix rho = reduced_density(s, cut);
  const cplx det = determinant(rho.mat());
  return clamp_measure(4.0 * det.real(), "concurrence_sq_bipartition");
}

double three_tangle(const PureState3Q& s) {
  const auto& v = s.amplitudes();
  const auto a = [&](int i, int j, int k) { return v[4 * i + 2 * j + k]; };

  const cplx d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                  a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                  a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                  a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const cplx d2 = a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 1) +
                  a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                  a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                  a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                  a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) * a(0, 0, 1);
  const cplx d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                  a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);

  const double tau = 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
  return clamp_measure(tau, "three_tangle");
}

TangleDecomposition tangle_decomposition(const PureState3Q& s, Qubit cut) {
  Qubit others[2];
  int n = 0;
  for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
    if (q != cut) others[n++] = q;
  }

  TangleDecomposition d{};
  d.c2_bipartition = concurrence_sq_bipartition(s, cut);
  const double c_first = concurrence_pair(reduced_density(s, cut, others[0]));
  const double c_second = concurrence_pair(reduced_density(s, cut, others[1]));
  d.c2_pair_first = c_first * c_first;
  d.c2_pair_second = c_second * c_second;
  d.tau = three_tangle(s);
  d.residual = std::abs(d.c2_bipartition - d.c2_pair_first - d.c2_pair_second - d.tau);
  if (d.residual >= kTol.monogamy) {
    throw ConsistencyFailure("tangle_decomposition: monogamy residual " +
                             std::to_string(d.residual) + " exceeds tolerance");
  }
  return d;
}

}  // namespace qb3
