#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "qb3/numerics.hpp"
#include "qb3/sampling.hpp"
#include "qb3/states.hpp"

namespace qb3::test {

// Unit-test stream ids; kept clear of the bases the verification suites use
// (those start at 1 << 20).
inline constexpr std::uint64_t kStream = 9000;

inline CMatrix ginibre(std::size_t n, RngStream& rng) {
  CMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.complex_gaussian();
  return m;
}

inline CMatrix random_unitary(std::size_t n, RngStream& rng) {
  return qr_decompose(ginibre(n, rng)).q;
}

// Haar-uniform on the unit sphere in C^8: normalized Gaussian vector.
inline PureState3Q random_state(RngStream& rng) {
  std::array<cplx, 8> a;
  for (auto& v : a) v = rng.complex_gaussian();
  return PureState3Q(a);
}

inline double max_amp_diff(const PureState3Q& a, const PureState3Q& b) {
  double d = 0.0;
  for (int i = 0; i < 8; ++i) d = std::max(d, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  return d;
}

// Determinant by recursive cofactor expansion: deliberately naive and
// independent of the elimination-based library routine.
inline cplx det_cofactor(const CMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  cplx sum = 0.0;
  double sign = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    CMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t mc = 0;
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor(r - 1, mc++) = m(r, cc);
      }
    }
    sum += sign * m(0, c) * det_cofactor(minor);
    sign = -sign;
  }
  return sum;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] <= b[ib]) {
      ++ia;
    } else {
      ++ib;
    }
    d = std::max(d, std::abs(static_cast<double>(ia) / a.size() -
                             static_cast<double>(ib) / b.size()));
  }
  return d;
}

// First column of a Haar dim-4 unitary has |c1|^2 ~ Beta(1, 3).
inline double beta13_cdf(double x) {
  const double u = std::clamp(x, 0.0, 1.0);
  return 1.0 - (1.0 - u) * (1.0 - u) * (1.0 - u);
}

// Large-n critical value of the one-sample KS statistic at the 1% level.
inline double ks_critical_1pct(std::size_t n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

// Two-sample version for equal sample sizes n: scale by sqrt(2/n).
inline double ks_two_sample_critical_1pct(std::size_t n) {
  return 1.628 * std::sqrt(2.0 / static_cast<double>(n));
}

}  // namespace qb3::test
