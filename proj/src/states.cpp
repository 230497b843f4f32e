#include "qb3/states.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace qb3 {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

double norm_of(const std::array<cplx, 8>& a) {
  double s = 0.0;
  for (const cplx& z : a) s += std::norm(z);
  return std::sqrt(s);
}

void require_finite8(const std::array<cplx, 8>& a) {
  for (const cplx& z : a) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("PureState3Q: non-finite amplitude");
    }
  }
}

void require_unitary(const CMatrix& u, const char* where) {
  const CMatrix gram = u.adjoint() * u;
  const double dev = max_abs_diff(gram, CMatrix::identity(u.rows()));
  // Callers hand us freshly built unitaries; tolerate only rounding noise.
  if (dev > 1e3 * kTol.unitarity) {
    throw std::invalid_argument(std::string(where) + ": matrix is not unitary (deviation " +
                                std::to_string(dev) + ")");
  }
}

}  // namespace

PureState3Q::PureState3Q() : amp_{} { amp_[0] = 1.0; }

PureState3Q::PureState3Q(const std::array<cplx, 8>& amps) : amp_(amps) {
  require_finite8(amp_);
  const double n = norm_of(amp_);
  if (n <= kTol.near_zero_vector) {
    throw std::invalid_argument("PureState3Q: cannot normalize a near-zero vector");
  }
  for (cplx& z : amp_) z /= n;
}

PureState3Q::PureState3Q(const std::array<cplx, 8>& amps, AlreadyNormalized) : amp_(amps) {}

PureState3Q PureState3Q::basis(int i, int j, int k) {
  if (i < 0 || i > 1 || j < 0 || j > 1 || k < 0 || k > 1) {
    throw std::invalid_argument("basis: indices must be 0 or 1");
  }
  std::array<cplx, 8> a{};
  a[4 * i + 2 * j + k] = 1.0;
  return PureState3Q(a, AlreadyNormalized{});
}

PureState3Q PureState3Q::ghz() {
  std::array<cplx, 8> a{};
  a[0] = a[7] = 1.0 / kSqrt2;
  return PureState3Q(a, AlreadyNormalized{});
}

PureState3Q PureState3Q::w() {
  std::array<cplx, 8> a{};
  a[1] = a[2] = a[4] = 1.0 / kSqrt3;
  return PureState3Q(a, AlreadyNormalized{});
}

PureState3Q PureState3Q::w_tilde() {
  std::array<cplx, 8> a{};
  a[6] = a[5] = a[3] = 1.0 / kSqrt3;
  return PureState3Q(a, AlreadyNormalized{});
}

PureState3Q PureState3Q::permuted(const std::array<int, 3>& perm) const {
  bool seen[3] = {false, false, false};
  for (int p : perm) {
    if (p < 0 || p > 2 || seen[p]) throw std::invalid_argument("permuted: not a permutation");
    seen[p] = true;
  }
  std::array<cplx, 8> a{};
  for (int idx = 0; idx < 8; ++idx) {
    // Result entry q reads old qubit perm[q]: bit q of idx lands at bit
    // position perm[q] of the source index.
    const int bits[3] = {(idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
    int src = 0;
    for (int q = 0; q < 3; ++q) src |= bits[q] << (2 - perm[q]);
    a[idx] = amp_[src];
  }
  return PureState3Q(a, AlreadyNormalized{});
}

PureState3Q PureState3Q::with_global_phase(cplx unit_phase) const {
  std::array<cplx, 8> a = amp_;
  for (cplx& z : a) z *= unit_phase;
  return PureState3Q(a, AlreadyNormalized{});
}

SymmetricCoeffs::SymmetricCoeffs(const std::array<cplx, 4>& c) : c_(c) {
  double s = 0.0;
  for (const cplx& z : c_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("SymmetricCoeffs: non-finite coefficient");
    }
    s += std::norm(z);
  }
  s = std::sqrt(s);
  if (s <= kTol.near_zero_vector) {
    throw std::invalid_argument("SymmetricCoeffs: cannot normalize a near-zero vector");
  }
  for (cplx& z : c_) z /= s;
}

cplx inner_product(const PureState3Q& a, const PureState3Q& b) {
  cplx r = 0.0;
  for (int i = 0; i < 8; ++i) r += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return r;
}

cplx inner_product(const SymmetricCoeffs& a, const SymmetricCoeffs& b) {
  cplx r = 0.0;
  for (int i = 0; i < 4; ++i) r += std::conj(a.coeffs()[i]) * b.coeffs()[i];
  return r;
}

PureState3Q normalized(const std::array<cplx, 8>& raw) { return PureState3Q(raw); }

PureState3Q embed_symmetric(const SymmetricCoeffs& c) {
  const auto& v = c.coeffs();
  std::array<cplx, 8> a{};
  a[0] = v[0];
  a[1] = a[2] = a[4] = v[1] / kSqrt3;
  a[3] = a[5] = a[6] = v[2] / kSqrt3;
  a[7] = v[3];
  return PureState3Q(a);
}

PureState3Q apply_single_qubit(const PureState3Q& s, Qubit q, const CMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw std::invalid_argument("apply_single_qubit: unitary must be 2x2");
  }
  require_unitary(u, "apply_single_qubit");
  const int shift = 2 - static_cast<int>(q);  // bit position of the target qubit
  std::array<cplx, 8> a{};
  for (int idx = 0; idx < 8; ++idx) {
    const int bit = (idx >> shift) & 1;
    const int base = idx & ~(1 << shift);
    a[idx] = u(bit, 0) * s.amplitudes()[base] + u(bit, 1) * s.amplitudes()[base | (1 << shift)];
  }
  return PureState3Q(a);
}

PureState3Q apply_unitary(const PureState3Q& s, const CMatrix& u) {
  if (u.rows() != 8 || u.cols() != 8) {
    throw std::invalid_argument("apply_unitary: unitary must be 8x8");
  }
  require_unitary(u, "apply_unitary");
  std::array<cplx, 8> a{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a[i] += u(i, j) * s.amplitudes()[j];
  return PureState3Q(a);
}

std::string format_state_text(const PureState3Q& s) {
  std::string out;
  char buf[64];
  for (int i = 0; i < 8; ++i) {
    const cplx z = s.amplitudes()[i];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", z.real(), z.imag());
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

PureState3Q parse_state_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);

  if (tokens.size() == 1) {
    if (tokens[0] == "ghz") return PureState3Q::ghz();
    if (tokens[0] == "w") return PureState3Q::w();
    if (tokens[0] == "wtilde") return PureState3Q::w_tilde();
  }
  if (tokens.size() != 8) {
    throw std::invalid_argument("state text: expected 8 re,im pairs or a name (ghz|w|wtilde), got " +
                                std::to_string(tokens.size()) + " token(s)");
  }
  std::array<cplx, 8> a{};
  for (int i = 0; i < 8; ++i) {
    const std::string& t = tokens[i];
    const auto comma = t.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("state text: token " + std::to_string(i + 1) +
                                  " ('" + t + "') is not a re,im pair");
    }
    try {
      std::size_t used = 0;
      const double re = std::stod(t.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("trailing junk");
      const std::string imtxt = t.substr(comma + 1);
      const double im = std::stod(imtxt, &used);
      if (used != imtxt.size()) throw std::invalid_argument("trailing junk");
      a[i] = cplx{re, im};
    } catch (const std::exception&) {
      throw std::invalid_argument("state text: token " + std::to_string(i + 1) +
                                  " ('" + t + "') is not a re,im pair");
    }
  }
  return PureState3Q(a);  // normalizes; rejects zero vectors
}

}  // namespace qb3
