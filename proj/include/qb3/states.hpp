#pragma once

#include <array>
#include <string>

#include "qb3/numerics.hpp"

namespace qb3 {

/// Qubit labels. A is the most significant bit of the amplitude index:
/// amp[4i + 2j + k] = a_ijk for basis ket |ijk>_ABC, |000>, |001>, ..., |111>.
enum class Qubit : int { A = 0, B = 1, C = 2 };

/// Normalized three-qubit pure state. Immutable; every constructor
/// normalizes, so instances always carry unit norm.
class PureState3Q {
 public:
  /// |000>
  PureState3Q();

  /// Normalizes the given amplitudes. Throws std::invalid_argument if the
  /// norm is below kTol.near_zero_vector or any amplitude is non-finite.
  explicit PureState3Q(const std::array<cplx, 8>& amps);

  static PureState3Q basis(int i, int j, int k);
  static PureState3Q ghz();      // (|000> + |111>)/sqrt(2)
  static PureState3Q w();        // (|001> + |010> + |100>)/sqrt(3)
  static PureState3Q w_tilde();  // (|110> + |101> + |011>)/sqrt(3)

  const std::array<cplx, 8>& amplitudes() const { return amp_; }
  cplx amp(int i, int j, int k) const { return amp_[4 * i + 2 * j + k]; }

  /// Relabels qubits: perm[new position] = old position; entry q of the
  /// result's index tuple is taken from old qubit perm[q].
  PureState3Q permuted(const std::array<int, 3>& perm) const;

  /// Multiplies every amplitude by the given unit-modulus factor.
  PureState3Q with_global_phase(cplx unit_phase) const;

 private:
  struct AlreadyNormalized {};
  PureState3Q(const std::array<cplx, 8>& amps, AlreadyNormalized);

  std::array<cplx, 8> amp_;

  friend PureState3Q apply_single_qubit(const PureState3Q&, Qubit, const CMatrix&);
  friend PureState3Q apply_unitary(const PureState3Q&, const CMatrix&);
};

/// Coefficients over the permutation-symmetric basis
/// {|000>, sym(001)/sqrt(3), sym(110)/sqrt(3), |111>}. Normalized on
/// construction like PureState3Q.
class SymmetricCoeffs {
 public:
  explicit SymmetricCoeffs(const std::array<cplx, 4>& c);
  const std::array<cplx, 4>& coeffs() const { return c_; }

 private:
  std::array<cplx, 4> c_;
};

/// <a|b>, conjugate-linear in the first argument.
cplx inner_product(const PureState3Q& a, const PureState3Q& b);
cplx inner_product(const SymmetricCoeffs& a, const SymmetricCoeffs& b);

/// Normalizes a raw amplitude vector into a state. Same contract as the
/// PureState3Q constructor; exposed as the normalize operation.
PureState3Q normalized(const std::array<cplx, 8>& raw);

/// Isometric embedding of the symmetric 4-dim representation into the full
/// 8-dim amplitude array.
PureState3Q embed_symmetric(const SymmetricCoeffs& c);

/// Applies a 2x2 unitary to one qubit / an 8x8 unitary to the whole state.
/// The result is renormalized only by the rounding-dust factor; inputs are
/// expected unitary within kTol.unitarity.
PureState3Q apply_single_qubit(const PureState3Q& s, Qubit q, const CMatrix& u);
PureState3Q apply_unitary(const PureState3Q& s, const CMatrix& u);

/// Text form: 8 whitespace-separated "re,im" pairs in the fixed amplitude
/// order. parse_state_text also accepts the names ghz, w, wtilde.
/// Parse errors carry the offending token index in the message.
std::string format_state_text(const PureState3Q& s);
PureState3Q parse_state_text(const std::string& text);

}  // namespace qb3
