#pragma once

#include <stdexcept>
#include <vector>

#include "qb3/states.hpp"

namespace qb3 {

/// Thrown when two independently computed quantities disagree beyond
/// tolerance (e.g. the monogamy identity fails). This signals a numerics
/// defect in the library, not bad user input.
class ConsistencyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced density matrix of 1 or 2 qubits, validated on construction:
/// Hermitian, unit trace, eigenvalues nonnegative up to rounding dust.
class DensityMatrix {
 public:
  /// Validates all invariants; throws std::invalid_argument on violation.
  /// `qubits` records which subsystems the matrix describes, in index order
  /// (first label = most significant bit of the row index).
  DensityMatrix(CMatrix mat, std::vector<Qubit> qubits);

  const CMatrix& mat() const { return mat_; }
  const std::vector<Qubit>& qubits() const { return qubits_; }
  int dim() const { return mat_.rows(); }

 private:
  CMatrix mat_;
  std::vector<Qubit> qubits_;
};

/// Squared concurrences of one cut plus the three-tangle, all computed
/// independently. The fields satisfy the monogamy identity
///   c2_bipartition = c2_pair_first + c2_pair_second + tau
/// within the reported residual; tangle_decomposition rejects results whose
/// residual exceeds tolerance.
struct TangleDecomposition {
  double c2_bipartition;   // C² of cut qubit vs the other two
  double c2_pair_first;    // C² of cut with the lower-labeled other qubit
  double c2_pair_second;   // C² of cut with the higher-labeled other qubit
  double tau;              // three-tangle
  double residual;         // |c2_bipartition - c2_pair_first - c2_pair_second - tau|
};

/// Partial trace keeping one qubit (2x2 result).
DensityMatrix reduced_density(const PureState3Q& s, Qubit keep);

/// Partial trace keeping two distinct qubits (4x4 result); keep_hi labels the
/// most significant bit of the result index. Throws if the labels coincide.
DensityMatrix reduced_density(const PureState3Q& s, Qubit keep_hi, Qubit keep_lo);

/// Wootters concurrence of a two-qubit density matrix:
/// C = max{0, l1 - l2 - l3 - l4} with l_i the decreasing square roots of the
/// eigenvalues of rho * (sy(x)sy) * conj(rho) * (sy(x)sy).
double concurrence_pair(const DensityMatrix& rho);

/// Squared concurrence of the cut qubit against the remaining pair,
/// C² = 4 det(rho_cut), exact for a pure global state.
double concurrence_sq_bipartition(const PureState3Q& s, Qubit cut);

/// Three-tangle tau = 4|d1 - 2 d2 + 4 d3| over the amplitudes a_ijk:
///   d1 = a000²a111² + a001²a110² + a010²a101² + a100²a011²
///   d2 = a000 a111 a100 a011 + a000 a111 a101 a010 + a000 a111 a110 a001
///      + a011 a100 a101 a010 + a011 a100 a110 a001 + a010 a101 a110 a001
///   d3 = a000 a110 a101 a011 + a111 a001 a010 a100
double three_tangle(const PureState3Q& s);

/// All four measures of one cut, each by its own route, with the monogamy
/// residual checked against tolerance.
TangleDecomposition tangle_decomposition(const PureState3Q& s, Qubit cut);

}  // namespace qb3
