#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qb3/states.hpp"

namespace qb3 {

/// Gauss-Legendre abscissa/weight on [-1, 1].
struct QuadNode {
  double x;
  double w;
};

/// Nodes and weights of the n-point Gauss-Legendre rule, ascending in x.
/// Computed by Newton iteration on the Legendre recurrence and cached;
/// thread-safe. Throws std::invalid_argument for n < 1.
const std::vector<QuadNode>& gauss_legendre(int n);

/// A time-optimal (geodesic) evolution between two prescribed pure states
/// with separation angle theta in (0, pi]:
///   <initial|final> = cos(theta/2), real and nonnegative.
/// Identical (or phase-equivalent) endpoints are unrepresentable here;
/// classify_trivial handles them on raw state pairs.
class EvolutionPair {
 public:
  /// Validates that the overlap is already real nonnegative (imaginary part
  /// and any negative real part below tolerance) and not within rounding of
  /// a parallel pair. Throws std::invalid_argument otherwise.
  EvolutionPair(const PureState3Q& initial, const PureState3Q& final_state);

  /// Rotates the global phase of `final_state` so the overlap becomes real
  /// nonnegative, then validates. Throws std::invalid_argument when the
  /// states coincide up to phase (no geodesic exists).
  static EvolutionPair from_states(const PureState3Q& initial, const PureState3Q& final_state);

  const PureState3Q& initial_state() const { return initial_; }
  const PureState3Q& final_state() const { return final_; }
  double theta() const { return theta_; }

 private:
  PureState3Q initial_;
  PureState3Q final_;
  double theta_;
};

/// Evolution parameters in natural units (hbar = 1): energy bound omega and
/// the quadrature panel order used for time averages.
struct EvolutionParams {
  double omega = 1.0;
  int nodes = 64;
};

/// State along the geodesic at arc parameter xi in [0, theta/2]:
///   [cos(xi) - cot(theta/2) sin(xi)] |I> + [sin(xi)/sin(theta/2)] |F>.
/// xi = omega * t in natural units. Throws when xi is out of range.
PureState3Q geodesic_state(const EvolutionPair& pair, double xi);

/// Duration T = theta / (2 omega). Throws for omega <= 0.
double duration(const EvolutionPair& pair, const EvolutionParams& params);

/// Time average (2/theta) * integral of measure(geodesic_state(xi)) over
/// xi in [0, theta/2]. Uses adaptive composite Gauss-Legendre quadrature
/// with panels of the given order; `nodes` < 16 is rejected. The measure
/// must map normalized states into [0, 1].
double time_average(const EvolutionPair& pair,
                    const std::function<double(const PureState3Q&)>& measure, int nodes);

/// Closed-form three-tangle along the geodesic of the family
/// W-tilde -> cos(a) GHZ + sin(a) W, as an independent check of the generic
/// amplitude pipeline:
///   tau(xi, a) = 4 | 1/4 sin^4(xi) cos^4(a) - 1/3 sin^2(xi) cos^2(xi) sin^2(a)
///                  - sin^3(xi) cos(xi) sin(a) cos^2(a)
///                  + 4/(3 sqrt 6) sin(xi) cos^3(xi) cos(a)
///                  + 4/(3 sqrt 6) sin^4(xi) sin^3(a) cos(a) |.
/// Both arguments restricted to [0, pi/2].
double case1_tangle_closed_form(double xi, double alpha);

/// The orthogonal pair W-tilde -> cos(alpha) GHZ + sin(alpha) W.
EvolutionPair case1_pair(double alpha);

/// The orthogonal pair (|000> - i|111>)/sqrt(2) -> (i|000> - |111>)/sqrt(2).
EvolutionPair case2_pair();

struct AlphaPoint {
  double alpha;
  double avg_tangle;
};

/// Time-averaged three-tangle of the case1_pair family at each alpha
/// (all in [0, pi/2]); verifies orthogonality of every constructed pair.
std::vector<AlphaPoint> alpha_scan(const std::vector<double>& alphas, int nodes);

/// Orthogonal GHZ-class pair
///   (e^{i phi_a}|klm> - e^{i phi_b}|k'l'm'>)/sqrt(2)
///     -> i (e^{i phi_a}|klm> + e^{i phi_b}|k'l'm'>)/sqrt(2)
/// with k' = 1-k etc.; tau = 1 and all pairwise concurrences vanish along
/// its whole geodesic.
EvolutionPair ghz_phase_family(double phi_a, double phi_b, const std::array<int, 3>& klm);

enum class TrivialKind { identical, spectator, genuine };

struct Classification {
  TrivialKind kind;
  std::optional<Qubit> spectator_qubit;  // set iff kind == spectator
};

/// Detects the two trivial evolution classes: `identical` when
/// |<a|b>| > 1 - 1e-10, `spectator(q)` when both states factor over qubit q
/// with the same single-qubit factor (rank-1 reduced density matrices and
/// factor fidelity > 1 - 1e-10; lowest qualifying label reported),
/// otherwise `genuine`.
Classification classify_trivial(const PureState3Q& a, const PureState3Q& b);
Classification classify_trivial(const EvolutionPair& pair);

/// "identical", "spectator(A)" etc., or "genuine"; used by the CLI.
std::string to_string(const Classification& c);

}  // namespace qb3
