#include "qb3/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qb3/entanglement.hpp"

namespace qb3 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kArgSlack = 1e-12;       // tolerance for range checks on angles
constexpr double kQuadTol = 1e-10;        // target absolute error of a time average
constexpr int kMaxSplitDepth = 30;

std::vector<QuadNode> compute_gauss_legendre(int n) {
  std::vector<QuadNode> out(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Standard asymptotic guess for the i-th largest root of P_n.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    out[i] = {-z, w};
    out[n - 1 - i] = {z, w};
  }
  return out;
}

// Order-n Gauss-Legendre estimate of f over [a, b].
double gl_panel(const std::function<double(double)>& f, double a, double b,
                const std::vector<QuadNode>& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (const QuadNode& q : rule) sum += q.w * f(mid + half * q.x);
  return half * sum;
}

// Adaptive bisection on top of fixed-order panels: accept a panel when the
// whole-interval estimate agrees with the sum of its halves. The |.| in the
// three-tangle puts kinks in otherwise smooth integrands, and a single
// fixed-order rule loses several digits across a kink.
double adaptive_panel(const std::function<double(double)>& f, double a, double b, double whole,
                      double tol, int depth, const std::vector<QuadNode>& rule) {
  const double mid = 0.5 * (a + b);
  const double left = gl_panel(f, a, mid, rule);
  const double right = gl_panel(f, mid, b, rule);
  if (std::abs(whole - left - right) < tol || depth >= kMaxSplitDepth) {
    return left + right;
  }
  return adaptive_panel(f, a, mid, left, 0.5 * tol, depth + 1, rule) +
         adaptive_panel(f, mid, b, right, 0.5 * tol, depth + 1, rule);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tol,
                          const std::vector<QuadNode>& rule) {
  return adaptive_panel(f, a, b, gl_panel(f, a, b, rule), tol, 0, rule);
}

double overlap_angle(const cplx& overlap, const char* where) {
  if (std::abs(overlap.imag()) > kTol.overlap || overlap.real() < -kTol.overlap) {
    throw std::invalid_argument(std::string(where) +
                                ": overlap must be real nonnegative, got (" +
                                std::to_string(overlap.real()) + ", " +
                                std::to_string(overlap.imag()) + ")");
  }
  const double c = std::clamp(overlap.real(), 0.0, 1.0);
  if (c > 1.0 - kTol.pair_min_angle) {
    throw std::invalid_argument(std::string(where) +
                                ": states coincide up to phase; no geodesic exists");
  }
  return 2.0 * std::acos(c);
}

}  // namespace

const std::vector<QuadNode>& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: node count must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<QuadNode>> cache;  // node references stay stable
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

EvolutionPair::EvolutionPair(const PureState3Q& initial, const PureState3Q& final_state)
    : initial_(initial),
      final_(final_state),
      theta_(overlap_angle(inner_product(initial, final_state), "EvolutionPair")) {}

EvolutionPair EvolutionPair::from_states(const PureState3Q& initial,
                                         const PureState3Q& final_state) {
  const cplx overlap = inner_product(initial, final_state);
  if (std::abs(overlap) > kTol.overlap) {
    return EvolutionPair(initial, final_state.with_global_phase(std::conj(overlap) /
                                                                std::abs(overlap)));
  }
  return EvolutionPair(initial, final_state);
}

PureState3Q geodesic_state(const EvolutionPair& pair, double xi) {
  const double half_theta = 0.5 * pair.theta();
  if (xi < -kArgSlack || xi > half_theta + kArgSlack) {
    throw std::invalid_argument("geodesic_state: xi must lie in [0, theta/2]");
  }
  xi = std::clamp(xi, 0.0, half_theta);

  const double sin_ht = std::sin(half_theta);
  const double ci = std::cos(xi) - std::cos(half_theta) / sin_ht * std::sin(xi);
  const double cf = std::sin(xi) / sin_ht;

  std::array<cplx, 8> raw{};
  double norm_sq = 0.0;
  for (int i = 0; i < 8; ++i) {
    raw[i] = ci * pair.initial_state().amplitudes()[i] + cf * pair.final_state().amplitudes()[i];
    norm_sq += std::norm(raw[i]);
  }
  if (std::abs(std::sqrt(norm_sq) - 1.0) > kTol.state_norm) {
    throw ConsistencyFailure("geodesic_state: norm drifted to " +
                             std::to_string(std::sqrt(norm_sq)));
  }
  return PureState3Q(raw);  // strips rounding dust
}

double duration(const EvolutionPair& pair, const EvolutionParams& params) {
  if (!(params.omega > 0.0)) {
    throw std::invalid_argument("duration: omega must be positive");
  }
  return pair.theta() / (2.0 * params.omega);
}

double time_average(const EvolutionPair& pair,
                    const std::function<double(const PureState3Q&)>& measure, int nodes) {
  if (nodes < 16) {
    throw std::invalid_argument("time_average: at least 16 quadrature nodes required");
  }
  const std::vector<QuadNode>& rule = gauss_legendre(nodes);
  const double half_theta = 0.5 * pair.theta();
  const auto f = [&](double xi) { return measure(geodesic_state(pair, xi)); };
  // Tolerance scaled by the interval so the averaged error is ~kQuadTol
  // uniformly in theta.
  const double integral = integrate_adaptive(f, 0.0, half_theta, kQuadTol * half_theta, rule);
  const double avg = integral / half_theta;
  if (!std::isfinite(avg) || avg < -kTol.measure_range || avg > 1.0 + kTol.measure_range) {
    throw ConsistencyFailure("time_average: result out of range: " + std::to_string(avg));
  }
  return std::clamp(avg, 0.0, 1.0);
}

double case1_tangle_closed_form(double xi, double alpha) {
  if (xi < -kArgSlack || xi > 0.5 * kPi + kArgSlack || alpha < -kArgSlack ||
      alpha > 0.5 * kPi + kArgSlack) {
    throw std::invalid_argument("case1_tangle_closed_form: arguments must lie in [0, pi/2]");
  }
  const double s = std::sin(xi), c = std::cos(xi);
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  const double k = 4.0 / (3.0 * std::sqrt(6.0));
  const double inner = 0.25 * s * s * s * s * ca * ca * ca * ca -
                       (1.0 / 3.0) * s * s * c * c * sa * sa -
                       s * s * s * c * sa * ca * ca +
                       k * s * c * c * c * ca +
                       k * s * s * s * s * sa * sa * sa * ca;
  return 4.0 * std::abs(inner);
}

EvolutionPair case1_pair(double alpha) {
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const PureState3Q initial = PureState3Q::w_tilde();
  // cos(a) GHZ + sin(a) W in the symmetric basis.
  const PureState3Q fin = embed_symmetric(
      SymmetricCoeffs({cplx{ca / std::sqrt(2.0)}, cplx{sa}, cplx{0.0}, cplx{ca / std::sqrt(2.0)}}));
  return EvolutionPair(initial, fin);
}

EvolutionPair case2_pair() {
  const double r = 1.0 / std::sqrt(2.0);
  std::array<cplx, 8> ai{}, af{};
  ai[0] = r;
  ai[7] = cplx{0.0, -r};
  af[0] = cplx{0.0, r};
  af[7] = -r;
  return EvolutionPair(PureState3Q(ai), PureState3Q(af));
}

std::vector<AlphaPoint> alpha_scan(const std::vector<double>& alphas, int nodes) {
  std::vector<AlphaPoint> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    if (alpha < -kArgSlack || alpha > 0.5 * kPi + kArgSlack) {
      throw std::invalid_argument("alpha_scan: alpha must lie in [0, pi/2]");
    }
    const EvolutionPair pair = case1_pair(alpha);
    if (std::abs(inner_product(pair.initial_state(), pair.final_state())) > kTol.overlap) {
      throw ConsistencyFailure("alpha_scan: constructed pair is not orthogonal");
    }
    out.push_back({alpha, time_average(
                              pair, [](const PureState3Q& s) { return three_tangle(s); }, nodes)});
  }
  return out;
}

EvolutionPair ghz_phase_family(double phi_a, double phi_b, const std::array<int, 3>& klm) {
  for (int b : klm) {
    if (b != 0 && b != 1) throw std::invalid_argument("ghz_phase_family: klm entries must be bits");
  }
  const int idx = 4 * klm[0] + 2 * klm[1] + klm[2];
  const int idx_bar = 7 - idx;
  const double r = 1.0 / std::sqrt(2.0);
  const cplx ea = std::polar(r, phi_a);
  const cplx eb = std::polar(r, phi_b);
  const cplx i_unit{0.0, 1.0};

  std::array<cplx, 8> ai{}, af{};
  ai[idx] = ea;
  ai[idx_bar] = -eb;
  af[idx] = i_unit * ea;
  af[idx_bar] = i_unit * eb;
  return EvolutionPair(PureState3Q(ai), PureState3Q(af));
}

namespace {

// The reduced matrix of a product state is a projector; its determinant
// vanishes. Extracts the factor from the strongest column of the projector.
bool single_qubit_factor(const PureState3Q& s, Qubit q, std::array<cplx, 2>& factor) {
  const DensityMatrix rho = reduced_density(s, q);
  if (std::abs(determinant(rho.mat())) > kTol.identical_overlap) return false;
  const int j = std::abs(rho.mat()(0, 0)) >= std::abs(rho.mat()(1, 1)) ? 0 : 1;
  const double scale = std::sqrt(rho.mat()(j, j).real());
  factor = {rho.mat()(0, j) / scale, rho.mat()(1, j) / scale};
  return true;
}

}  // namespace

Classification classify_trivial(const PureState3Q& a, const PureState3Q& b) {
  if (std::abs(inner_product(a, b)) > 1.0 - kTol.identical_overlap) {
    return {TrivialKind::identical, std::nullopt};
  }
  for (Qubit q : {Qubit::A, Qubit::B, Qubit::C}) {
    std::array<cplx, 2> fa{}, fb{};
    if (!single_qubit_factor(a, q, fa) || !single_qubit_factor(b, q, fb)) continue;
    const cplx ov = std::conj(fa[0]) * fb[0] + std::conj(fa[1]) * fb[1];
    if (std::norm(ov) > 1.0 - kTol.identical_overlap) {
      return {TrivialKind::spectator, q};
    }
  }
  return {TrivialKind::genuine, std::nullopt};
}

Classification classify_trivial(const EvolutionPair& pair) {
  return classify_trivial(pair.initial_state(), pair.final_state());
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case TrivialKind::identical:
      return "identical";
    case TrivialKind::spectator: {
      static const char* names[] = {"A", "B", "C"};
      return std::string("spectator(") + names[static_cast<int>(*c.spectator_qubit)] + ")";
    }
    case TrivialKind::genuine:
      return "genuine";
  }
  return "genuine";  // unreachable
}

}  // namespace qb3
