#include "qb3/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qb3 {

namespace {

constexpr double kPi = std::numbers::pi;

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  // seed_seq consumes 32-bit words; feed it both halves of both ids so
  // distinct (seed, stream) combinations never collide.
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id),
                    static_cast<std::uint32_t>(stream_id >> 32)};
  return std::mt19937_64(seq);
}

void require_theta(double theta, const char* where) {
  if (!(theta > 0.0) || theta > kPi + 1e-12) {
    throw std::invalid_argument(std::string(where) + ": theta must lie in (0, pi]");
  }
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), gen_(make_engine(seed, stream_id)) {}

double RngStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * kPi * u2;
  cached_ = r * std::sin(phi);
  have_cached_ = true;
  return r * std::cos(phi);
}

cplx RngStream::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return cplx{re, im} / std::sqrt(2.0);
}

CMatrix haar_unitary(int dim, RngStream& rng) {
  if (dim != 4 && dim != 8) {
    throw std::invalid_argument("haar_unitary: dimension must be 4 or 8");
  }
  CMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
  return qr_decompose(g).q;
}

EvolutionPair sample_pair_symmetric(double theta, RngStream& rng) {
  require_theta(theta, "sample_pair_symmetric");
  const CMatrix m = haar_unitary(4, rng);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  std::array<cplx, 4> ci{}, cf{};
  for (int k = 0; k < 4; ++k) {
    ci[k] = m(k, 0);
    cf[k] = c * m(k, 0) + s * m(k, 1);
  }
  return EvolutionPair(embed_symmetric(SymmetricCoeffs(ci)),
                       embed_symmetric(SymmetricCoeffs(cf)));
}

EvolutionPair sample_pair_general(double theta, RngStream& rng) {
  require_theta(theta, "sample_pair_general");
  const CMatrix m = haar_unitary(8, rng);
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  std::array<cplx, 8> ai{}, af{};
  for (int k = 0; k < 8; ++k) {
    ai[k] = m(k, 0);
    af[k] = c * m(k, 0) + s * m(k, 1);
  }
  return EvolutionPair(PureState3Q(ai), PureState3Q(af));
}

}  // namespace qb3
