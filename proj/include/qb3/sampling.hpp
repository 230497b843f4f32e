#pragma once

#include <cstdint>
#include <random>

#include "qb3/evolution.hpp"
#include "qb3/numerics.hpp"

namespace qb3 {

/// Deterministic random stream: equal (seed, stream_id) reproduce identical
/// sample sequences bit-exactly, independent of platform and of how samples
/// are distributed over workers. Gaussians come from an in-house Box-Muller
/// so the guarantee does not rest on std::normal_distribution, whose output
/// the standard leaves implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();

  /// Standard normal.
  double gaussian();

  /// Standard complex normal, E|z|^2 = 1: (g1 + i g2)/sqrt(2).
  cplx complex_gaussian();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 gen_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Haar-distributed dim x dim unitary (dim 4 or 8): complex Ginibre sample
/// followed by QR with the positive-real-diagonal phase convention.
CMatrix haar_unitary(int dim, RngStream& rng);

/// Random symmetric-state pair with overlap cos(theta/2): one Haar 4x4
/// unitary M applied to (1,0,0,0) and (cos theta/2, sin theta/2, 0, 0) in
/// the symmetric basis, both embedded into the full space. theta in (0, pi].
EvolutionPair sample_pair_symmetric(double theta, RngStream& rng);

/// Random general-state pair with overlap cos(theta/2): one Haar 8x8 unitary
/// applied to the analogous full-basis fiducial vectors. theta in (0, pi].
EvolutionPair sample_pair_general(double theta, RngStream& rng);

}  // namespace qb3
