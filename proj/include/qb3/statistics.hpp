#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qb3/sampling.hpp"

namespace qb3 {

enum class Ensemble { symmetric, general };
enum class Measure { tau, c2 };

std::string to_string(Ensemble e);
std::string to_string(Measure m);

/// Provenance of a PdfEstimate produced by run_campaign; default-initialized
/// (empty tags) when a histogram is built directly from caller samples.
/// Deliberately excludes the worker count: shard layout must not leave a
/// trace in the result.
struct PdfMetadata {
  std::string ensemble;  // "symmetric" | "general" | ""
  std::string measure;   // "tau" | "c2" | ""
  double theta = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t stream_base = 0;
  int nodes = 0;

  friend bool operator==(const PdfMetadata&, const PdfMetadata&) = default;
};

/// Equal-width histogram density estimate on [0, 1], normalized to unit
/// integral (within tolerance, enforced at construction).
class PdfEstimate {
 public:
  /// Validates: edges ascending from 0 to 1, densities nonnegative with
  /// matching length, integral = 1 within tolerance, n_samples > 0.
  PdfEstimate(std::vector<double> bin_edges, std::vector<double> densities,
              std::int64_t n_samples, PdfMetadata metadata);

  const std::vector<double>& bin_edges() const { return bin_edges_; }
  const std::vector<double>& densities() const { return densities_; }
  std::int64_t n_samples() const { return n_samples_; }
  const PdfMetadata& metadata() const { return metadata_; }
  int bins() const { return static_cast<int>(densities_.size()); }

  friend bool operator==(const PdfEstimate&, const PdfEstimate&) = default;

 private:
  std::vector<double> bin_edges_;
  std::vector<double> densities_;
  std::int64_t n_samples_;
  PdfMetadata metadata_;
};

/// Histogram of samples (each in [0, 1] up to rounding dust) with `bins`
/// equal-width bins. Requires >= 100 samples and >= 10 bins. A sample equal
/// to 1 lands in the last bin.
PdfEstimate estimate_pdf(const std::vector<double>& samples, int bins,
                         PdfMetadata metadata = {});

/// Midpoint of the maximal-density bin; ties break toward the lower bin.
double mode_of(const PdfEstimate& pdf);

/// Monte Carlo campaign: draws n pairs from the ensemble at separation
/// theta, computes the time-averaged measure for each (measure c2 is the
/// bipartition concurrence squared for the cut at qubit A), and returns the
/// histogram. Sample i always uses stream rng.stream_id() + i of rng.seed(),
/// so the result is bit-identical for any worker count. Errors from any
/// sample propagate with the offending sample index.
PdfEstimate run_campaign(Ensemble ensemble, double theta, std::int64_t n, Measure measure,
                         const RngStream& rng, int workers, int nodes = 64, int bins = 50);

}  // namespace qb3
