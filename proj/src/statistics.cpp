#include "qb3/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qb3/entanglement.hpp"

namespace qb3 {

std::string to_string(Ensemble e) {
  return e == Ensemble::symmetric ? "symmetric" : "general";
}

std::string to_string(Measure m) { return m == Measure::tau ? "tau" : "c2"; }

PdfEstimate::PdfEstimate(std::vector<double> bin_edges, std::vector<double> densities,
                         std::int64_t n_samples, PdfMetadata metadata)
    : bin_edges_(std::move(bin_edges)),
      densities_(std::move(densities)),
      n_samples_(n_samples),
      metadata_(std::move(metadata)) {
  if (bin_edges_.size() < 2 || densities_.size() != bin_edges_.size() - 1) {
    throw std::invalid_argument("PdfEstimate: need k+1 edges for k bins, k >= 1");
  }
  if (bin_edges_.front() != 0.0 || bin_edges_.back() != 1.0 ||
      !std::is_sorted(bin_edges_.begin(), bin_edges_.end())) {
    throw std::invalid_argument("PdfEstimate: edges must ascend from 0 to 1");
  }
  if (n_samples_ <= 0) {
    throw std::invalid_argument("PdfEstimate: sample count must be positive");
  }
  double integral = 0.0;
  for (std::size_t i = 0; i < densities_.size(); ++i) {
    if (!(densities_[i] >= 0.0)) {
      throw std::invalid_argument("PdfEstimate: densities must be nonnegative");
    }
    integral += densities_[i] * (bin_edges_[i + 1] - bin_edges_[i]);
  }
  if (std::abs(integral - 1.0) > kTol.pdf_integral) {
    throw std::invalid_argument("PdfEstimate: integral is " + std::to_string(integral) +
                                ", not 1");
  }
}

PdfEstimate estimate_pdf(const std::vector<double>& samples, int bins, PdfMetadata metadata) {
  if (samples.size() < 100) {
    throw std::invalid_argument("estimate_pdf: at least 100 samples required, got " +
                                std::to_string(samples.size()));
  }
  if (bins < 10) {
    throw std::invalid_argument("estimate_pdf: at least 10 bins required");
  }

  std::vector<std::int64_t> counts(bins, 0);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    double x = samples[i];
    if (!std::isfinite(x) || x < -kTol.measure_range || x > 1.0 + kTol.measure_range) {
      throw std::invalid_argument("estimate_pdf: sample " + std::to_string(i) +
                                  " out of [0, 1]: " + std::to_string(x));
    }
    x = std::clamp(x, 0.0, 1.0);
    const int bin = std::min(bins - 1, static_cast<int>(x * bins));
    ++counts[bin];
  }

  const double width = 1.0 / bins;
  std::vector<double> edges(bins + 1);
  for (int i = 0; i <= bins; ++i) edges[i] = static_cast<double>(i) / bins;
  edges[bins] = 1.0;

  std::vector<double> densities(bins);
  const double n = static_cast<double>(samples.size());
  for (int i = 0; i < bins; ++i) densities[i] = static_cast<double>(counts[i]) / (n * width);

  return PdfEstimate(std::move(edges), std::move(densities),
                     static_cast<std::int64_t>(samples.size()), std::move(metadata));
}

double mode_of(const PdfEstimate& pdf) {
  const auto& d = pdf.densities();
  std::size_t best = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i] > d[best]) best = i;  // strict: ties keep the lower bin
  }
  return 0.5 * (pdf.bin_edges()[best] + pdf.bin_edges()[best + 1]);
}

PdfEstimate run_campaign(Ensemble ensemble, double theta, std::int64_t n, Measure measure,
                         const RngStream& rng, int workers, int nodes, int bins) {
  if (n < 100) throw std::invalid_argument("run_campaign: at least 100 samples required");
  if (workers < 1) throw std::invalid_argument("run_campaign: worker count must be positive");

  const auto measure_fn = [measure](const PureState3Q& s) {
    return measure == Measure::tau ? three_tangle(s)
                                   : concurrence_sq_bipartition(s, Qubit::A);
  };
  const std::uint64_t seed = rng.seed();
  const std::uint64_t stream_base = rng.stream_id();

  std::vector<double> values(static_cast<std::size_t>(n));

  // One stream per sample index: the shard layout cannot influence any draw,
  // so any worker count yields byte-identical results.
  struct WorkerError {
    std::int64_t index;
    std::string message;
  };
  std::vector<WorkerError> errors;
  std::mutex error_mu;

  const auto run_range = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      try {
        RngStream stream(seed, stream_base + static_cast<std::uint64_t>(i));
        const EvolutionPair pair = ensemble == Ensemble::symmetric
                                       ? sample_pair_symmetric(theta, stream)
                                       : sample_pair_general(theta, stream);
        values[static_cast<std::size_t>(i)] = time_average(pair, measure_fn, nodes);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        errors.push_back({i, e.what()});
        return;
      }
    }
  };

  if (workers == 1) {
    run_range(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const std::int64_t begin = n * w / workers;
      const std::int64_t end = n * (w + 1) / workers;
      pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }

  if (!errors.empty()) {
    const auto worst = std::min_element(
        errors.begin(), errors.end(),
        [](const WorkerError& a, const WorkerError& b) { return a.index < b.index; });
    throw std::runtime_error("run_campaign: sample " + std::to_string(worst->index) +
                             " failed: " + worst->message);
  }

  PdfMetadata meta;
  meta.ensemble = to_string(ensemble);
  meta.measure = to_string(measure);
  meta.theta = theta;
  meta.seed = seed;
  meta.stream_base = stream_base;
  meta.nodes = nodes;
  return estimate_pdf(values, bins, std::move(meta));
}

}  // namespace qb3
