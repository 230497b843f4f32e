#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qb3/entanglement.hpp"
#include "qb3/evolution.hpp"
#include "qb3/io.hpp"
#include "qb3/sampling.hpp"
#include "qb3/statistics.hpp"
#include "qb3/verify.hpp"
#include "qb3/version.hpp"

namespace {

using namespace qb3;

constexpr double kPi = std::numbers::pi;
constexpr int kGridPoints = 101;  // alpha / xi grids

struct Config {
  std::vector<double> theta_half;  // multiples of pi; empty = defaults below
  std::string ensemble = "symmetric";
  std::int64_t samples = 100000;
  int bins = 50;
  int nodes = 64;
  std::uint64_t seed = 1;
  std::uint64_t stream_base = 0;
  int workers = 1;
  std::string out;
  std::string format = "csv";
  std::string initial_text;
  std::string final_text;
};

const std::vector<double> kDefaultThetaHalf = {0.125, 0.25, 0.375, 0.5};

void add_common_options(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--stream-base", cfg.stream_base, "first RNG stream id")
      ->capture_default_str();
  cmd->add_option("--samples", cfg.samples, "Monte Carlo sample count")->capture_default_str();
  cmd->add_option("--bins", cfg.bins, "histogram bin count")->capture_default_str();
  cmd->add_option("--nodes", cfg.nodes, "quadrature panel order")->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "worker thread count")->capture_default_str();
  cmd->add_option("--format", cfg.format, "output format: csv | json")->capture_default_str();
}

// Deliberately omits the worker count: identical configs must produce
// byte-identical files no matter how the work was sharded.
TableMetadata base_metadata(const std::string& command) {
  TableMetadata m;
  m.add("command", command);
  m.add("version", kVersion);
  m.add("rng", kRngAlgorithm);
  return m;
}

// Echoes the reproduction parameters that pdf_table would otherwise supply
// from a campaign's own metadata.
void add_run_fields(TableMetadata& m, const Config& cfg) {
  m.add("seed", cfg.seed);
  m.add("stream-base", cfg.stream_base);
  m.add("samples", cfg.samples);
  m.add("bins", cfg.bins);
  m.add("nodes", cfg.nodes);
}

std::string format_multiple(double h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", h);
  return buf;
}

std::vector<double> theta_half_list(const Config& cfg) {
  const std::vector<double>& hs = cfg.theta_half.empty() ? kDefaultThetaHalf : cfg.theta_half;
  for (double h : hs) {
    if (!(h > 0.0) || h > 0.5 + 1e-12) {
      throw std::invalid_argument("--theta-half values must lie in (0, 0.5] (multiples of pi)");
    }
  }
  return hs;
}

int cmd_scan_alpha(const Config& cfg) {
  std::vector<double> alphas(kGridPoints);
  for (int i = 0; i < kGridPoints; ++i) alphas[i] = 0.5 * kPi * i / (kGridPoints - 1);

  Table t;
  t.metadata = base_metadata("scan-alpha");
  add_run_fields(t.metadata, cfg);
  t.metadata.add("grid", kGridPoints);
  t.columns = {"alpha", "avg_tangle"};
  for (const AlphaPoint& p : alpha_scan(alphas, cfg.nodes)) {
    t.rows.push_back({p.alpha, p.avg_tangle});
  }
  write_table(cfg.out, parse_format(cfg.format), t);
  return 0;
}

int cmd_pdf(const Config& cfg) {
  const Ensemble ensemble = [&] {
    if (cfg.ensemble == "symmetric") return Ensemble::symmetric;
    if (cfg.ensemble == "general") return Ensemble::general;
    throw std::invalid_argument("--ensemble must be 'symmetric' or 'general'");
  }();
  const OutputFormat format = parse_format(cfg.format);

  // All series share the same stream ids, so every (theta, measure) series
  // is computed over the same underlying unitary draws -- both measures of
  // one pair come from the same evolution, as in the source figures.
  for (double h : theta_half_list(cfg)) {
    const double theta = 2.0 * h * kPi;
    for (Measure measure : {Measure::tau, Measure::c2}) {
      const PdfEstimate pdf =
          run_campaign(ensemble, theta, cfg.samples, measure, RngStream(cfg.seed, cfg.stream_base),
                       cfg.workers, cfg.nodes, cfg.bins);
      TableMetadata base = base_metadata("pdf");
      base.add("theta-half", format_multiple(h) + " pi");
      const std::string path = cfg.out + "_" + to_string(ensemble) + "_" + to_string(measure) +
                               "_th" + format_multiple(h) + extension(format);
      write_table(path, format, pdf_table(pdf, std::move(base)));
      std::cout << path << "\n";
    }
  }
  return 0;
}

int cmd_evolve(const Config& cfg) {
  const PureState3Q initial = parse_state_text(cfg.initial_text);
  const PureState3Q fin = parse_state_text(cfg.final_text);
  const OutputFormat format = parse_format(cfg.format);

  const Classification verdict = classify_trivial(initial, fin);

  Table t;
  t.metadata = base_metadata("evolve");
  add_run_fields(t.metadata, cfg);
  t.metadata.add("verdict", to_string(verdict));
  t.columns = {"xi", "tau", "c2_bipartition", "c2_ab", "c2_ac", "c2_bc", "residual"};

  if (verdict.kind == TrivialKind::identical) {
    t.metadata.add("theta", 0.0);
    t.metadata.add("duration", 0.0);
    write_table(cfg.out, format, t);
    std::cout << "verdict: identical (no evolution)\n";
    return 0;
  }

  const EvolutionPair pair = EvolutionPair::from_states(initial, fin);
  t.metadata.add("theta", pair.theta());
  t.metadata.add("duration", duration(pair, EvolutionParams{1.0, cfg.nodes}));
  t.metadata.add("grid", kGridPoints);

  for (int g = 0; g < kGridPoints; ++g) {
    const double xi = 0.5 * pair.theta() * g / (kGridPoints - 1);
    const PureState3Q s = geodesic_state(pair, xi);
    const TangleDecomposition d = tangle_decomposition(s, Qubit::A);
    const double c_bc = concurrence_pair(reduced_density(s, Qubit::B, Qubit::C));
    t.rows.push_back(
        {xi, d.tau, d.c2_bipartition, d.c2_pair_first, d.c2_pair_second, c_bc * c_bc, d.residual});
  }
  write_table(cfg.out, format, t);
  std::cout << "verdict: " << to_string(verdict) << ", theta = " << pair.theta()
            << ", duration (omega=1) = " << 0.5 * pair.theta() << "\n";
  return 0;
}

int cmd_verify(const Config& cfg) {
  const std::vector<SuiteResult> results = run_verification(cfg.seed);
  for (const SuiteResult& r : results) std::cout << format_suite_line(r) << "\n";
  if (all_passed(results)) {
    std::cout << "verification: all suites passed\n";
    return 0;
  }
  std::cout << "verification: FAILED\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-qubit entanglement along brachistochrone (time-optimal) evolutions"};
  app.require_subcommand(1);
  Config cfg;

  CLI::App* scan = app.add_subcommand(
      "scan-alpha", "Time-averaged three-tangle of the W-tilde -> cos(a) GHZ + sin(a) W family");
  add_common_options(scan, cfg);
  scan->add_option("--out", cfg.out, "output file path")->required();

  CLI::App* pdf = app.add_subcommand(
      "pdf", "Histogram PDFs of time-averaged tau and C^2 over Haar-random pairs");
  add_common_options(pdf, cfg);
  pdf->add_option("--theta-half", cfg.theta_half,
                  "separation half-angles as multiples of pi (default 0.125 0.25 0.375 0.5)");
  pdf->add_option("--ensemble", cfg.ensemble, "symmetric | general")->capture_default_str();
  pdf->add_option("--out", cfg.out, "output path prefix (suffixed per series)")->required();

  CLI::App* evolve = app.add_subcommand(
      "evolve", "Entanglement measures along the geodesic between two given states");
  add_common_options(evolve, cfg);
  evolve->add_option("--out", cfg.out, "output file path")->required();
  evolve
      ->add_option("initial", cfg.initial_text,
                   "initial state: 8 're,im' pairs or ghz | w | wtilde")
      ->required();
  evolve->add_option("final", cfg.final_text, "final state, same syntax")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run all cross-module invariant suites");
  verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;  // help/version exit clean; flag errors are parse errors
  }

  try {
    if (scan->parsed()) return cmd_scan_alpha(cfg);
    if (pdf->parsed()) return cmd_pdf(cfg);
    if (evolve->parsed()) return cmd_evolve(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
