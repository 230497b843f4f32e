#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qb3 {

/// Outcome of one invariant suite: the worst residual observed and the bound
/// it must stay under. A suite that throws is reported failed with the
/// exception text in `detail`.
struct SuiteResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;
  double threshold = 0.0;
  std::string detail;
};

/// Runs every cross-module invariant suite (Haar unitarity, eigenvalue
/// trace/determinant identities, PSD spectra, monogamy residual, symmetric
/// embedding isometry, geodesic norm preservation, case-1 closed form
/// agreement, sampled pair overlaps, histogram normalization) with
/// deterministic streams derived from `seed`.
std::vector<SuiteResult> run_verification(std::uint64_t seed);

bool all_passed(const std::vector<SuiteResult>& results);

/// One aligned report line: "[PASS] name  worst=... threshold=...".
std::string format_suite_line(const SuiteResult& r);

}  // namespace qb3
