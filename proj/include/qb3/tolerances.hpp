#pragma once

namespace qb3 {

// Every numeric tolerance used by the library, in one record. The defaults
// below are the contract the test suites assert against; changing one here
// changes it everywhere.
struct Tolerances {
  double unitarity = 1e-12;         // ||q^dag q - I||_max for any produced unitary
  double eigen_trace = 1e-10;       // |sum(lambda) - tr| (relative above 1)
  double eigen_det = 1e-10;         // |prod(lambda) - det| (relative above 1)
  double hermiticity = 1e-12;       // ||rho - rho^dag||_max
  double trace_one = 1e-10;         // |tr(rho) - 1|
  double psd_dust = 1e-10;          // tolerated negative/imaginary eigenvalue dust
  double state_norm = 1e-10;        // | ||psi|| - 1 | after geodesic interpolation
  double overlap = 1e-10;           // EvolutionPair overlap residuals
  double monogamy = 1e-8;           // |C2_bip - C2_p1 - C2_p2 - tau|
  double measure_range = 1e-8;      // pre-clamp window around [0, 1]
  double near_zero_vector = 1e-14;  // smallest normalizable vector norm
  double identical_overlap = 1e-10; // classify: |<I|F>| > 1 - this  =>  identical
  double pair_min_angle = 1e-12;    // construct: reject |<I|F>| > 1 - this
  double pdf_integral = 1e-9;       // |sum(density * width) - 1| for any histogram
  int eigen_max_sweeps = 500;       // QR sweeps allowed per eigenvalue
};

inline constexpr Tolerances kTol{};

}  // namespace qb3
