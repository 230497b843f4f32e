#pragma once

namespace qb3 {

inline constexpr const char* kVersion = "0.1.0";

// Echoed into output metadata so files document how their randomness was made.
inline constexpr const char* kRngAlgorithm = "mt19937_64+box-muller";

}  // namespace qb3
