#pragma once

#include <cstddef>
#include <optional>

#include "maplab/rational.hpp"

namespace maplab {

/// Largest n for which harmonic() returns an exact rational by default.
inline constexpr std::size_t kExactHarmonicLimit = 64;

struct HarmonicNumber {
  std::size_t n = 0;
  std::optional<Rational> exact;  ///< set when n <= the exact limit
  double value = 0.0;             ///< relative error <= 1e-12 in every mode
};

/// H_n = 1 + 1/2 + ... + 1/n. Throws std::invalid_argument for n == 0.
///
/// Up to `exact_limit` the sum is exact; past it the value is a long double
/// backward sum (n < 2^20) or the asymptotic expansion
/// ln n + gamma + 1/2n - 1/12n^2 + 1/120n^4, both well inside 1e-12.
HarmonicNumber harmonic(std::size_t n, std::size_t exact_limit = kExactHarmonicLimit);

/// Exact H_n for any n >= 1 (cost grows with the denominator).
Rational harmonic_exact(std::size_t n);

}  // namespace maplab
