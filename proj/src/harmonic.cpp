#include "maplab/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maplab {

namespace {

constexpr std::size_t kDirectSumLimit = std::size_t{1} << 20;

double harmonic_float(std::size_t n) {
  if (n < kDirectSumLimit) {
    long double sum = 0.0L;
    for (std::size_t i = n; i >= 1; --i) sum += 1.0L / static_cast<long double>(i);
    return static_cast<double>(sum);
  }
  const long double x = static_cast<long double>(n);
  const long double inv2 = 1.0L / (x * x);
  return static_cast<double>(std::log(x) + std::numbers::egamma_v<long double> + 0.5L / x -
                             inv2 / 12.0L + inv2 * inv2 / 120.0L);
}

}  // namespace

Rational harmonic_exact(std::size_t n) {
  if (n == 0) throw std::invalid_argument("harmonic number needs n >= 1");
  Rational sum = 0;
  for (std::size_t i = 1; i <= n; ++i) sum += Rational(1, static_cast<long long>(i));
  return sum;
}

HarmonicNumber harmonic(std::size_t n, std::size_t exact_limit) {
  if (n == 0) throw std::invalid_argument("harmonic number needs n >= 1");
  HarmonicNumber h;
  h.n = n;
  if (n <= exact_limit) {
    h.exact = harmonic_exact(n);
    h.value = to_double(*h.exact);
  } else {
    h.value = harmonic_float(n);
  }
  return h;
}

}  // namespace maplab
