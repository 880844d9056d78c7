#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "maplab/partition.hpp"

namespace maplab {

/// A bijection on {1, ..., n}.
///
/// All public indices are 1-based. Products follow the left-to-right
/// convention: compose(p, q) applies p first, then q.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  /// One-line notation: images[i - 1] is the image of i. Throws
  /// std::invalid_argument unless the images form a bijection on {1..n}.
  static Permutation from_images(const std::vector<std::size_t>& images);

  /// Builds a permutation of degree n from disjoint cycles. Points not
  /// mentioned are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const { return map_.size(); }

  /// Image of x, 1 <= x <= degree().
  std::size_t operator()(std::size_t x) const { return map_[x - 1] + 1; }

  /// Cycles including fixed points; each starts at its smallest point and
  /// cycles are ordered by that point.
  std::vector<std::vector<std::size_t>> cycles() const;

  /// Cycle lengths, fixed points included. Throws on degree 0.
  Partition cycle_type() const;
  std::size_t cycle_count() const;

  bool is_identity() const;

  /// Cycle notation with fixed points, e.g. "(1)(2 6 4 5 3 7)".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> zero_based) : map_(std::move(zero_based)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<std::uint32_t> map_;
};

/// (p . q)(x) = q(p(x)). Throws std::invalid_argument on a degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// (1 .. a'_1)(a'_1 + 1 .. a'_2)...: consecutive blocks, each a cycle.
Permutation canonical_permutation(const Partition& p);

namespace detail {
/// Cycle count of zero-based images; no validation. `scratch` is reused.
std::size_t count_cycles(const std::vector<std::uint32_t>& zero_based, std::vector<std::uint8_t>& scratch);
}  // namespace detail

}  // namespace maplab
