#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace maplab {

/// An integer partition of n, stored with nonincreasing parts.
///
/// Prefix sums are precomputed: prefix(j) is the sum of the j largest parts,
/// so prefix(0) == 0 and prefix(length()) == size().
class Partition {
 public:
  /// Sorts `parts` into nonincreasing order. Throws std::invalid_argument on
  /// an empty list or a zero part.
  explicit Partition(std::vector<std::size_t> parts);

  /// n, the sum of the parts.
  std::size_t size() const { return prefix_.back(); }
  /// Number of parts.
  std::size_t length() const { return parts_.size(); }
  std::span<const std::size_t> parts() const { return parts_; }

  /// Sum of the first j parts, 0 <= j <= length(). Throws std::out_of_range.
  std::size_t prefix(std::size_t j) const;

  bool is_fixed_point_free() const;

  /// True when some part boundary satisfies prefix(j) + 1 == k for
  /// 0 <= j < length(); i.e. position k (1-based) opens a new block.
  bool starts_block(std::size_t k) const;

  /// Parts joined by commas, e.g. "4,3,2".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::vector<std::size_t> prefix_;
};

/// All partitions of n with every part >= 2, in reverse lexicographic order.
std::vector<Partition> fixed_point_free_partitions(std::size_t n);

/// Every partition of n, reverse lexicographic order.
std::vector<Partition> all_partitions(std::size_t n);

/// Parses "4,3,2" (any order, whitespace tolerated). Throws
/// std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

}  // namespace maplab
