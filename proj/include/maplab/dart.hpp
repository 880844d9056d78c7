#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace maplab {

class DartPermutation;

namespace detail {
// image[code] is the dense code of the image, or -1 outside the domain.
DartPermutation make_dart_permutation(std::size_t n, std::vector<std::int32_t> image);
}  // namespace detail

enum class Side : std::uint8_t { S = 0, T = 1 };

inline Side opposite(Side side) { return side == Side::S ? Side::T : Side::S; }

/// A half-edge s_i or t_j, 1 <= index <= n. Darts order all S before all T,
/// then by index.
struct Dart {
  Side side = Side::S;
  std::size_t index = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;

  std::string to_string() const;
};

inline Dart s_dart(std::size_t i) { return Dart{Side::S, i}; }
inline Dart t_dart(std::size_t j) { return Dart{Side::T, j}; }

/// Parses "s3" / "t12". Throws std::invalid_argument.
Dart parse_dart(std::string_view text);

/// A permutation of a subset of the 2n darts of a map of degree n.
///
/// Used for the rotation scheme, edge involutions and face permutations
/// (domain = all darts) as well as the unpaired permutation (domain = the
/// unpaired darts).
class DartPermutation {
 public:
  DartPermutation() = default;
  /// Identity on all 2n darts.
  static DartPermutation identity(std::size_t n);
  /// Disjoint cycles; the domain is exactly the darts mentioned.
  static DartPermutation from_cycles(std::size_t n, const std::vector<std::vector<Dart>>& cycles);

  std::size_t degree() const { return n_; }
  bool contains(Dart d) const;
  /// Throws std::out_of_range if d is outside the domain.
  Dart operator()(Dart d) const;
  std::size_t domain_size() const { return domain_size_; }
  std::vector<Dart> domain() const;

  /// Cycles ordered by their smallest dart; each starts at that dart.
  std::vector<std::vector<Dart>> cycles() const;
  std::vector<std::size_t> cycle_lengths() const;
  std::size_t cycle_count() const;
  std::vector<Dart> fixed_points() const;

  /// Cycle notation with fixed points, e.g. "(s1 t3)(s2 t5)"; "()" if empty.
  std::string to_string() const;

  friend bool operator==(const DartPermutation&, const DartPermutation&) = default;

 private:
  friend DartPermutation compose(const DartPermutation&, const DartPermutation&);
  friend DartPermutation detail::make_dart_permutation(std::size_t, std::vector<std::int32_t>);

  std::size_t n_ = 0;
  std::size_t domain_size_ = 0;
  std::vector<std::int32_t> image_;  // dense code -> dense code, -1 outside domain
};

/// Left-to-right product on a common domain: compose(p, q)(d) = q(p(d)).
DartPermutation compose(const DartPermutation& p, const DartPermutation& q);

}  // namespace maplab
