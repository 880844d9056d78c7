#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maplab/dart.hpp"
#include "maplab/partition.hpp"
#include "maplab/permutation.hpp"

namespace maplab {

/// An injection pi: X -> {1..n} with X a subset of {1..n}; the edge set
/// {s_i t_pi(i) : i in X} of a partial map.
class PartialPairing {
 public:
  PartialPairing() = default;
  explicit PartialPairing(std::size_t n) : s_to_t_(n, 0), t_to_s_(n, 0) {}

  /// Full pairing X = {1..n} given by a permutation.
  static PartialPairing from_permutation(const Permutation& pi);

  std::size_t degree() const { return s_to_t_.size(); }
  /// |X|
  std::size_t size() const { return size_; }
  bool is_complete() const { return size_ == s_to_t_.size(); }

  /// pi(i) = j. Throws std::invalid_argument if i is already in the domain
  /// or j already in the image; std::out_of_range on bad indices.
  void set(std::size_t i, std::size_t j);

  std::optional<std::size_t> image(std::size_t i) const;
  std::optional<std::size_t> preimage(std::size_t j) const;

  /// Partner of a dart under E(pi), or nullopt when the dart is unpaired.
  std::optional<Dart> partner(Dart d) const;

  friend bool operator==(const PartialPairing&, const PartialPairing&) = default;

 private:
  std::vector<std::uint32_t> s_to_t_;  // 0 = unpaired
  std::vector<std::uint32_t> t_to_s_;
  std::size_t size_ = 0;
};

/// A partial bipartite map (D, R, E(pi)) with vertex degrees alpha (S side)
/// and beta (T side).
class PartialMap {
 public:
  /// The map with no edges. Throws std::invalid_argument if the partitions
  /// have different sizes.
  PartialMap(Partition alpha, Partition beta);
  PartialMap(Partition alpha, Partition beta, PartialPairing pairing);

  const Partition& alpha() const { return alpha_; }
  const Partition& beta() const { return beta_; }
  const PartialPairing& pairing() const { return pairing_; }
  std::size_t degree() const { return alpha_.size(); }

  bool is_complete() const { return pairing_.is_complete(); }
  bool is_paired(Dart d) const;
  std::optional<Dart> partner(Dart d) const { return pairing_.partner(d); }

  /// Adds the edge {a, b}. Throws std::invalid_argument when a and b are on
  /// the same side or either is already paired.
  void pair(Dart a, Dart b);

  /// Unpaired darts of one side, ascending.
  std::vector<Dart> unpaired(Side side) const;

  friend bool operator==(const PartialMap&, const PartialMap&) = default;

 private:
  Partition alpha_;
  Partition beta_;
  PartialPairing pairing_;
};

/// R: s_i -> s_{sigma0(i)}, t_j -> t_{omega0(j)} for the canonical
/// permutations of alpha and beta.
DartPermutation rotation_scheme(const Partition& alpha, const Partition& beta);

/// E(pi): the involution swapping s_i and t_pi(i) for i in X, fixing the rest.
DartPermutation edge_involution(const PartialPairing& pairing);

/// R . E(pi), R applied first. Unpaired darts are traversed like any other.
DartPermutation face_permutation(const PartialMap& m);

/// Cycles of the face permutation made only of paired darts.
std::size_t completed_faces(const PartialMap& m);

/// The permutation R . E induces on the unpaired darts: u(d) is the first
/// unpaired dart reached by iterating the face permutation from d.
DartPermutation unpaired_permutation(const PartialMap& m);

/// Fixed points of the unpaired permutation, ascending.
std::vector<Dart> bad_darts(const PartialMap& m);

/// Partial faces holding darts from both S and T.
std::vector<std::vector<Dart>> mixed_partial_faces(const PartialMap& m);

/// True when the map has no mixed partial face.
bool is_bad_map(const PartialMap& m);

/// The permutation of {1..n} read off R . E by dropping T darts; equals
/// sigma0 pi omega0 pi^-1. Throws std::invalid_argument on an incomplete map.
Permutation project_to_permutation(const PartialMap& m);

/// The complete map m_pi. Throws std::invalid_argument on a degree mismatch.
PartialMap map_from_permutation(const Partition& alpha, const Partition& beta, const Permutation& pi);

/// Graphviz rendering: one node per vertex (cycle of R) listing its darts in
/// rotation order, one edge per pair of E, unpaired darts in brackets.
std::string to_dot(const PartialMap& m);

}  // namespace maplab
