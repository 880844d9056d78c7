#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string_view>
#include <vector>

#include "maplab/dart.hpp"
#include "maplab/partial_map.hpp"
#include "maplab/partition.hpp"

namespace maplab {

/// Which random pairing process drives the build.
///
/// A picks the active dart by priority (bad S dart, bad T dart, smallest
/// unpaired S dart); B always picks s_k at step k. Both pair the active dart
/// with a uniformly random unpaired dart of the other side.
enum class Variant { A, B };

std::string_view to_string(Variant v);

/// Observables of one step, measured on the map at the start of the step.
struct StepRecord {
  std::size_t k = 0;
  Dart active;
  Dart pairing;
  std::size_t faces_added = 0;
  std::size_t bad_t_before = 0;     ///< bad darts in T^u (O_k)
  bool bad_map_before = false;      ///< no mixed partial face (b_k)
  std::size_t unpaired_before = 0;  ///< |S^u| = |T^u| = n - k + 1
  std::size_t bad_before = 0;
  std::size_t bad_after = 0;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct Trace {
  Partition alpha;
  Partition beta;
  Variant variant = Variant::B;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  std::vector<StepRecord> steps;  ///< empty when recording was off
  PartialMap final_map;
  std::size_t faces = 0;          ///< completed faces of final_map
};

/// A partial map under construction together with an incrementally
/// maintained unpaired permutation u.
///
/// Each pairing of a with b splices u in O(1): with rho = u after swapping
/// a and b (rho(a) = u(b), rho(b) = u(a)), the new u is rho with a and b
/// skipped, and every cycle of rho lying inside {a, b} is a completed face.
/// Unpaired darts sit in dense per-side arrays with a position index, so
/// uniform sampling and removal are O(1). Bad darts are kept ordered for the
/// smallest-index queries of process A.
class ProcessState {
 public:
  /// Throws std::invalid_argument when the partitions differ in size.
  ProcessState(Partition alpha, Partition beta);

  const Partition& alpha() const { return map_.alpha(); }
  const Partition& beta() const { return map_.beta(); }
  std::size_t degree() const { return n_; }
  const PartialMap& map() const { return map_; }

  /// 1-based index of the next step; degree() + 1 once complete.
  std::size_t step() const { return step_; }
  bool done() const { return step_ > n_; }

  std::size_t unpaired_count(Side side) const { return unpaired_[static_cast<int>(side)].size(); }
  /// The i-th entry of the dense unpaired array; order is arbitrary.
  Dart unpaired_at(Side side, std::size_t i) const;
  bool is_unpaired(Dart d) const;

  /// Unpaired permutation queries; d must be unpaired.
  Dart u_next(Dart d) const;
  Dart u_prev(Dart d) const;
  DartPermutation unpaired_permutation() const;

  bool is_bad(Dart d) const;
  std::size_t bad_count() const { return bad_.size(); }
  std::size_t bad_count(Side side) const { return bad_by_side_[static_cast<int>(side)]; }
  std::optional<Dart> smallest_bad(Side side) const;
  std::vector<Dart> bad_darts() const;

  /// Smallest-index unpaired S dart. Requires !done().
  Dart smallest_unpaired_s() const;

  /// True when no partial face mixes S and T darts: no u-link crosses sides.
  bool is_bad_map() const { return crossing_links_ == 0; }

  std::size_t completed_faces() const { return faces_; }

  /// Pairs `active` with `pairing` and advances the step counter. Throws
  /// std::invalid_argument for same-side darts or darts already paired.
  StepRecord apply_pairing(Dart active, Dart pairing);

 private:
  bool crosses(std::uint32_t code) const;
  void remove_unpaired(std::uint32_t code);

  std::size_t n_;
  PartialMap map_;
  std::size_t step_ = 1;
  std::vector<std::uint32_t> succ_;
  std::vector<std::uint32_t> pred_;
  std::vector<std::uint32_t> position_;
  std::vector<std::uint32_t> unpaired_[2];
  std::vector<std::uint8_t> paired_;
  std::set<std::uint32_t> bad_;
  std::size_t bad_by_side_[2] = {0, 0};
  std::size_t crossing_links_ = 0;
  std::size_t faces_ = 0;
  std::size_t s_cursor_ = 0;
};

/// Process A priority: smallest bad S dart, then smallest bad T dart, then
/// smallest unpaired S dart. Throws std::logic_error on a finished state.
Dart rpa_active_dart(const ProcessState& state);

/// Process B: s_k at step k. Throws std::logic_error on a finished state.
Dart rpb_active_dart(const ProcessState& state);

Dart active_dart(const ProcessState& state, Variant variant);

/// Change caused by pairing `active` with `pairing`, read off u alone.
struct StepEffects {
  std::size_t faces_added = 0;
  std::size_t bad_created = 0;
  std::ptrdiff_t bad_delta = 0;  ///< bad_created minus bad darts consumed

  friend bool operator==(const StepEffects&, const StepEffects&) = default;
};

/// Predicts a step without mutating the map.
///
/// Bad active dart d: a face completes iff the pairing dart is bad too; a
/// bad dart appears iff the pairing dart lies in a partial face of length 2.
/// Otherwise: one face per coincidence of the pairing dart with u(d) or
/// u^-1(d) (two when u(d) = u^-1(d)), one bad dart per coincidence with u^2(d)
/// or u^-2(d). A non-bad d on a length-2 face paired with a bad dart leaves
/// u(d) alone on its face, which also creates a bad dart.
StepEffects predict_step_effects(const PartialMap& m, Dart active, Dart pairing);

/// Independent stream for trial `trial` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Picks an index in [0, count) for the pairing dart.
using PairingChooser = std::function<std::size_t(std::size_t count)>;

/// Runs a process to completion choosing pairing darts with `choose`;
/// `on_step` (optional) sees every record. Throws std::invalid_argument on a
/// size mismatch or a part of size 1.
std::size_t drive_process(ProcessState& state, Variant variant, const PairingChooser& choose,
                          const std::function<void(const StepRecord&)>& on_step = {});

/// Full run with uniform pairing choices from `rng`.
Trace run_process(const Partition& alpha, const Partition& beta, Variant variant, std::mt19937_64& rng,
                  bool record_steps = true);

/// Run for trial `trial` of a seeded batch; the trace remembers both.
Trace run_process(const Partition& alpha, const Partition& beta, Variant variant, std::uint64_t seed,
                  std::uint64_t trial, bool record_steps = true);

/// A uniformly random complete map from a shuffled permutation. Parts of
/// size 1 are allowed.
PartialMap sample_uniform_map(const Partition& alpha, const Partition& beta, std::mt19937_64& rng);

}  // namespace maplab
