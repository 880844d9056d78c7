#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "maplab/partition.hpp"
#include "maplab/process.hpp"
#include "maplab/rational.hpp"

namespace maplab {

enum class Method { Exact, McA, McB, McUniform };

std::string_view to_string(Method m);
/// "exact", "mc-A", "mc-B", "mc-uniform". Throws std::invalid_argument.
Method parse_method(std::string_view text);

inline constexpr std::size_t kDefaultEnumerationLimit = 9;

/// MAPLAB_ENUM_LIMIT when set to a positive integer, else the default.
std::size_t enumeration_limit();

/// Count of products keyed by cycle count.
using Histogram = std::map<std::size_t, std::uint64_t>;

struct ExactResult {
  Rational mean;
  Histogram histogram;
  std::uint64_t total = 0;  ///< n!
};

/// Mean cycle count of sigma0 pi omega0 pi^-1 over every pi in S_n.
///
/// Throws std::invalid_argument on a size mismatch and std::domain_error when
/// n exceeds `limit`. Work is split over `workers` threads (0 = hardware
/// concurrency); the result does not depend on the split.
ExactResult exact_expected_cycles(const Partition& alpha, const Partition& beta,
                                  std::size_t limit = kDefaultEnumerationLimit, unsigned workers = 0);

/// The same mean computed on maps: (1/n!) sum over pi of completed_faces(m_pi).
Rational map_side_expected_faces(const Partition& alpha, const Partition& beta, std::size_t limit = 7);

/// Mean of cycle_count(sigma . omega) over all sigma of type alpha and omega
/// of type beta, by filtering S_n twice. Only practical for n <= 6.
Rational class_side_expected_cycles(const Partition& alpha, const Partition& beta, std::size_t limit = 6);

/// One endpoint of a window: exact when the harmonic numbers involved are.
struct Bound {
  std::optional<Rational> exact;
  double value = 0.0;
};

struct Window {
  Bound low;
  Bound high;
  bool low_inclusive = true;
  bool high_inclusive = true;

  bool contains(const Rational& x) const;
  bool contains(double x) const;
  /// Whether [lo, hi] meets the window (respecting open ends).
  bool intersects(double lo, double hi) const;
};

/// H_{n-1} + 1/ceil(n/2). Throws std::invalid_argument for n < 2.
Rational closed_form_nn(std::size_t n);

/// (H_n - 3, H_n + 1]. Throws std::invalid_argument for n == 0.
Window theorem_window(std::size_t n);

/// [H_{n-1} - 4/n, H_{n-1} + 4/n]. Throws std::invalid_argument for n < 2.
Window stanley_window(std::size_t n);

/// Per-step sums over traced runs. Index k - 1 holds step k.
struct StepAggregates {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> faces_sum;
  std::vector<std::uint64_t> bad_t_sum;     ///< sum of O_k
  std::vector<std::uint64_t> bad_t_sq_sum;  ///< sum of O_k^2
  std::vector<std::uint64_t> bad_map_count; ///< runs with b_k
  std::uint64_t total_faces = 0;            ///< sum of final face counts

  explicit StepAggregates(std::size_t n = 0);
  void add(const StepRecord& r);
  void merge(const StepAggregates& other);

  double mean_faces(std::size_t k) const;
  double mean_bad_t(std::size_t k) const;
  double stderr_bad_t(std::size_t k) const;
  double freq_bad_map(std::size_t k) const;
  double stderr_bad_map(std::size_t k) const;
};

enum class Verdict { Pass, Fail, Consistent, Violation };

std::string_view to_string(Verdict v);

struct EstimateReport {
  Partition alpha{{1}};
  Partition beta{{1}};
  std::size_t n = 0;
  Method method = Method::Exact;
  std::uint64_t trials = 0;
  std::optional<Rational> exact_mean;  ///< set for exact reports
  double mean = 0.0;
  double std_error = 0.0;              ///< sample std / sqrt(trials); 0 for exact
  Window window;                       ///< (H_n - 3, H_n + 1]
  Verdict verdict = Verdict::Pass;
  Histogram histogram;
  std::optional<StepAggregates> steps;
};

/// Exact reports: strict rational comparison against the window (Pass/Fail).
/// MC reports: Consistent when [mean - 3 se, mean + 3 se] meets the window,
/// Violation otherwise.
Verdict check_bounds(const EstimateReport& report);

/// Exact report for one pair; verdict filled in.
EstimateReport exact_report(const Partition& alpha, const Partition& beta,
                            std::size_t limit = kDefaultEnumerationLimit, unsigned workers = 0);

/// Monte Carlo estimate of the mean face count. Trial i uses
/// trial_rng(seed, i), so the report is a function of (method, trials, seed)
/// only. `trace_steps` fills StepAggregates (mc-A / mc-B only).
///
/// Throws std::invalid_argument for trials == 0, a non-MC method, or parts of
/// size 1 with mc-A / mc-B.
EstimateReport mc_expected_cycles(const Partition& alpha, const Partition& beta, Method method,
                                  std::uint64_t trials, std::uint64_t seed, bool trace_steps = false,
                                  unsigned workers = 0);

/// Random fixed-point-free partition of n, not uniform over partitions: a
/// cap is drawn from [2, n], then parts from [2, cap] until n is used up.
/// Throws std::invalid_argument for n < 2.
Partition random_fixed_point_free_partition(std::size_t n, std::mt19937_64& rng);

/// Up to `count` distinct fixed-point-free partitions of n: (n), the
/// all-2s / all-3s shapes, two-part splits, then seeded random ones.
std::vector<Partition> representative_partitions(std::size_t n, std::size_t count, std::uint64_t seed);

struct SweepOptions {
  Method method = Method::Exact;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
  /// Cap on ordered pairs; above it a representative subset is used.
  std::size_t max_pairs = 64;
  unsigned workers = 0;
};

/// Reports for ordered pairs of fixed-point-free partitions of n. Exact
/// method falls back to mc-uniform when n exceeds the enumeration limit.
std::vector<EstimateReport> sweep(std::size_t n, const SweepOptions& options);

}  // namespace maplab
