#include "maplab/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "maplab/harmonic.hpp"
#include "maplab/partial_map.hpp"
#include "maplab/permutation.hpp"
#include "parallel.hpp"

namespace maplab {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::McA: return "mc-A";
    case Method::McB: return "mc-B";
    case Method::McUniform: return "mc-uniform";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (Method m : {Method::Exact, Method::McA, Method::McB, Method::McUniform})
    if (text == to_string(m)) return m;
  throw std::invalid_argument(fmt::format("unknown method '{}'", text));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Consistent: return "consistent";
    case Verdict::Violation: return "violation";
  }
  return "?";
}

std::size_t enumeration_limit() {
  if (const char* env = std::getenv("MAPLAB_ENUM_LIMIT")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultEnumerationLimit;
}

namespace {

void check_sizes(const Partition& alpha, const Partition& beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument(fmt::format("partitions of different sizes: {} vs {}", alpha.size(), beta.size()));
}

void check_limit(std::size_t n, std::size_t limit) {
  if (n > limit)
    throw std::domain_error(fmt::format("n = {} exceeds the enumeration limit {}", n, limit));
}

std::vector<std::uint32_t> zero_based(const Permutation& p) {
  std::vector<std::uint32_t> out(p.degree());
  for (std::size_t i = 1; i <= p.degree(); ++i) out[i - 1] = static_cast<std::uint32_t>(p(i) - 1);
  return out;
}

Rational histogram_mean(const Histogram& h, std::uint64_t total) {
  Rational sum = 0;
  for (auto [cycles, count] : h) sum += Rational(cycles) * Rational(count);
  return sum / Rational(total);
}

}  // namespace

ExactResult exact_expected_cycles(const Partition& alpha, const Partition& beta, std::size_t limit,
                                  unsigned workers) {
  check_sizes(alpha, beta);
  const std::size_t n = alpha.size();
  check_limit(n, limit);
  const auto sigma = zero_based(canonical_permutation(alpha));
  const auto omega = zero_based(canonical_permutation(beta));

  // Job v enumerates the (n-1)! permutations with pi(1) = v + 1.
  workers = detail::resolve_workers(workers, n);
  std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(n + 1, 0));
  detail::parallel_slices(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> pi(n), pi_inv(n), product(n);
    std::vector<std::uint8_t> scratch;
    for (std::size_t v = begin; v < end; ++v) {
      pi[0] = static_cast<std::uint32_t>(v);
      for (std::size_t i = 1, x = 0; i < n; ++x)
        if (x != v) pi[i++] = static_cast<std::uint32_t>(x);
      do {
        for (std::size_t i = 0; i < n; ++i) pi_inv[pi[i]] = static_cast<std::uint32_t>(i);
        for (std::size_t x = 0; x < n; ++x) product[x] = pi_inv[omega[pi[sigma[x]]]];
        ++counts[w][detail::count_cycles(product, scratch)];
      } while (std::next_permutation(pi.begin() + 1, pi.end()));
    }
  });

  ExactResult result;
  for (std::size_t c = 1; c <= n; ++c) {
    std::uint64_t total = 0;
    for (const auto& per_worker : counts) total += per_worker[c];
    if (total) result.histogram[c] = total;
    result.total += total;
  }
  result.mean = histogram_mean(result.histogram, result.total);
  return result;
}

Rational map_side_expected_faces(const Partition& alpha, const Partition& beta, std::size_t limit) {
  check_sizes(alpha, beta);
  const std::size_t n = alpha.size();
  check_limit(n, limit);
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::uint64_t faces = 0, maps = 0;
  do {
    faces += completed_faces(map_from_permutation(alpha, beta, Permutation::from_images(images)));
    ++maps;
  } while (std::next_permutation(images.begin(), images.end()));
  return Rational(faces) / Rational(maps);
}

Rational class_side_expected_cycles(const Partition& alpha, const Partition& beta, std::size_t limit) {
  check_sizes(alpha, beta);
  const std::size_t n = alpha.size();
  check_limit(n, limit);
  std::vector<Permutation> of_alpha, of_beta;
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  do {
    const Permutation p = Permutation::from_images(images);
    const Partition type = p.cycle_type();
    if (type == alpha) of_alpha.push_back(p);
    if (type == beta) of_beta.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  std::uint64_t cycles = 0;
  for (const auto& sigma : of_alpha)
    for (const auto& omega : of_beta) cycles += compose(sigma, omega).cycle_count();
  return Rational(cycles) / (Rational(of_alpha.size()) * Rational(of_beta.size()));
}

bool Window::contains(const Rational& x) const {
  if (!low.exact || !high.exact) return contains(to_double(x));
  const bool above = low_inclusive ? x >= *low.exact : x > *low.exact;
  const bool below = high_inclusive ? x <= *high.exact : x < *high.exact;
  return above && below;
}

bool Window::contains(double x) const {
  const bool above = low_inclusive ? x >= low.value : x > low.value;
  const bool below = high_inclusive ? x <= high.value : x < high.value;
  return above && below;
}

bool Window::intersects(double lo, double hi) const {
  if (lo > hi) return false;
  const bool reaches_low = low_inclusive ? hi >= low.value : hi > low.value;
  const bool reaches_high = high_inclusive ? lo <= high.value : lo < high.value;
  return reaches_low && reaches_high;
}

namespace {

Bound shifted(const HarmonicNumber& h, const Rational& delta) {
  Bound b;
  if (h.exact) b.exact = *h.exact + delta;
  b.value = h.exact ? to_double(*b.exact) : h.value + to_double(delta);
  return b;
}

}  // namespace

Rational closed_form_nn(std::size_t n) {
  if (n < 2) throw std::invalid_argument("closed form needs n >= 2");
  return harmonic_exact(n - 1) + Rational(1, static_cast<long long>((n + 1) / 2));
}

Window theorem_window(std::size_t n) {
  if (n == 0) throw std::invalid_argument("window needs n >= 1");
  const HarmonicNumber h = harmonic(n);
  return Window{shifted(h, Rational(-3)), shifted(h, Rational(1)), false, true};
}

Window stanley_window(std::size_t n) {
  if (n < 2) throw std::invalid_argument("window needs n >= 2");
  const HarmonicNumber h = harmonic(n - 1);
  const Rational slack(4, static_cast<long long>(n));
  return Window{shifted(h, -slack), shifted(h, slack), true, true};
}

StepAggregates::StepAggregates(std::size_t n)
    : n(n), faces_sum(n, 0), bad_t_sum(n, 0), bad_t_sq_sum(n, 0), bad_map_count(n, 0) {}

void StepAggregates::add(const StepRecord& r) {
  const std::size_t i = r.k - 1;
  faces_sum[i] += r.faces_added;
  bad_t_sum[i] += r.bad_t_before;
  bad_t_sq_sum[i] += r.bad_t_before * r.bad_t_before;
  bad_map_count[i] += r.bad_map_before ? 1 : 0;
}

void StepAggregates::merge(const StepAggregates& other) {
  if (other.n != n) throw std::invalid_argument("aggregates of different n");
  trials += other.trials;
  total_faces += other.total_faces;
  for (std::size_t i = 0; i < n; ++i) {
    faces_sum[i] += other.faces_sum[i];
    bad_t_sum[i] += other.bad_t_sum[i];
    bad_t_sq_sum[i] += other.bad_t_sq_sum[i];
    bad_map_count[i] += other.bad_map_count[i];
  }
}

namespace {

double sample_stderr(long double sum, long double sq_sum, std::uint64_t count) {
  if (count < 2) return 0.0;
  const long double t = static_cast<long double>(count);
  const long double var = std::max(0.0L, (sq_sum - sum * sum / t) / (t - 1));
  return static_cast<double>(std::sqrt(var / t));
}

}  // namespace

double StepAggregates::mean_faces(std::size_t k) const {
  return static_cast<double>(faces_sum.at(k - 1)) / static_cast<double>(trials);
}

double StepAggregates::mean_bad_t(std::size_t k) const {
  return static_cast<double>(bad_t_sum.at(k - 1)) / static_cast<double>(trials);
}

double StepAggregates::stderr_bad_t(std::size_t k) const {
  return sample_stderr(bad_t_sum.at(k - 1), bad_t_sq_sum.at(k - 1), trials);
}

double StepAggregates::freq_bad_map(std::size_t k) const {
  return static_cast<double>(bad_map_count.at(k - 1)) / static_cast<double>(trials);
}

double StepAggregates::stderr_bad_map(std::size_t k) const {
  // Indicator: sum of squares equals the sum.
  return sample_stderr(bad_map_count.at(k - 1), bad_map_count.at(k - 1), trials);
}

Verdict check_bounds(const EstimateReport& report) {
  if (report.method == Method::Exact) {
    const bool inside = report.exact_mean ? report.window.contains(*report.exact_mean)
                                          : report.window.contains(report.mean);
    return inside ? Verdict::Pass : Verdict::Fail;
  }
  const double slack = 3.0 * report.std_error;
  return report.window.intersects(report.mean - slack, report.mean + slack) ? Verdict::Consistent
                                                                            : Verdict::Violation;
}

EstimateReport exact_report(const Partition& alpha, const Partition& beta, std::size_t limit, unsigned workers) {
  ExactResult exact = exact_expected_cycles(alpha, beta, limit, workers);
  EstimateReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.n = alpha.size();
  r.method = Method::Exact;
  r.trials = 0;
  r.mean = to_double(exact.mean);
  r.exact_mean = std::move(exact.mean);
  r.histogram = std::move(exact.histogram);
  r.window = theorem_window(r.n);
  r.verdict = check_bounds(r);
  return r;
}

namespace {

struct TrialSums {
  std::uint64_t sum = 0;
  std::uint64_t sq_sum = 0;
  Histogram histogram;
  std::optional<StepAggregates> steps;
};

}  // namespace

EstimateReport mc_expected_cycles(const Partition& alpha, const Partition& beta, Method method,
                                  std::uint64_t trials, std::uint64_t seed, bool trace_steps, unsigned workers) {
  check_sizes(alpha, beta);
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  if (method == Method::Exact) throw std::invalid_argument("mc_expected_cycles needs a Monte Carlo method");
  const bool process = method == Method::McA || method == Method::McB;
  if (process && (!alpha.is_fixed_point_free() || !beta.is_fixed_point_free()))
    throw std::invalid_argument(fmt::format("{} needs partitions without parts of size 1", to_string(method)));
  const Variant variant = method == Method::McA ? Variant::A : Variant::B;
  const std::size_t n = alpha.size();
  const bool tracing = trace_steps && process;

  workers = detail::resolve_workers(workers, trials);
  std::vector<TrialSums> partial(workers);
  detail::parallel_slices(trials, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    TrialSums& acc = partial[w];
    if (tracing) acc.steps.emplace(n);
    std::function<void(const StepRecord&)> sink;
    if (tracing) sink = [&acc](const StepRecord& r) { acc.steps->add(r); };
    for (std::size_t t = begin; t < end; ++t) {
      auto rng = trial_rng(seed, t);
      std::uint64_t faces = 0;
      if (process) {
        ProcessState state(alpha, beta);
        auto choose = [&rng](std::size_t count) {
          return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
        };
        faces = drive_process(state, variant, choose, sink);
      } else {
        faces = completed_faces(sample_uniform_map(alpha, beta, rng));
      }
      acc.sum += faces;
      acc.sq_sum += faces * faces;
      ++acc.histogram[faces];
      if (tracing) {
        ++acc.steps->trials;
        acc.steps->total_faces += faces;
      }
    }
  });

  EstimateReport r;
  r.alpha = alpha;
  r.beta = beta;
  r.n = n;
  r.method = method;
  r.trials = trials;
  std::uint64_t sum = 0, sq_sum = 0;
  if (tracing) r.steps.emplace(n);
  for (auto& acc : partial) {
    sum += acc.sum;
    sq_sum += acc.sq_sum;
    for (auto [faces, count] : acc.histogram) r.histogram[faces] += count;
    if (tracing && acc.steps) r.steps->merge(*acc.steps);
  }
  r.mean = static_cast<double>(static_cast<long double>(sum) / static_cast<long double>(trials));
  r.std_error = sample_stderr(sum, sq_sum, trials);
  r.window = theorem_window(n);
  r.verdict = check_bounds(r);
  return r;
}

Partition random_fixed_point_free_partition(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("no fixed-point-free partition of n < 2");
  const std::size_t cap = std::uniform_int_distribution<std::size_t>(2, n)(rng);
  std::vector<std::size_t> parts;
  std::size_t remaining = n;
  while (remaining > 0) {
    if (remaining <= 3) {
      parts.push_back(remaining);
      break;
    }
    const std::size_t hi = std::min(cap, remaining);
    std::size_t p = std::uniform_int_distribution<std::size_t>(2, hi)(rng);
    if (remaining - p == 1) --p;
    parts.push_back(p);
    remaining -= p;
  }
  return Partition(std::move(parts));
}

std::vector<Partition> representative_partitions(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<Partition> out;
  if (n < 2 || count == 0) return out;
  auto offer = [&](std::vector<std::size_t> parts) {
    if (out.size() >= count) return;
    Partition p(std::move(parts));
    if (p.size() == n && p.is_fixed_point_free() && std::find(out.begin(), out.end(), p) == out.end())
      out.push_back(std::move(p));
  };
  offer({n});
  if (n >= 4 || n == 2) {
    std::vector<std::size_t> twos(n / 2, 2);
    if (n % 2) {
      twos.pop_back();
      twos.push_back(3);
    }
    offer(twos);
  }
  if (n >= 3) {
    std::vector<std::size_t> threes(n / 3, 3);
    if (n % 3 == 1 && !threes.empty()) {
      threes.pop_back();
      threes.insert(threes.end(), {2, 2});
    } else if (n % 3 == 2) {
      threes.push_back(2);
    }
    offer(threes);
  }
  if (n >= 4) offer({n - n / 2, n / 2});
  if (n >= 4) offer({n - 2, 2});
  auto rng = trial_rng(seed, 0x9e3779b97f4a7c15ULL);
  for (std::size_t attempt = 0; out.size() < count && attempt < 64 * count; ++attempt) {
    const Partition p = random_fixed_point_free_partition(n, rng);
    offer({p.parts().begin(), p.parts().end()});
  }
  return out;
}

std::vector<EstimateReport> sweep(std::size_t n, const SweepOptions& options) {
  std::vector<Partition> shapes;
  const bool exact = options.method == Method::Exact && n <= options.enumeration_limit;
  // Fixed-point-free partitions of 30 already number in the hundreds.
  if (exact || n <= 24) {
    shapes = fixed_point_free_partitions(n);
  }
  const auto side = static_cast<std::size_t>(std::sqrt(static_cast<double>(options.max_pairs)));
  if (!exact && (shapes.empty() || shapes.size() * shapes.size() > options.max_pairs))
    shapes = representative_partitions(n, std::max<std::size_t>(side, 1), options.seed);

  const Method method = options.method == Method::Exact && !exact ? Method::McUniform : options.method;
  std::vector<EstimateReport> reports;
  for (const auto& alpha : shapes) {
    for (const auto& beta : shapes) {
      if (method == Method::Exact)
        reports.push_back(exact_report(alpha, beta, options.enumeration_limit, options.workers));
      else
        reports.push_back(mc_expected_cycles(alpha, beta, method, options.trials, options.seed, false, options.workers));
    }
  }
  return reports;
}

}  // namespace maplab
