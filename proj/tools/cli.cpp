#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "maplab/estimators.hpp"
#include "maplab/partial_map.hpp"
#include "maplab/process.hpp"
#include "maplab/report.hpp"

namespace maplab::cli {

namespace {

struct RunConfig {
  std::string alpha;
  std::string beta;
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::string method = "exact";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  std::size_t max_pairs = 64;
  std::string out_path;
  std::string format = "json";
  bool trace = false;
};

bool is_pass(Verdict v) { return v == Verdict::Pass || v == Verdict::Consistent; }

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + cfg.out_path);
  file << text;
}

std::string render(const std::vector<EstimateReport>& reports, const std::string& format, bool single) {
  std::string text;
  if (format == "csv") {
    text = csv_header() + "\n";
    for (const auto& r : reports) text += to_csv_row(r) + "\n";
  } else if (format == "jsonl") {
    for (const auto& r : reports) text += to_json(r).dump() + "\n";
  } else if (single && reports.size() == 1) {
    text = to_json(reports.front()).dump(2) + "\n";
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    text = arr.dump(2) + "\n";
  }
  return text;
}

int cmd_estimate(const RunConfig& cfg, std::ostream& out) {
  const Partition alpha = parse_partition(cfg.alpha);
  const Partition beta = parse_partition(cfg.beta);
  const Method method = parse_method(cfg.method);
  EstimateReport report = method == Method::Exact
                              ? exact_report(alpha, beta, enumeration_limit())
                              : mc_expected_cycles(alpha, beta, method, cfg.trials, cfg.seed, cfg.trace);
  emit(cfg, render({report}, cfg.format, true), out);
  return is_pass(report.verdict) ? kExitOk : kExitViolation;
}

std::vector<EstimateReport> run_sweeps(const RunConfig& cfg, std::size_t lo, std::size_t hi) {
  SweepOptions options;
  options.method = parse_method(cfg.method);
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  options.enumeration_limit = enumeration_limit();
  options.max_pairs = cfg.max_pairs;
  std::vector<EstimateReport> reports;
  for (std::size_t n = lo; n <= hi; ++n) {
    auto batch = sweep(n, options);
    std::move(batch.begin(), batch.end(), std::back_inserter(reports));
  }
  return reports;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if ((cfg.n == 0) == (cfg.n_max == 0)) throw std::invalid_argument("verify needs exactly one of --n or --n-max");
  const std::size_t lo = cfg.n ? cfg.n : 1;
  const std::size_t hi = cfg.n ? cfg.n : cfg.n_max;
  if (parse_method(cfg.method) == Method::Exact && hi > enumeration_limit())
    throw std::domain_error(fmt::format("exact verification needs n <= {} (MAPLAB_ENUM_LIMIT)", enumeration_limit()));
  const auto reports = run_sweeps(cfg, lo, hi);
  emit(cfg, render(reports, cfg.format, false), out);
  std::size_t passed = 0;
  std::string failures;
  for (const auto& r : reports) {
    if (is_pass(r.verdict)) {
      ++passed;
    } else {
      failures += fmt::format("  n={} alpha=({}) beta=({}) mean={} verdict={}\n", r.n, r.alpha.to_string(),
                              r.beta.to_string(), r.exact_mean ? to_string(*r.exact_mean) : fmt::format("{}", r.mean),
                              to_string(r.verdict));
    }
  }
  if (passed == reports.size()) {
    err << fmt::format("PASS {}/{}\n", passed, reports.size());
    return kExitOk;
  }
  err << fmt::format("FAIL {}/{}\n", passed, reports.size()) << failures;
  return kExitViolation;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n == 0) throw std::invalid_argument("sweep needs --n");
  const auto reports = run_sweeps(cfg, cfg.n, cfg.n);
  emit(cfg, render(reports, cfg.format, false), out);
  return kExitOk;
}

int cmd_trace(const RunConfig& cfg, std::ostream& out) {
  const Partition alpha = parse_partition(cfg.alpha);
  const Partition beta = parse_partition(cfg.beta);
  const Method method = parse_method(cfg.method == "exact" ? "mc-B" : cfg.method);
  if (method != Method::McA && method != Method::McB)
    throw std::invalid_argument("trace needs --method mc-A or mc-B");
  const Trace trace = run_process(alpha, beta, method == Method::McA ? Variant::A : Variant::B, cfg.seed, 0);
  emit(cfg, trace_to_jsonl(trace), out);
  return kExitOk;
}

int cmd_example1(const RunConfig& cfg, std::ostream& out) {
  const Partition alpha({4, 3});
  const Partition beta({3, 2, 2});
  const Permutation pi = Permutation::from_cycles(7, {{1}, {2, 3, 5}, {4, 7, 6}});
  const PartialMap m = map_from_permutation(alpha, beta, pi);
  const DartPermutation rotation = rotation_scheme(alpha, beta);
  const DartPermutation faces = face_permutation(m);
  const Permutation projection = project_to_permutation(m);
  const Permutation product = compose(compose(compose(canonical_permutation(alpha), pi), canonical_permutation(beta)),
                                      inverse(pi));
  std::vector<std::size_t> r_type;
  for (std::size_t len : rotation.cycle_lengths()) r_type.push_back(len);
  std::ostringstream text;
  text << "alpha = (" << alpha.to_string() << ")\n"
       << "beta = (" << beta.to_string() << ")\n"
       << "pi = " << pi.to_string() << "\n"
       << "sigma0 = " << canonical_permutation(alpha).to_string() << "\n"
       << "omega0 = " << canonical_permutation(beta).to_string() << "\n"
       << "R = " << rotation.to_string() << "\n"
       << "cycle type of R = (" << Partition(r_type).to_string() << ")\n"
       << "E(pi) = " << edge_involution(m.pairing()).to_string() << "\n"
       << "R.E(pi) = " << faces.to_string() << "\n"
       << "projection = " << projection.to_string() << "\n"
       << "sigma0 pi omega0 pi^-1 = " << product.to_string() << "\n"
       << "faces = " << completed_faces(m) << "\n";
  emit(cfg, text.str(), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle counts of conjugacy-class products via random bipartite maps"};
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> methods = {"exact", "mc-A", "mc-B", "mc-uniform"};

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "Parts of alpha, comma separated")->required();
    sub->add_option("--beta", cfg.beta, "Parts of beta, comma separated")->required();
  };
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--method", cfg.method, "exact, mc-A, mc-B or mc-uniform")->check(CLI::IsMember(methods));
    sub->add_option("--trials", cfg.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Master seed (default 0)");
    sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* estimate = app.add_subcommand("estimate", "Estimate E[C] for one pair of partitions");
  add_pair(estimate);
  add_common(estimate, {"json", "csv", "jsonl"});
  estimate->add_flag("--trace", cfg.trace, "Record per-step aggregates (mc-A / mc-B)");

  auto* verify = app.add_subcommand("verify", "Check the harmonic window over all fixed-point-free pairs");
  verify->add_option("--n", cfg.n, "Single n");
  verify->add_option("--n-max", cfg.n_max, "Every n from 1 to this value");
  verify->add_option("--max-pairs", cfg.max_pairs, "Cap on ordered pairs per n for Monte Carlo runs");
  add_common(verify, {"json", "csv", "jsonl"});

  auto* sweep_cmd = app.add_subcommand("sweep", "Reports for all fixed-point-free pairs of one n");
  sweep_cmd->add_option("--n", cfg.n, "n")->required();
  sweep_cmd->add_option("--max-pairs", cfg.max_pairs, "Cap on ordered pairs for Monte Carlo runs");
  add_common(sweep_cmd, {"json", "csv", "jsonl"});

  auto* trace = app.add_subcommand("trace", "JSON lines trace of one process run");
  add_pair(trace);
  trace->add_option("--method", cfg.method, "mc-A or mc-B (default mc-B)")->check(CLI::IsMember(methods));
  trace->add_option("--seed", cfg.seed, "Seed (default 0)");
  trace->add_option("--out", cfg.out_path, "Output file (default stdout)");
  trace->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"jsonl"}));

  auto* example1 = app.add_subcommand("example1", "Print the worked (4,3) x (3,2,2) correspondence");
  example1->add_option("--out", cfg.out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    std::ostringstream help;
    app.exit(e, help, help);
    out << help.str();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kExitUsage;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
    if (trace->parsed()) return cmd_trace(cfg, out);
    if (example1->parsed()) return cmd_example1(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maplab::cli
