#include "maplab/report.hpp"

#include <fmt/format.h>

namespace maplab {

namespace {

std::string bound_text(const Bound& b) { return b.exact ? to_string(*b.exact) : fmt::format("{}", b.value); }

std::string mean_text(const EstimateReport& r) {
  return r.exact_mean ? to_string(*r.exact_mean) : fmt::format("{}", r.mean);
}

nlohmann::ordered_json parts_json(const Partition& p) {
  return nlohmann::ordered_json(std::vector<std::size_t>(p.parts().begin(), p.parts().end()));
}

nlohmann::ordered_json steps_json(const StepAggregates& s) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t k = 1; k <= s.n; ++k) {
    rows.push_back({{"k", k},
                    {"faces_sum", s.faces_sum[k - 1]},
                    {"mean_faces", s.mean_faces(k)},
                    {"mean_O", s.mean_bad_t(k)},
                    {"stderr_O", s.stderr_bad_t(k)},
                    {"freq_b", s.freq_bad_map(k)},
                    {"stderr_b", s.stderr_bad_map(k)}});
  }
  return rows;
}

}  // namespace

nlohmann::ordered_json to_json(const EstimateReport& r) {
  nlohmann::ordered_json j;
  j["alpha"] = parts_json(r.alpha);
  j["beta"] = parts_json(r.beta);
  j["n"] = r.n;
  j["method"] = std::string(to_string(r.method));
  j["trials"] = r.trials;
  j["mean"] = mean_text(r);
  j["mean_float"] = r.mean;
  j["stderr"] = r.std_error;
  j["window_low"] = bound_text(r.window.low);
  j["window_high"] = bound_text(r.window.high);
  j["verdict"] = std::string(to_string(r.verdict));
  auto hist = nlohmann::ordered_json::object();
  for (auto [cycles, count] : r.histogram) hist[std::to_string(cycles)] = count;
  j["histogram"] = hist;
  if (r.steps) {
    j["total_faces"] = r.steps->total_faces;
    j["steps"] = steps_json(*r.steps);
  }
  return j;
}

std::string csv_header() {
  return "alpha,beta,n,method,trials,mean,mean_float,stderr,window_low,window_high,verdict";
}

std::string to_csv_row(const EstimateReport& r) {
  return fmt::format("\"{}\",\"{}\",{},{},{},{},{},{},{},{},{}", r.alpha.to_string(), r.beta.to_string(), r.n,
                     to_string(r.method), r.trials, mean_text(r), r.mean, r.std_error, bound_text(r.window.low),
                     bound_text(r.window.high), to_string(r.verdict));
}

nlohmann::ordered_json to_json(const StepRecord& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["active"] = r.active.to_string();
  j["pairing"] = r.pairing.to_string();
  j["faces_added"] = r.faces_added;
  j["O_k"] = r.bad_t_before;
  j["b_k"] = r.bad_map_before;
  return j;
}

StepRecord step_from_json(const nlohmann::json& j) {
  StepRecord r;
  r.k = j.at("k").get<std::size_t>();
  r.active = parse_dart(j.at("active").get<std::string>());
  r.pairing = parse_dart(j.at("pairing").get<std::string>());
  r.faces_added = j.at("faces_added").get<std::size_t>();
  r.bad_t_before = j.at("O_k").get<std::size_t>();
  r.bad_map_before = j.at("b_k").get<bool>();
  return r;
}

std::string trace_to_jsonl(const Trace& trace) {
  std::string out;
  for (const auto& r : trace.steps) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

}  // namespace maplab
