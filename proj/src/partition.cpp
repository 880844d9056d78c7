#include "maplab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace maplab {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  prefix_.reserve(parts_.size() + 1);
  prefix_.push_back(0);
  for (std::size_t p : parts_) prefix_.push_back(prefix_.back() + p);
}

std::size_t Partition::prefix(std::size_t j) const {
  if (j > parts_.size())
    throw std::out_of_range(fmt::format("prefix index {} exceeds length {}", j, parts_.size()));
  return prefix_[j];
}

bool Partition::is_fixed_point_free() const { return parts_.back() >= 2; }

bool Partition::starts_block(std::size_t k) const {
  // prefix_ is strictly increasing, so binary search suffices.
  if (k == 0) return false;
  auto it = std::lower_bound(prefix_.begin(), prefix_.end() - 1, k - 1);
  return it != prefix_.end() - 1 && *it == k - 1;
}

std::string Partition::to_string() const { return fmt::format("{}", fmt::join(parts_, ",")); }

namespace {

void enumerate(std::size_t remaining, std::size_t max_part, std::size_t min_part,
               std::vector<std::size_t>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= min_part; --p) {
    // A leftover smaller than min_part can never be filled.
    if (remaining - p != 0 && remaining - p < min_part) continue;
    current.push_back(p);
    enumerate(remaining - p, p, min_part, current, out);
    current.pop_back();
  }
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t min_part) {
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<std::size_t> current;
  enumerate(n, n, min_part, current, out);
  return out;
}

}  // namespace

std::vector<Partition> fixed_point_free_partitions(std::size_t n) { return enumerate_partitions(n, 2); }

std::vector<Partition> all_partitions(std::size_t n) { return enumerate_partitions(n, 1); }

Partition parse_partition(const std::string& text) {
  std::vector<std::size_t> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string_view token(text.data() + start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument(fmt::format("malformed partition '{}'", text));
    parts.push_back(value);
    start = end + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace maplab
