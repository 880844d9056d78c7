#include "maplab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace maplab {

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  return Permutation(std::move(map));
}

Permutation Permutation::from_images(const std::vector<std::size_t>& images) {
  const std::size_t n = images.size();
  std::vector<std::uint32_t> map(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t y = images[i];
    if (y < 1 || y > n || hit[y - 1])
      throw std::invalid_argument(fmt::format("images do not form a bijection on 1..{}", n));
    hit[y - 1] = true;
    map[i] = static_cast<std::uint32_t>(y - 1);
  }
  return Permutation(std::move(map));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 0u);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t x : cycle) {
      if (x < 1 || x > n || used[x - 1])
        throw std::invalid_argument(fmt::format("cycles are not disjoint over 1..{}", n));
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      map[cycle[i] - 1] = static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()] - 1);
  }
  return Permutation(std::move(map));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.emplace_back();
    for (std::size_t x = start; !seen[x]; x = map_[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
  }
  return out;
}

Partition Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.size());
  return Partition(std::move(lengths));
}

std::size_t Permutation::cycle_count() const {
  std::vector<std::uint8_t> scratch;
  return detail::count_cycles(map_, scratch);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& c : cycles()) out += fmt::format("({})", fmt::join(c, " "));
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument(fmt::format("degree mismatch: {} vs {}", p.degree(), q.degree()));
  std::vector<std::uint32_t> map(p.degree());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = q.map_[p.map_[i]];
  return Permutation(std::move(map));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> map(p.degree());
  for (std::size_t i = 0; i < map.size(); ++i) map[p.map_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(map));
}

Permutation canonical_permutation(const Partition& p) {
  std::vector<std::size_t> images(p.size());
  for (std::size_t j = 0; j < p.length(); ++j) {
    const std::size_t lo = p.prefix(j) + 1;
    const std::size_t hi = p.prefix(j + 1);
    for (std::size_t x = lo; x < hi; ++x) images[x - 1] = x + 1;
    images[hi - 1] = lo;
  }
  return Permutation::from_images(images);
}

std::size_t detail::count_cycles(const std::vector<std::uint32_t>& zero_based, std::vector<std::uint8_t>& scratch) {
  const std::size_t n = zero_based.size();
  scratch.assign(n, 0);
  std::size_t count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (scratch[start]) continue;
    ++count;
    for (std::size_t x = start; !scratch[x]; x = zero_based[x]) scratch[x] = 1;
  }
  return count;
}

}  // namespace maplab
