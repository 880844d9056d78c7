#include "maplab/dart.hpp"

#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

#include "dart_code.hpp"

namespace maplab {

using detail::decode;
using detail::encode;

std::string Dart::to_string() const { return fmt::format("{}{}", side == Side::S ? 's' : 't', index); }

Dart parse_dart(std::string_view text) {
  if (text.size() < 2 || (text[0] != 's' && text[0] != 't'))
    throw std::invalid_argument(fmt::format("malformed dart '{}'", text));
  std::size_t index = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
  if (ec != std::errc() || ptr != text.data() + text.size() || index == 0)
    throw std::invalid_argument(fmt::format("malformed dart '{}'", text));
  return Dart{text[0] == 's' ? Side::S : Side::T, index};
}

DartPermutation detail::make_dart_permutation(std::size_t n, std::vector<std::int32_t> image) {
  DartPermutation p;
  p.n_ = n;
  p.image_ = std::move(image);
  for (std::int32_t y : p.image_)
    if (y >= 0) ++p.domain_size_;
  return p;
}

DartPermutation DartPermutation::identity(std::size_t n) {
  std::vector<std::int32_t> image(2 * n);
  for (std::size_t c = 0; c < image.size(); ++c) image[c] = static_cast<std::int32_t>(c);
  return detail::make_dart_permutation(n, std::move(image));
}

DartPermutation DartPermutation::from_cycles(std::size_t n, const std::vector<std::vector<Dart>>& cycles) {
  std::vector<std::int32_t> image(2 * n, -1);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = encode(cycle[i], n);
      if (image[from] >= 0) throw std::invalid_argument("dart cycles are not disjoint");
      image[from] = static_cast<std::int32_t>(encode(cycle[(i + 1) % cycle.size()], n));
    }
  }
  return detail::make_dart_permutation(n, std::move(image));
}

bool DartPermutation::contains(Dart d) const {
  return d.index >= 1 && d.index <= n_ && image_[encode(d, n_)] >= 0;
}

Dart DartPermutation::operator()(Dart d) const {
  if (!contains(d)) throw std::out_of_range("dart " + d.to_string() + " outside permutation domain");
  return decode(static_cast<std::uint32_t>(image_[encode(d, n_)]), n_);
}

std::vector<Dart> DartPermutation::domain() const {
  std::vector<Dart> out;
  out.reserve(domain_size_);
  for (std::size_t c = 0; c < image_.size(); ++c)
    if (image_[c] >= 0) out.push_back(decode(static_cast<std::uint32_t>(c), n_));
  return out;
}

std::vector<std::vector<Dart>> DartPermutation::cycles() const {
  std::vector<std::vector<Dart>> out;
  std::vector<bool> seen(image_.size(), false);
  // Codes ascend in dart order, so each cycle starts at its smallest dart.
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] < 0) continue;
    auto& cycle = out.emplace_back();
    for (std::size_t c = start; !seen[c]; c = static_cast<std::size_t>(image_[c])) {
      seen[c] = true;
      cycle.push_back(decode(static_cast<std::uint32_t>(c), n_));
    }
  }
  return out;
}

std::vector<std::size_t> DartPermutation::cycle_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& c : cycles()) out.push_back(c.size());
  return out;
}

std::size_t DartPermutation::cycle_count() const { return cycles().size(); }

std::vector<Dart> DartPermutation::fixed_points() const {
  std::vector<Dart> out;
  for (std::size_t c = 0; c < image_.size(); ++c)
    if (image_[c] == static_cast<std::int32_t>(c)) out.push_back(decode(static_cast<std::uint32_t>(c), n_));
  return out;
}

std::string DartPermutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += cycle[i].to_string();
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

DartPermutation compose(const DartPermutation& p, const DartPermutation& q) {
  if (p.n_ != q.n_ || p.domain() != q.domain())
    throw std::invalid_argument("dart permutations act on different domains");
  std::vector<std::int32_t> image(p.image_.size(), -1);
  for (std::size_t c = 0; c < image.size(); ++c)
    if (p.image_[c] >= 0) image[c] = q.image_[static_cast<std::size_t>(p.image_[c])];
  return detail::make_dart_permutation(p.n_, std::move(image));
}

}  // namespace maplab
