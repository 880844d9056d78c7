#include "maplab/partial_map.hpp"

#include <stdexcept>

#include <fmt/format.h>

#include "dart_code.hpp"

namespace maplab {

using detail::decode;
using detail::encode;

PartialPairing PartialPairing::from_permutation(const Permutation& pi) {
  PartialPairing p(pi.degree());
  for (std::size_t i = 1; i <= pi.degree(); ++i) p.set(i, pi(i));
  return p;
}

void PartialPairing::set(std::size_t i, std::size_t j) {
  const std::size_t n = degree();
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range(fmt::format("pairing s{} t{} outside 1..{}", i, j, n));
  if (s_to_t_[i - 1] != 0) throw std::invalid_argument(fmt::format("s{} is already paired", i));
  if (t_to_s_[j - 1] != 0) throw std::invalid_argument(fmt::format("t{} is already paired", j));
  s_to_t_[i - 1] = static_cast<std::uint32_t>(j);
  t_to_s_[j - 1] = static_cast<std::uint32_t>(i);
  ++size_;
}

std::optional<std::size_t> PartialPairing::image(std::size_t i) const {
  if (i < 1 || i > degree() || s_to_t_[i - 1] == 0) return std::nullopt;
  return s_to_t_[i - 1];
}

std::optional<std::size_t> PartialPairing::preimage(std::size_t j) const {
  if (j < 1 || j > degree() || t_to_s_[j - 1] == 0) return std::nullopt;
  return t_to_s_[j - 1];
}

std::optional<Dart> PartialPairing::partner(Dart d) const {
  if (d.side == Side::S) {
    if (auto j = image(d.index)) return t_dart(*j);
  } else if (auto i = preimage(d.index)) {
    return s_dart(*i);
  }
  return std::nullopt;
}

PartialMap::PartialMap(Partition alpha, Partition beta)
    : PartialMap(alpha, beta, PartialPairing(alpha.size())) {}

PartialMap::PartialMap(Partition alpha, Partition beta, PartialPairing pairing)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), pairing_(std::move(pairing)) {
  if (alpha_.size() != beta_.size())
    throw std::invalid_argument(
        fmt::format("partitions of different sizes: {} vs {}", alpha_.size(), beta_.size()));
  if (pairing_.degree() != alpha_.size())
    throw std::invalid_argument(
        fmt::format("pairing degree {} does not match n = {}", pairing_.degree(), alpha_.size()));
}

bool PartialMap::is_paired(Dart d) const {
  encode(d, degree());
  return pairing_.partner(d).has_value();
}

void PartialMap::pair(Dart a, Dart b) {
  if (a.side == b.side)
    throw std::invalid_argument(fmt::format("cannot pair {} with {}: same side", a.to_string(), b.to_string()));
  if (is_paired(a)) throw std::invalid_argument(a.to_string() + " is already paired");
  if (is_paired(b)) throw std::invalid_argument(b.to_string() + " is already paired");
  const Dart s = a.side == Side::S ? a : b;
  const Dart t = a.side == Side::S ? b : a;
  pairing_.set(s.index, t.index);
}

std::vector<Dart> PartialMap::unpaired(Side side) const {
  std::vector<Dart> out;
  for (std::size_t i = 1; i <= degree(); ++i) {
    const Dart d{side, i};
    if (!pairing_.partner(d)) out.push_back(d);
  }
  return out;
}

namespace {

// Dense R . E, shared by the face queries below.
std::vector<std::int32_t> face_codes(const PartialMap& m) {
  const std::size_t n = m.degree();
  const Permutation sigma = canonical_permutation(m.alpha());
  const Permutation omega = canonical_permutation(m.beta());
  std::vector<std::int32_t> image(2 * n);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    const Dart d = decode(static_cast<std::uint32_t>(c), n);
    const Dart rotated = d.side == Side::S ? s_dart(sigma(d.index)) : t_dart(omega(d.index));
    const Dart next = m.partner(rotated).value_or(rotated);
    image[c] = static_cast<std::int32_t>(encode(next, n));
  }
  return image;
}

}  // namespace

DartPermutation rotation_scheme(const Partition& alpha, const Partition& beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument(fmt::format("partitions of different sizes: {} vs {}", alpha.size(), beta.size()));
  const std::size_t n = alpha.size();
  const Permutation sigma = canonical_permutation(alpha);
  const Permutation omega = canonical_permutation(beta);
  std::vector<std::int32_t> image(2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    image[i - 1] = static_cast<std::int32_t>(sigma(i) - 1);
    image[n + i - 1] = static_cast<std::int32_t>(n + omega(i) - 1);
  }
  return detail::make_dart_permutation(n, std::move(image));
}

DartPermutation edge_involution(const PartialPairing& pairing) {
  const std::size_t n = pairing.degree();
  std::vector<std::int32_t> image(2 * n);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    const Dart d = decode(static_cast<std::uint32_t>(c), n);
    image[c] = static_cast<std::int32_t>(encode(pairing.partner(d).value_or(d), n));
  }
  return detail::make_dart_permutation(n, std::move(image));
}

DartPermutation face_permutation(const PartialMap& m) {
  return detail::make_dart_permutation(m.degree(), face_codes(m));
}

std::size_t completed_faces(const PartialMap& m) {
  const std::size_t n = m.degree();
  const auto image = face_codes(m);
  std::vector<bool> seen(2 * n, false);
  std::size_t count = 0;
  for (std::size_t start = 0; start < 2 * n; ++start) {
    if (seen[start]) continue;
    bool all_paired = true;
    for (std::size_t c = start; !seen[c]; c = static_cast<std::size_t>(image[c])) {
      seen[c] = true;
      if (!m.is_paired(decode(static_cast<std::uint32_t>(c), n))) all_paired = false;
    }
    if (all_paired) ++count;
  }
  return count;
}

DartPermutation unpaired_permutation(const PartialMap& m) {
  const std::size_t n = m.degree();
  const auto face = face_codes(m);
  std::vector<std::int32_t> image(2 * n, -1);
  for (std::size_t c = 0; c < 2 * n; ++c) {
    if (m.is_paired(decode(static_cast<std::uint32_t>(c), n))) continue;
    auto next = static_cast<std::size_t>(face[c]);
    while (m.is_paired(decode(static_cast<std::uint32_t>(next), n))) next = static_cast<std::size_t>(face[next]);
    image[c] = static_cast<std::int32_t>(next);
  }
  return detail::make_dart_permutation(n, std::move(image));
}

std::vector<Dart> bad_darts(const PartialMap& m) { return unpaired_permutation(m).fixed_points(); }

std::vector<std::vector<Dart>> mixed_partial_faces(const PartialMap& m) {
  std::vector<std::vector<Dart>> out;
  for (auto& cycle : unpaired_permutation(m).cycles()) {
    bool has_s = false, has_t = false;
    for (const Dart& d : cycle) (d.side == Side::S ? has_s : has_t) = true;
    if (has_s && has_t) out.push_back(std::move(cycle));
  }
  return out;
}

bool is_bad_map(const PartialMap& m) { return mixed_partial_faces(m).empty(); }

Permutation project_to_permutation(const PartialMap& m) {
  if (!m.is_complete()) throw std::invalid_argument("projection needs a complete map");
  const std::size_t n = m.degree();
  const auto face = face_codes(m);
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    // S -> T -> S: every dart is paired, so two steps return to S.
    const auto next = static_cast<std::size_t>(face[static_cast<std::size_t>(face[i])]);
    images[i] = next + 1;
  }
  return Permutation::from_images(images);
}

PartialMap map_from_permutation(const Partition& alpha, const Partition& beta, const Permutation& pi) {
  if (pi.degree() != alpha.size())
    throw std::invalid_argument(fmt::format("permutation degree {} does not match n = {}", pi.degree(), alpha.size()));
  return PartialMap(alpha, beta, PartialPairing::from_permutation(pi));
}

std::string to_dot(const PartialMap& m) {
  const DartPermutation rotation = rotation_scheme(m.alpha(), m.beta());
  std::string out = "graph map {\n";
  auto vertex_name = [&](const std::vector<Dart>& cycle) { return cycle.front().to_string(); };
  for (const auto& cycle : rotation.cycles()) {
    std::string label;
    for (const Dart& d : cycle) {
      if (!label.empty()) label += ' ';
      label += m.is_paired(d) ? d.to_string() : "[" + d.to_string() + "]";
    }
    out += fmt::format("  v_{} [label=\"{}\", shape={}];\n", vertex_name(cycle), label,
                       cycle.front().side == Side::S ? "box" : "ellipse");
  }
  std::vector<std::string> owner(2 * m.degree());
  for (const auto& cycle : rotation.cycles())
    for (const Dart& d : cycle) owner[encode(d, m.degree())] = vertex_name(cycle);
  for (std::size_t i = 1; i <= m.degree(); ++i) {
    if (auto j = m.pairing().image(i))
      out += fmt::format("  v_{} -- v_{} [label=\"s{} t{}\"];\n", owner[encode(s_dart(i), m.degree())],
                         owner[encode(t_dart(*j), m.degree())], i, *j);
  }
  out += "}\n";
  return out;
}

}  // namespace maplab
