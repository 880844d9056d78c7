#pragma once

// Dense dart encoding shared by the implementation files: s_i -> i - 1,
// t_j -> n + j - 1.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "maplab/dart.hpp"

namespace maplab::detail {

inline std::uint32_t encode(Dart d, std::size_t n) {
  if (d.index < 1 || d.index > n) throw std::out_of_range("dart " + d.to_string() + " out of range");
  return static_cast<std::uint32_t>(d.side == Side::S ? d.index - 1 : n + d.index - 1);
}

inline Dart decode(std::uint32_t code, std::size_t n) {
  return code < n ? Dart{Side::S, code + 1u} : Dart{Side::T, code - n + 1u};
}

inline bool is_s_code(std::uint32_t code, std::size_t n) { return code < n; }

}  // namespace maplab::detail
