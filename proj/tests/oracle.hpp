#pragma once

// Slow reference implementations used as test oracles. They work directly
// from part lists and an index map, without the library's encodings.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "maplab/dart.hpp"
#include "maplab/partial_map.hpp"

namespace oracle {

using maplab::Dart;
using maplab::Side;

struct NaiveMap {
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> beta;
  std::map<std::size_t, std::size_t> s_to_t;

  std::size_t n() const { return std::accumulate(alpha.begin(), alpha.end(), std::size_t{0}); }

  static std::size_t rotate(const std::vector<std::size_t>& parts, std::size_t i) {
    std::size_t start = 1;
    for (std::size_t p : parts) {
      if (i < start + p) return i + 1 == start + p ? start : i + 1;
      start += p;
    }
    return 0;
  }

  Dart rot(Dart d) const { return Dart{d.side, rotate(d.side == Side::S ? alpha : beta, d.index)}; }

  bool paired(Dart d) const {
    if (d.side == Side::S) return s_to_t.count(d.index) > 0;
    for (const auto& [i, j] : s_to_t)
      if (j == d.index) return true;
    return false;
  }

  Dart edge(Dart d) const {
    if (d.side == Side::S) {
      auto it = s_to_t.find(d.index);
      return it == s_to_t.end() ? d : Dart{Side::T, it->second};
    }
    for (const auto& [i, j] : s_to_t)
      if (j == d.index) return Dart{Side::S, i};
    return d;
  }

  Dart face(Dart d) const { return edge(rot(d)); }

  std::vector<Dart> darts() const {
    std::vector<Dart> out;
    for (std::size_t i = 1; i <= n(); ++i) out.push_back(Dart{Side::S, i});
    for (std::size_t j = 1; j <= n(); ++j) out.push_back(Dart{Side::T, j});
    return out;
  }

  std::vector<std::vector<Dart>> face_cycles() const {
    std::set<Dart> seen;
    std::vector<std::vector<Dart>> out;
    for (Dart d : darts()) {
      if (seen.count(d)) continue;
      std::vector<Dart> cycle;
      for (Dart x = d; !seen.count(x); x = face(x)) {
        seen.insert(x);
        cycle.push_back(x);
      }
      out.push_back(cycle);
    }
    return out;
  }

  std::size_t completed_faces() const {
    std::size_t count = 0;
    for (const auto& c : face_cycles())
      count += std::all_of(c.begin(), c.end(), [&](Dart d) { return paired(d); });
    return count;
  }

  // u(d) for an unpaired d.
  Dart u(Dart d) const {
    Dart x = face(d);
    while (paired(x)) x = face(x);
    return x;
  }

  std::vector<Dart> bad() const {
    std::vector<Dart> out;
    for (Dart d : darts())
      if (!paired(d) && u(d) == d) out.push_back(d);
    return out;
  }

  bool is_bad_map() const {
    for (Dart d : darts())
      if (!paired(d) && u(d).side != d.side) return false;
    return true;
  }

  std::vector<Dart> unpaired(Side side) const {
    std::vector<Dart> out;
    for (Dart d : darts())
      if (d.side == side && !paired(d)) out.push_back(d);
    return out;
  }

  maplab::PartialMap to_map() const {
    maplab::PartialPairing p(n());
    for (const auto& [i, j] : s_to_t) p.set(i, j);
    return maplab::PartialMap(maplab::Partition(alpha), maplab::Partition(beta), p);
  }
};

// Cycle count of sigma0 pi omega0 pi^-1 (left to right) on 0-based images.
inline std::size_t product_cycles(const std::vector<std::size_t>& alpha, const std::vector<std::size_t>& beta,
                                  const std::vector<std::size_t>& pi) {
  const std::size_t n = pi.size();
  auto canon = [n](const std::vector<std::size_t>& parts) {
    std::vector<std::size_t> p(n);
    std::size_t start = 0;
    for (std::size_t len : parts) {
      for (std::size_t i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
      start += len;
    }
    return p;
  };
  const auto sigma = canon(alpha);
  const auto omega = canon(beta);
  std::vector<std::size_t> pi_inv(n);
  for (std::size_t i = 0; i < n; ++i) pi_inv[pi[i]] = i;
  std::vector<bool> seen(n);
  std::size_t cycles = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++cycles;
    for (std::size_t y = x; !seen[y]; y = pi_inv[omega[pi[sigma[y]]]]) seen[y] = true;
  }
  return cycles;
}

inline std::vector<std::size_t> random_parts(std::size_t n, std::mt19937_64& rng, bool allow_ones = false) {
  std::vector<std::size_t> parts;
  std::size_t left = n;
  while (left > 0) {
    std::size_t p;
    if (allow_ones) {
      p = 1 + rng() % left;
    } else if (left <= 3) {
      p = left;
    } else {
      p = 2 + rng() % (left - 1);
      if (left - p == 1) --p;
    }
    parts.push_back(p);
    left -= p;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

// A random partial pairing with `edges` edges.
inline std::map<std::size_t, std::size_t> random_pairing(std::size_t n, std::size_t edges, std::mt19937_64& rng) {
  std::vector<std::size_t> s(n), t(n);
  std::iota(s.begin(), s.end(), std::size_t{1});
  std::iota(t.begin(), t.end(), std::size_t{1});
  std::shuffle(s.begin(), s.end(), rng);
  std::shuffle(t.begin(), t.end(), rng);
  std::map<std::size_t, std::size_t> out;
  for (std::size_t e = 0; e < edges; ++e) out[s[e]] = t[e];
  return out;
}

}  // namespace oracle
