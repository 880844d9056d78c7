#include "maplab/process.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "dart_code.hpp"

namespace maplab {

using detail::decode;
using detail::encode;

std::string_view to_string(Variant v) { return v == Variant::A ? "A" : "B"; }

ProcessState::ProcessState(Partition alpha, Partition beta)
    : n_(alpha.size()), map_(std::move(alpha), std::move(beta)) {
  // Before any pairing u = R.
  const DartPermutation rotation = rotation_scheme(map_.alpha(), map_.beta());
  succ_.resize(2 * n_);
  pred_.resize(2 * n_);
  position_.resize(2 * n_);
  paired_.assign(2 * n_, 0);
  for (std::uint32_t c = 0; c < 2 * n_; ++c) {
    const auto next = encode(rotation(decode(c, n_)), n_);
    succ_[c] = next;
    pred_[next] = c;
    auto& side = unpaired_[detail::is_s_code(c, n_) ? 0 : 1];
    position_[c] = static_cast<std::uint32_t>(side.size());
    side.push_back(c);
  }
  for (std::uint32_t c = 0; c < 2 * n_; ++c) {
    if (succ_[c] == c) {
      bad_.insert(c);
      ++bad_by_side_[detail::is_s_code(c, n_) ? 0 : 1];
    }
  }
}

Dart ProcessState::unpaired_at(Side side, std::size_t i) const {
  return decode(unpaired_[static_cast<int>(side)].at(i), n_);
}

bool ProcessState::is_unpaired(Dart d) const { return !paired_[encode(d, n_)]; }

Dart ProcessState::u_next(Dart d) const {
  const auto c = encode(d, n_);
  if (paired_[c]) throw std::invalid_argument(d.to_string() + " is paired");
  return decode(succ_[c], n_);
}

Dart ProcessState::u_prev(Dart d) const {
  const auto c = encode(d, n_);
  if (paired_[c]) throw std::invalid_argument(d.to_string() + " is paired");
  return decode(pred_[c], n_);
}

DartPermutation ProcessState::unpaired_permutation() const {
  std::vector<std::int32_t> image(2 * n_, -1);
  for (std::uint32_t c = 0; c < 2 * n_; ++c)
    if (!paired_[c]) image[c] = static_cast<std::int32_t>(succ_[c]);
  return detail::make_dart_permutation(n_, std::move(image));
}

bool ProcessState::is_bad(Dart d) const { return bad_.count(encode(d, n_)) != 0; }

std::optional<Dart> ProcessState::smallest_bad(Side side) const {
  // S codes precede T codes.
  auto it = side == Side::S ? bad_.begin() : bad_.lower_bound(static_cast<std::uint32_t>(n_));
  if (it == bad_.end() || (side == Side::S && *it >= n_)) return std::nullopt;
  return decode(*it, n_);
}

std::vector<Dart> ProcessState::bad_darts() const {
  std::vector<Dart> out;
  for (auto c : bad_) out.push_back(decode(c, n_));
  return out;
}

Dart ProcessState::smallest_unpaired_s() const {
  if (done()) throw std::logic_error("process already complete");
  return decode(static_cast<std::uint32_t>(s_cursor_), n_);
}

bool ProcessState::crosses(std::uint32_t code) const {
  return detail::is_s_code(code, n_) != detail::is_s_code(succ_[code], n_);
}

void ProcessState::remove_unpaired(std::uint32_t code) {
  auto& side = unpaired_[detail::is_s_code(code, n_) ? 0 : 1];
  const std::uint32_t at = position_[code];
  side[at] = side.back();
  position_[side[at]] = at;
  side.pop_back();
  paired_[code] = 1;
  if (bad_.erase(code)) --bad_by_side_[detail::is_s_code(code, n_) ? 0 : 1];
}

StepRecord ProcessState::apply_pairing(Dart active, Dart pairing) {
  if (active.side == pairing.side)
    throw std::invalid_argument(
        fmt::format("cannot pair {} with {}: same side", active.to_string(), pairing.to_string()));
  const auto a = encode(active, n_);
  const auto b = encode(pairing, n_);
  if (paired_[a]) throw std::invalid_argument(active.to_string() + " is already paired");
  if (paired_[b]) throw std::invalid_argument(pairing.to_string() + " is already paired");

  StepRecord rec;
  rec.k = step_;
  rec.active = active;
  rec.pairing = pairing;
  rec.bad_t_before = bad_by_side_[1];
  rec.bad_map_before = is_bad_map();
  rec.unpaired_before = unpaired_[0].size();
  rec.bad_before = bad_.size();

  const std::uint32_t pa = pred_[a], na = succ_[a];
  const std::uint32_t pb = pred_[b], nb = succ_[b];

  std::uint32_t touched[4] = {a, b, pa, pb};
  std::size_t touched_count = 0;
  for (auto c : {a, b, pa, pb})
    if (std::find(touched, touched + touched_count, c) == touched + touched_count) touched[touched_count++] = c;
  for (std::size_t i = 0; i < touched_count; ++i)
    if (crosses(touched[i])) --crossing_links_;

  auto rho = [&](std::uint32_t y) { return y == a ? nb : y == b ? na : succ_[y]; };
  std::uint32_t relinked[2];
  std::size_t relinked_count = 0;
  for (auto x : {pa, pb}) {
    if (x == a || x == b || (relinked_count == 1 && relinked[0] == x)) continue;
    std::uint32_t y = rho(x);
    while (y == a || y == b) y = rho(y);
    succ_[x] = y;
    pred_[y] = x;
    relinked[relinked_count++] = x;
  }

  rec.faces_added = (nb == a) + (na == b) + (nb == b && na == a);
  faces_ += rec.faces_added;

  remove_unpaired(a);
  remove_unpaired(b);
  for (std::size_t i = 0; i < relinked_count; ++i) {
    const auto x = relinked[i];
    if (crosses(x)) ++crossing_links_;
    if (succ_[x] == x && bad_.insert(x).second) ++bad_by_side_[detail::is_s_code(x, n_) ? 0 : 1];
  }
  map_.pair(active, pairing);
  while (s_cursor_ < n_ && paired_[s_cursor_]) ++s_cursor_;
  ++step_;
  rec.bad_after = bad_.size();
  return rec;
}

Dart rpa_active_dart(const ProcessState& state) {
  if (state.done()) throw std::logic_error("process already complete");
  if (auto d = state.smallest_bad(Side::S)) return *d;
  if (auto d = state.smallest_bad(Side::T)) return *d;
  return state.smallest_unpaired_s();
}

Dart rpb_active_dart(const ProcessState& state) {
  if (state.done()) throw std::logic_error("process already complete");
  return s_dart(state.step());
}

Dart active_dart(const ProcessState& state, Variant variant) {
  return variant == Variant::A ? rpa_active_dart(state) : rpb_active_dart(state);
}

StepEffects predict_step_effects(const PartialMap& m, Dart active, Dart pairing) {
  if (active.side == pairing.side)
    throw std::invalid_argument(
        fmt::format("cannot pair {} with {}: same side", active.to_string(), pairing.to_string()));
  if (m.is_paired(active)) throw std::invalid_argument(active.to_string() + " is already paired");
  if (m.is_paired(pairing)) throw std::invalid_argument(pairing.to_string() + " is already paired");

  const DartPermutation u = unpaired_permutation(m);
  const DartPermutation u_inv = [&] {
    std::vector<std::vector<Dart>> reversed;
    for (auto cycle : u.cycles()) {
      std::reverse(cycle.begin(), cycle.end());
      reversed.push_back(std::move(cycle));
    }
    return DartPermutation::from_cycles(m.degree(), reversed);
  }();
  auto is_bad = [&](Dart d) { return u(d) == d; };

  StepEffects fx;
  const std::size_t consumed = is_bad(active) + is_bad(pairing);
  if (is_bad(active)) {
    fx.faces_added = is_bad(pairing) ? 1 : 0;
    fx.bad_created = (!is_bad(pairing) && u(u(pairing)) == pairing) ? 1 : 0;
  } else {
    const Dart next = u(active), prev = u_inv(active);
    const Dart next2 = u(next), prev2 = u_inv(prev);
    if (pairing == next && next == prev) {
      fx.faces_added = 2;
    } else {
      fx.faces_added = (pairing == next) + (pairing == prev);
    }
    if (pairing == next2 && next2 == prev2) {
      fx.bad_created = 2;
    } else {
      fx.bad_created = (pairing == next2) + (pairing == prev2);
    }
    // d sits on a 2-cycle (d x) and is glued into the pairing dart's loop:
    // x is left alone on its face.
    if (is_bad(pairing) && next == prev) fx.bad_created += 1;
  }
  fx.bad_delta = static_cast<std::ptrdiff_t>(fx.bad_created) - static_cast<std::ptrdiff_t>(consumed);
  return fx;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::size_t drive_process(ProcessState& state, Variant variant, const PairingChooser& choose,
                          const std::function<void(const StepRecord&)>& on_step) {
  if (!state.alpha().is_fixed_point_free() || !state.beta().is_fixed_point_free())
    throw std::invalid_argument(fmt::format("random processes need partitions without parts of size 1, got ({}) and ({})",
                                            state.alpha().to_string(), state.beta().to_string()));
  while (!state.done()) {
    const Dart active = active_dart(state, variant);
    const Side other = opposite(active.side);
    const std::size_t count = state.unpaired_count(other);
    const std::size_t pick = choose(count);
    if (pick >= count) throw std::out_of_range("pairing choice out of range");
    const StepRecord rec = state.apply_pairing(active, state.unpaired_at(other, pick));
    if (on_step) on_step(rec);
  }
  return state.completed_faces();
}

Trace run_process(const Partition& alpha, const Partition& beta, Variant variant, std::mt19937_64& rng,
                  bool record_steps) {
  ProcessState state(alpha, beta);
  Trace trace{alpha, beta, variant, 0, 0, {}, state.map(), 0};
  if (record_steps) trace.steps.reserve(alpha.size());
  auto choose = [&rng](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  };
  std::function<void(const StepRecord&)> sink;
  if (record_steps) sink = [&trace](const StepRecord& r) { trace.steps.push_back(r); };
  trace.faces = drive_process(state, variant, choose, sink);
  trace.final_map = state.map();
  return trace;
}

Trace run_process(const Partition& alpha, const Partition& beta, Variant variant, std::uint64_t seed,
                  std::uint64_t trial, bool record_steps) {
  auto rng = trial_rng(seed, trial);
  Trace trace = run_process(alpha, beta, variant, rng, record_steps);
  trace.seed = seed;
  trace.trial = trial;
  return trace;
}

PartialMap sample_uniform_map(const Partition& alpha, const Partition& beta, std::mt19937_64& rng) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument(fmt::format("partitions of different sizes: {} vs {}", alpha.size(), beta.size()));
  std::vector<std::size_t> images(alpha.size());
  std::iota(images.begin(), images.end(), std::size_t{1});
  std::shuffle(images.begin(), images.end(), rng);
  return map_from_permutation(alpha, beta, Permutation::from_images(images));
}

}  // namespace maplab
