// Copyright 2026 The QFT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
//
// Signal-type taxonomy.
//
// Every signal handled by the QFT recursions belongs to one of 20 types. A
// type fixes the applied transform, the stored time indices sto_n and the
// stored harmonics sto_k as arithmetic progressions in the periodization N,
// and therefore the real-cell storage sizes ln and lk. The names follow the
// mnemonic "<transform>_<sto_n><sto_k>" scheme: cx/re/dc/ds select
// CDFT/RDFT/DCT-0/DST-0, and o/e/t/t1/e1 describe the index groupings.
//
// Buffer positions are 0-based here. Position p corresponds to the 1-based
// cell p+1 of the usual array-matching table.

#ifndef QFT_SIGNAL_TYPES_HPP_
#define QFT_SIGNAL_TYPES_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qft {

enum class SignalTypeId : std::uint8_t {
  cx_tt,
  re_tt,
  dc_tt,
  dc_et,
  dc_ot,
  dc_te,
  dc_to,
  dc_oe,
  dc_oo,
  dc_t1e,
  dc_t1t,
  ds_tt,
  ds_et,
  ds_te,
  ds_to,
  ds_ot,
  ds_oe,
  ds_oo,
  ds_t1o,
  ds_e1o,
};

inline constexpr std::array<SignalTypeId, 20> kAllSignalTypes = {
    SignalTypeId::cx_tt,  SignalTypeId::re_tt,  SignalTypeId::dc_tt,
    SignalTypeId::dc_et,  SignalTypeId::dc_ot,  SignalTypeId::dc_te,
    SignalTypeId::dc_to,  SignalTypeId::dc_oe,  SignalTypeId::dc_oo,
    SignalTypeId::dc_t1e, SignalTypeId::dc_t1t, SignalTypeId::ds_tt,
    SignalTypeId::ds_et,  SignalTypeId::ds_te,  SignalTypeId::ds_to,
    SignalTypeId::ds_ot,  SignalTypeId::ds_oe,  SignalTypeId::ds_oo,
    SignalTypeId::ds_t1o, SignalTypeId::ds_e1o,
};

enum class TransformKind : std::uint8_t { cdft, rdft, dct0, dst0 };

/// Thrown when a mother signal type has no entry in an elaboration's
/// dispatch table.
class dispatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::string_view name(SignalTypeId type) {
  constexpr std::array<std::string_view, 20> kNames = {
      "cx_tt",  "re_tt", "dc_tt", "dc_et", "dc_ot", "dc_te", "dc_to",
      "dc_oe",  "dc_oo", "dc_t1e", "dc_t1t", "ds_tt", "ds_et", "ds_te",
      "ds_to",  "ds_ot", "ds_oe", "ds_oo", "ds_t1o", "ds_e1o",
  };
  return kNames[static_cast<std::size_t>(type)];
}

constexpr std::string_view name(TransformKind kind) {
  switch (kind) {
    case TransformKind::cdft: return "cdft";
    case TransformKind::rdft: return "rdft";
    case TransformKind::dct0: return "dct0";
    case TransformKind::dst0: return "dst0";
  }
  return "?";
}

constexpr std::optional<SignalTypeId> parse_signal_type(std::string_view text) {
  for (SignalTypeId t : kAllSignalTypes) {
    if (name(t) == text) return t;
  }
  return std::nullopt;
}

constexpr std::optional<TransformKind> parse_transform(std::string_view text) {
  for (TransformKind k : {TransformKind::cdft, TransformKind::rdft,
                          TransformKind::dct0, TransformKind::dst0}) {
    if (name(k) == text) return k;
  }
  return std::nullopt;
}

constexpr TransformKind transform_of(SignalTypeId type) {
  const auto prefix = name(type).substr(0, 2);
  if (prefix == "cx") return TransformKind::cdft;
  if (prefix == "re") return TransformKind::rdft;
  if (prefix == "dc") return TransformKind::dct0;
  return TransformKind::dst0;
}

constexpr bool is_cosine(SignalTypeId type) {
  return transform_of(type) == TransformKind::dct0;
}
constexpr bool is_sine(SignalTypeId type) {
  return transform_of(type) == TransformKind::dst0;
}

constexpr bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

constexpr std::size_t log2_exact(std::size_t n) {
  return static_cast<std::size_t>(std::countr_zero(n));
}

/// Strictly increasing arithmetic progression first, first+step, ...
struct IndexSet {
  std::size_t first = 0;
  std::size_t step = 1;
  std::size_t count = 0;

  constexpr std::size_t size() const { return count; }
  constexpr bool empty() const { return count == 0; }
  constexpr std::size_t operator[](std::size_t i) const { return first + i * step; }
  constexpr std::size_t front() const { return first; }
  constexpr std::size_t back() const { return first + (count - 1) * step; }

  constexpr bool contains(std::size_t value) const {
    if (count == 0 || value < first) return false;
    const std::size_t offset = value - first;
    return offset % step == 0 && offset / step < count;
  }

  /// Position of value inside the progression; value must be a member.
  constexpr std::size_t ordinal(std::size_t value) const { return (value - first) / step; }

  auto values() const {
    return std::views::iota(std::size_t{0}, count) |
           std::views::transform([f = first, s = step](std::size_t i) { return f + i * s; });
  }

  friend constexpr bool operator==(const IndexSet&, const IndexSet&) = default;
};

struct StorageSizes {
  std::size_t ln = 0;
  std::size_t lk = 0;
  friend constexpr bool operator==(const StorageSizes&, const StorageSizes&) = default;
};

namespace detail {

// Inclusive progression first..last; empty when last < first.
constexpr IndexSet progression(std::size_t first, std::size_t step, std::size_t last) {
  if (last < first) return IndexSet{first, step, 0};
  return IndexSet{first, step, (last - first) / step + 1};
}

struct Row {
  IndexSet n;
  IndexSet k;
};

// Table rows evaluated at N. Callers guarantee N >= min_periodization(type),
// so none of the bounds below underflow.
constexpr Row row(SignalTypeId type, std::size_t N) {
  using detail::progression;
  const std::size_t h = N / 2;
  const std::size_t q = N / 4;
  switch (type) {
    case SignalTypeId::cx_tt: return {progression(0, 1, N - 1), progression(0, 1, N - 1)};
    case SignalTypeId::re_tt: return {progression(0, 1, N - 1), progression(0, 1, h)};
    case SignalTypeId::dc_tt: return {progression(0, 1, h), progression(0, 1, h)};
    case SignalTypeId::dc_et: return {progression(0, 2, h), progression(0, 1, q)};
    case SignalTypeId::dc_ot: return {progression(1, 2, h - 1), progression(0, 1, q - 1)};
    case SignalTypeId::dc_te: return {progression(0, 1, q), progression(0, 2, h)};
    case SignalTypeId::dc_to: return {progression(0, 1, q - 1), progression(1, 2, h - 1)};
    case SignalTypeId::dc_oe: return {progression(1, 2, q - 1), progression(0, 2, q - 2)};
    case SignalTypeId::dc_oo: return {progression(1, 2, q - 1), progression(1, 2, q - 1)};
    case SignalTypeId::dc_t1e: return {progression(0, 1, q - 1), progression(0, 2, h)};
    case SignalTypeId::dc_t1t: return {progression(0, 1, h - 1), progression(0, 1, h)};
    case SignalTypeId::ds_tt: return {progression(1, 1, h - 1), progression(1, 1, h - 1)};
    case SignalTypeId::ds_et: return {progression(2, 2, h - 2), progression(1, 1, q - 1)};
    // The even-step harmonic set ends at N/2-2 (lk = N/4-1).
    case SignalTypeId::ds_te: return {progression(1, 1, q - 1), progression(2, 2, h - 2)};
    case SignalTypeId::ds_to: return {progression(1, 1, q), progression(1, 2, h - 1)};
    case SignalTypeId::ds_ot: return {progression(1, 2, h - 1), progression(1, 1, q)};
    case SignalTypeId::ds_oe: return {progression(1, 2, q - 1), progression(2, 2, q)};
    case SignalTypeId::ds_oo: return {progression(1, 2, q - 1), progression(1, 2, q - 1)};
    case SignalTypeId::ds_t1o: return {progression(1, 1, q - 1), progression(1, 2, h - 1)};
    case SignalTypeId::ds_e1o: return {IndexSet{q, 1, 1}, IndexSet{1, 1, 1}};
  }
  return {};
}

// 0-based slot of time index n, assuming n is in sto_n(type, N).
constexpr std::size_t slot_time_unchecked(SignalTypeId type, std::size_t n) {
  switch (type) {
    case SignalTypeId::cx_tt:
    case SignalTypeId::re_tt:
    case SignalTypeId::dc_tt:
    case SignalTypeId::dc_te:
    case SignalTypeId::dc_to:
    case SignalTypeId::dc_t1e:
    case SignalTypeId::dc_t1t: return n;
    case SignalTypeId::dc_et: return n / 2;
    case SignalTypeId::dc_ot:
    case SignalTypeId::dc_oe:
    case SignalTypeId::dc_oo:
    case SignalTypeId::ds_ot:
    case SignalTypeId::ds_oe:
    case SignalTypeId::ds_oo: return (n - 1) / 2;
    case SignalTypeId::ds_tt:
    case SignalTypeId::ds_te:
    case SignalTypeId::ds_to:
    case SignalTypeId::ds_t1o: return n - 1;
    case SignalTypeId::ds_et: return n / 2 - 1;
    case SignalTypeId::ds_e1o: return 0;
  }
  return 0;
}

// 0-based slot of harmonic k, assuming k is in sto_k(type, N).
constexpr std::size_t slot_freq_unchecked(SignalTypeId type, std::size_t k) {
  switch (type) {
    case SignalTypeId::cx_tt:
    case SignalTypeId::re_tt:
    case SignalTypeId::dc_tt:
    case SignalTypeId::dc_et:
    case SignalTypeId::dc_ot:
    case SignalTypeId::dc_t1t: return k;
    case SignalTypeId::dc_te:
    case SignalTypeId::dc_oe:
    case SignalTypeId::dc_t1e: return k / 2;
    case SignalTypeId::dc_to:
    case SignalTypeId::dc_oo:
    case SignalTypeId::ds_to:
    case SignalTypeId::ds_oo:
    case SignalTypeId::ds_t1o: return (k - 1) / 2;
    case SignalTypeId::ds_tt:
    case SignalTypeId::ds_et:
    case SignalTypeId::ds_ot: return k - 1;
    case SignalTypeId::ds_te:
    case SignalTypeId::ds_oe: return k / 2 - 1;
    case SignalTypeId::ds_e1o: return 0;
  }
  return 0;
}

}  // namespace detail

/// Smallest power-of-two periodization for which every index formula of the
/// type yields a non-empty, integral progression.
constexpr std::size_t min_periodization(SignalTypeId type) {
  switch (type) {
    case SignalTypeId::cx_tt:
    case SignalTypeId::re_tt:
    case SignalTypeId::dc_tt:
    case SignalTypeId::dc_t1t: return 2;
    case SignalTypeId::dc_et:
    case SignalTypeId::dc_ot:
    case SignalTypeId::dc_te:
    case SignalTypeId::dc_to:
    case SignalTypeId::dc_t1e:
    case SignalTypeId::ds_tt:
    case SignalTypeId::ds_to:
    case SignalTypeId::ds_ot:
    case SignalTypeId::ds_e1o: return 4;
    case SignalTypeId::dc_oe:
    case SignalTypeId::dc_oo:
    case SignalTypeId::ds_et:
    case SignalTypeId::ds_te:
    case SignalTypeId::ds_oe:
    case SignalTypeId::ds_oo:
    case SignalTypeId::ds_t1o: return 8;
  }
  return 0;
}

inline void require_valid_periodization(SignalTypeId type, std::size_t N) {
  if (!is_power_of_two(N)) {
    throw std::domain_error("periodization " + std::to_string(N) + " is not a power of two");
  }
  if (N < min_periodization(type)) {
    throw std::domain_error("periodization " + std::to_string(N) + " is below the minimum " +
                            std::to_string(min_periodization(type)) + " for " +
                            std::string(name(type)));
  }
}

inline IndexSet sto_n(SignalTypeId type, std::size_t N) {
  require_valid_periodization(type, N);
  return detail::row(type, N).n;
}

inline IndexSet sto_k(SignalTypeId type, std::size_t N) {
  require_valid_periodization(type, N);
  return detail::row(type, N).k;
}

/// ln and lk from the closed-form table columns.
inline StorageSizes storage_sizes(SignalTypeId type, std::size_t N) {
  require_valid_periodization(type, N);
  const std::size_t h = N / 2;
  const std::size_t q = N / 4;
  const std::size_t e = N / 8;
  switch (type) {
    case SignalTypeId::cx_tt: return {2 * N, 2 * N};
    case SignalTypeId::re_tt: return {N, N};
    case SignalTypeId::dc_tt: return {h + 1, h + 1};
    case SignalTypeId::dc_et: return {q + 1, q + 1};
    case SignalTypeId::dc_ot: return {q, q};
    case SignalTypeId::dc_te: return {q + 1, q + 1};
    case SignalTypeId::dc_to: return {q, q};
    case SignalTypeId::dc_oe: return {e, e};
    case SignalTypeId::dc_oo: return {e, e};
    case SignalTypeId::dc_t1e: return {q, q + 1};
    case SignalTypeId::dc_t1t: return {h, h + 1};
    case SignalTypeId::ds_tt: return {h - 1, h - 1};
    case SignalTypeId::ds_et: return {q - 1, q - 1};
    case SignalTypeId::ds_te: return {q - 1, q - 1};
    case SignalTypeId::ds_to: return {q, q};
    case SignalTypeId::ds_ot: return {q, q};
    case SignalTypeId::ds_oe: return {e, e};
    case SignalTypeId::ds_oo: return {e, e};
    case SignalTypeId::ds_t1o: return {q - 1, q};
    case SignalTypeId::ds_e1o: return {1, 1};
  }
  return {};
}

/// ln and lk recomputed from the cardinalities of sto_n and sto_k.
inline StorageSizes storage_sizes_from_cardinality(SignalTypeId type, std::size_t N) {
  const std::size_t cn = sto_n(type, N).size();
  const std::size_t ck = sto_k(type, N).size();
  switch (transform_of(type)) {
    case TransformKind::cdft: return {2 * cn, 2 * ck};
    case TransformKind::rdft: return {cn, 2 * (ck - 1)};
    default: return {cn, ck};
  }
}

/// Real cells reserved for one signal of the type: max(ln, lk).
inline std::size_t buffer_length(SignalTypeId type, std::size_t N) {
  const StorageSizes s = storage_sizes(type, N);
  return s.ln > s.lk ? s.ln : s.lk;
}

/// False exactly for the three types that store one linearly dependent
/// harmonic (lk = ln + 1).
constexpr bool ind_sto_k_equals_sto_k(SignalTypeId type) {
  return type != SignalTypeId::dc_t1e && type != SignalTypeId::dc_t1t &&
         type != SignalTypeId::ds_t1o;
}

inline std::size_t buffer_slot_time(SignalTypeId type, std::size_t N, std::size_t n) {
  if (!sto_n(type, N).contains(n)) {
    throw std::domain_error("time index " + std::to_string(n) + " is not stored by " +
                            std::string(name(type)));
  }
  return detail::slot_time_unchecked(type, n);
}

inline std::size_t buffer_slot_freq(SignalTypeId type, std::size_t N, std::size_t k) {
  if (!sto_k(type, N).contains(k)) {
    throw std::domain_error("harmonic " + std::to_string(k) + " is not stored by " +
                            std::string(name(type)));
  }
  return detail::slot_freq_unchecked(type, k);
}

}  // namespace qft

#endif  // QFT_SIGNAL_TYPES_HPP_
