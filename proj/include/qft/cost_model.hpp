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
// Predicted and measured operation counts.

#ifndef QFT_COST_MODEL_HPP_
#define QFT_COST_MODEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qft/op_counter.hpp"
#include "qft/random.hpp"
#include "qft/signal_types.hpp"
#include "qft/transforms.hpp"

namespace qft {

struct CostCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t flops() const { return adds + muls; }
  friend bool operator==(const CostCounts&, const CostCounts&) = default;
};

namespace detail {

inline std::uint64_t exact_div(std::int64_t numerator, std::int64_t denominator) {
  if (numerator < 0 || numerator % denominator != 0) {
    throw std::logic_error("cost formula is not a nonnegative integer");
  }
  return static_cast<std::uint64_t>(numerator / denominator);
}

inline CostCounts improved_formula(TransformKind kind, std::int64_t N, std::int64_t lg) {
  const std::int64_t nl = N * lg;
  switch (kind) {
    case TransformKind::cdft: return {exact_div(3 * nl - 3 * N + 4, 1), exact_div(nl - 3 * N + 4, 1)};
    case TransformKind::rdft:
      return {exact_div(3 * nl - 5 * N + 8, 2), exact_div(nl - 3 * N + 4, 2)};
    case TransformKind::dct0:
      return {exact_div(3 * nl - 7 * N + 4 * lg + 12, 4), exact_div(nl - 3 * N + 4, 4)};
    case TransformKind::dst0:
      return {exact_div(3 * nl - 7 * N - 4 * lg + 12, 4), exact_div(nl - 3 * N + 4, 4)};
  }
  return {};
}

// Classical closed forms; CDFT from the paper, the other three follow from
// the same recursion. Below the listed minima the classical recursion
// coincides with the improved one.
inline std::optional<CostCounts> classical_formula(TransformKind kind, std::int64_t N,
                                                   std::int64_t lg) {
  const std::int64_t nl = N * lg;
  switch (kind) {
    case TransformKind::cdft:
      if (N < 8) return std::nullopt;
      return CostCounts{exact_div(7 * nl - 8 * N, 2), exact_div(4 * nl - 11 * N + 8, 4)};
    case TransformKind::rdft:
      if (N < 8) return std::nullopt;
      return CostCounts{exact_div(7 * nl - 12 * N + 8, 4), exact_div(4 * nl - 11 * N + 8, 8)};
    case TransformKind::dct0:
      if (N < 8) return std::nullopt;
      return CostCounts{exact_div(3 * nl - 4 * N, 4), exact_div(2 * nl - 5 * N, 8)};
    case TransformKind::dst0:
      return CostCounts{exact_div(nl - 3 * N + 4, 1), exact_div(nl - 3 * N + 4, 4)};
  }
  return std::nullopt;
}

}  // namespace detail

/// Smallest periodization accepted by the transform.
constexpr std::size_t min_transform_size(TransformKind kind) {
  return kind == TransformKind::dst0 ? 4 : 2;
}

inline CostCounts predicted_cost(Algorithm algorithm, TransformKind kind, std::size_t N) {
  if (!is_power_of_two(N) || N < min_transform_size(kind)) {
    throw std::domain_error("no cost prediction for " + std::string(name(kind)) +
                            " N=" + std::to_string(N));
  }
  const auto n = static_cast<std::int64_t>(N);
  const auto lg = static_cast<std::int64_t>(log2_exact(N));
  if (algorithm == Algorithm::classical) {
    if (auto c = detail::classical_formula(kind, n, lg)) return *c;
  }
  return detail::improved_formula(kind, n, lg);
}

/// Split-radix 3add/3mul CDFT counts for N = 4..2048, as published.
struct SplitRadixRow {
  std::size_t N;
  std::uint64_t adds;
  std::uint64_t muls;
  std::uint64_t flops;
};

inline constexpr std::array<SplitRadixRow, 10> kSplitRadixCdft = {{
    {4, 16, 0, 16},
    {8, 52, 4, 56},
    {16, 148, 20, 168},
    {32, 388, 68, 456},
    {64, 964, 196, 1160},
    {128, 2308, 516, 2824},
    {256, 5380, 1284, 6664},
    {512, 12292, 3076, 15368},
    {1024, 27652, 7172, 34824},
    {2048, 61444, 16388, 77832},
}};

inline std::optional<SplitRadixRow> split_radix_reference(std::size_t N) {
  for (const SplitRadixRow& row : kSplitRadixCdft) {
    if (row.N == N) return row;
  }
  return std::nullopt;
}

/// Number of input samples of a transform at periodization N.
inline std::size_t input_length(TransformKind kind, std::size_t N) {
  return sto_n(root_type(kind), N).size();
}

/// Instrumented run on a seeded random input; counts do not depend on it.
inline CostCounts measured_cost(Algorithm algorithm, TransformKind kind, std::size_t N,
                                std::uint64_t seed = 1, TrigAccessLog* trig_log = nullptr) {
  const SignalTypeId root = root_type(kind);
  require_valid_periodization(root, N);
  if (N < min_transform_size(kind)) throw std::domain_error("transform too small");
  std::vector<double> cells = random_real_signal(buffer_length(root, N), seed, 0);
  OpCounter ops;
  Plan<double>(algorithm, N).execute(SignalView<double>(root, N, cells),
                                     {.ops = &ops, .trig_log = trig_log});
  return {ops.adds, ops.muls};
}

/// Distinct trigonometric constants touched by one full CDFT.
inline std::size_t trig_footprint(Algorithm algorithm, std::size_t N) {
  TrigAccessLog log;
  measured_cost(algorithm, TransformKind::cdft, N, 1, &log);
  return log.size();
}

struct CostRow {
  Algorithm algorithm;
  TransformKind transform;
  std::size_t N;
  CostCounts predicted;
  CostCounts measured;

  bool matches() const { return predicted == measured; }
};

inline std::vector<CostRow> cost_table(const std::vector<Algorithm>& algorithms,
                                       TransformKind kind, std::size_t n_min, std::size_t n_max) {
  if (!is_power_of_two(n_min) || !is_power_of_two(n_max) || n_min > n_max) {
    throw std::domain_error("cost table range must be powers of two with n_min <= n_max");
  }
  std::vector<CostRow> rows;
  for (Algorithm a : algorithms) {
    for (std::size_t N = n_min; N <= n_max; N *= 2) {
      rows.push_back({a, kind, N, predicted_cost(a, kind, N), measured_cost(a, kind, N)});
    }
  }
  return rows;
}

inline void write_cost_csv(std::ostream& out, const std::vector<CostRow>& rows) {
  out << "algorithm,transform,N,adds_pred,adds_meas,muls_pred,muls_meas,flops_pred,flops_meas\n";
  for (const CostRow& r : rows) {
    out << name(r.algorithm) << ',' << name(r.transform) << ',' << r.N << ','
        << r.predicted.adds << ',' << r.measured.adds << ',' << r.predicted.muls << ','
        << r.measured.muls << ',' << r.predicted.flops() << ',' << r.measured.flops() << '\n';
  }
}

}  // namespace qft

#endif  // QFT_COST_MODEL_HPP_
