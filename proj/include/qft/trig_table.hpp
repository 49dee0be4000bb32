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
// Trigonometric constants used by the QFT recursions.
//
// Secant conversions at periodization N' <= N multiply time sample n by the
// half-secant 1/(2 cos(2 pi n / N')). Every such angle equals 2 pi m / N for
// m = n N / N', so one table keyed by m in [1, N/4) serves all levels.
// The improved algorithm additionally stores cos(2 pi / 8) for its N=8 base
// cases, kept under a separate key.

#ifndef QFT_TRIG_TABLE_HPP_
#define QFT_TRIG_TABLE_HPP_

#include <cmath>
#include <cstdint>
#include <compare>
#include <cstddef>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qft/signal_types.hpp"

namespace qft {

enum class Algorithm : std::uint8_t { classical, improved };

constexpr std::string_view name(Algorithm a) {
  return a == Algorithm::classical ? "classical" : "improved";
}

/// two_tier evaluates each constant in long double and rounds once to the
/// working type. single_tier evaluates directly in the working type.
enum class TrigPipeline : std::uint8_t { two_tier, single_tier };

struct TrigKey {
  enum class Kind : std::uint8_t { half_secant, base_cosine };
  Kind kind;
  std::size_t m;  // angle 2 pi m / N of the table; 1 for the base cosine

  friend auto operator<=>(const TrigKey&, const TrigKey&) = default;
};

/// Distinct constants read during one or more runs.
using TrigAccessLog = std::set<TrigKey>;

template <typename T>
class TrigTable {
 public:
  TrigTable(Algorithm algorithm, std::size_t N, TrigPipeline pipeline = TrigPipeline::two_tier)
      : algorithm_(algorithm), n_max_(N), pipeline_(pipeline) {
    if (!is_power_of_two(N)) {
      throw std::domain_error("trig table size " + std::to_string(N) + " is not a power of two");
    }
    const std::size_t count = N >= 8 ? N / 4 - 1 : 0;
    half_secant_.reserve(count);
    for (std::size_t m = 1; m <= count; ++m) half_secant_.push_back(evaluate_half_secant(m));
    has_base_cosine_ = algorithm == Algorithm::improved && N >= 8;
    if (has_base_cosine_) base_cosine_ = evaluate_base_cosine();
  }

  Algorithm algorithm() const { return algorithm_; }
  std::size_t periodization() const { return n_max_; }
  TrigPipeline pipeline() const { return pipeline_; }

  /// Number of stored constants: N/4 - 1 half-secants, plus one base cosine
  /// for the improved algorithm.
  std::size_t size() const { return half_secant_.size() + (has_base_cosine_ ? 1 : 0); }

  /// 1/(2 cos(2 pi n / N)) for 1 <= n < N/4 and N dividing the table size.
  T half_secant(std::size_t n, std::size_t N, TrigAccessLog* log = nullptr) const {
    if (N == 0 || N > n_max_ || n_max_ % N != 0) {
      throw std::domain_error("periodization " + std::to_string(N) +
                              " is not served by a table of size " + std::to_string(n_max_));
    }
    const std::size_t m = n * (n_max_ / N);
    if (m == 0 || m > half_secant_.size()) {
      throw std::domain_error("no half-secant for n=" + std::to_string(n) +
                              " N=" + std::to_string(N));
    }
    if (log != nullptr) log->insert({TrigKey::Kind::half_secant, m});
    return half_secant_[m - 1];
  }

  /// cos(2 pi / 8).
  T base_cosine(TrigAccessLog* log = nullptr) const {
    if (!has_base_cosine_) throw std::logic_error("table holds no base cosine");
    if (log != nullptr) log->insert({TrigKey::Kind::base_cosine, 1});
    return base_cosine_;
  }

 private:
  T evaluate_half_secant(std::size_t m) const {
    if (pipeline_ == TrigPipeline::two_tier) {
      const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(m) /
                                static_cast<long double>(n_max_);
      return static_cast<T>(1.0L / (2.0L * std::cos(angle)));
    }
    const T angle = T(2) * std::numbers::pi_v<T> * static_cast<T>(m) / static_cast<T>(n_max_);
    return T(1) / (T(2) * std::cos(angle));
  }

  T evaluate_base_cosine() const {
    if (pipeline_ == TrigPipeline::two_tier) {
      return static_cast<T>(std::cos(std::numbers::pi_v<long double> / 4.0L));
    }
    return std::cos(std::numbers::pi_v<T> / T(4));
  }

  Algorithm algorithm_;
  std::size_t n_max_;
  TrigPipeline pipeline_;
  std::vector<T> half_secant_;
  bool has_base_cosine_ = false;
  T base_cosine_{};
};

}  // namespace qft

#endif  // QFT_TRIG_TABLE_HPP_
