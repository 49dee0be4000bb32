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
// O(N^2) reference transforms. Each angle 2 pi j / N is evaluated once with
// the library cos and sin in long double and rounded to T; term n k reads
// entry n k mod N, so no recurrence error enters the oracle.

#ifndef QFT_REFERENCE_HPP_
#define QFT_REFERENCE_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"

namespace qft {

enum class Summation : std::uint8_t { plain, compensated };

namespace detail {

template <typename T>
struct UnitCircle {
  std::vector<T> cos;
  std::vector<T> sin;

  explicit UnitCircle(std::size_t N) : cos(N), sin(N) {
    for (std::size_t j = 0; j < N; ++j) {
      if ((4 * j) % N == 0) {  // quadrant boundaries are exact
        constexpr T c[4] = {1, 0, -1, 0};
        const std::size_t q = 4 * j / N;
        cos[j] = c[q];
        sin[j] = c[(q + 3) % 4];
        continue;
      }
      const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                                static_cast<long double>(N);
      cos[j] = static_cast<T>(std::cos(angle));
      sin[j] = static_cast<T>(std::sin(angle));
    }
  }
};

// Neumaier's variant of Kahan summation when compensated.
template <typename T>
class Accumulator {
 public:
  explicit Accumulator(Summation mode) : compensated_(mode == Summation::compensated) {}

  void add(T x) {
    if (!compensated_) {
      sum_ += x;
      return;
    }
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  T value() const { return sum_ + carry_; }

 private:
  bool compensated_;
  T sum_{0};
  T carry_{0};
};

inline void require_power_of_two(std::size_t N, std::size_t minimum, const char* what) {
  if (!is_power_of_two(N) || N < minimum) {
    throw std::domain_error(std::string(what) + ": invalid periodization " + std::to_string(N));
  }
}

}  // namespace detail

/// S(k) = sum_n s(n) e^{-i 2 pi n k / N}, k = 0..N-1.
template <typename T>
std::vector<std::complex<T>> cdft_naive(std::span<const std::complex<T>> s,
                                        Summation mode = Summation::plain) {
  const std::size_t N = s.size();
  if (N == 0) throw std::domain_error("cdft_naive: empty signal");
  const detail::UnitCircle<T> w(N);
  std::vector<std::complex<T>> out(N);
  for (std::size_t k = 0; k < N; ++k) {
    detail::Accumulator<T> re(mode), im(mode);
    for (std::size_t n = 0; n < N; ++n) {
      const std::size_t j = (n * k) % N;
      const T c = w.cos[j], si = w.sin[j];
      re.add(s[n].real() * c);
      re.add(s[n].imag() * si);
      im.add(s[n].imag() * c);
      im.add(-s[n].real() * si);
    }
    out[k] = {re.value(), im.value()};
  }
  return out;
}

/// Harmonics k = 0..N/2 of a real signal of length N.
template <typename T>
std::vector<std::complex<T>> rdft_naive(std::span<const T> s, Summation mode = Summation::plain) {
  const std::size_t N = s.size();
  detail::require_power_of_two(N, 2, "rdft_naive");
  const detail::UnitCircle<T> w(N);
  std::vector<std::complex<T>> out(N / 2 + 1);
  for (std::size_t k = 0; k <= N / 2; ++k) {
    detail::Accumulator<T> re(mode), im(mode);
    for (std::size_t n = 0; n < N; ++n) {
      const std::size_t j = (n * k) % N;
      re.add(s[n] * w.cos[j]);
      im.add(-s[n] * w.sin[j]);
    }
    out[k] = {re.value(), im.value()};
  }
  return out;
}

/// S(k) = sum_{n=0}^{N/2} s(n) cos(2 pi n k / N), k = 0..N/2. s holds n = 0..N/2.
template <typename T>
std::vector<T> dct0_naive(std::span<const T> s, std::size_t N, Summation mode = Summation::plain) {
  detail::require_power_of_two(N, 2, "dct0_naive");
  if (s.size() != N / 2 + 1) throw std::invalid_argument("dct0_naive: expected N/2+1 samples");
  const detail::UnitCircle<T> w(N);
  std::vector<T> out(N / 2 + 1);
  for (std::size_t k = 0; k <= N / 2; ++k) {
    detail::Accumulator<T> acc(mode);
    for (std::size_t n = 0; n <= N / 2; ++n) acc.add(s[n] * w.cos[(n * k) % N]);
    out[k] = acc.value();
  }
  return out;
}

/// S(k) = sum_{n=1}^{N/2-1} s(n) sin(2 pi n k / N), k = 1..N/2-1. s holds n = 1..N/2-1.
template <typename T>
std::vector<T> dst0_naive(std::span<const T> s, std::size_t N, Summation mode = Summation::plain) {
  detail::require_power_of_two(N, 4, "dst0_naive");
  if (s.size() != N / 2 - 1) throw std::invalid_argument("dst0_naive: expected N/2-1 samples");
  const detail::UnitCircle<T> w(N);
  std::vector<T> out(N / 2 - 1);
  for (std::size_t k = 1; k < N / 2; ++k) {
    detail::Accumulator<T> acc(mode);
    for (std::size_t n = 1; n < N / 2; ++n) acc.add(s[n - 1] * w.sin[(n * k) % N]);
    out[k - 1] = acc.value();
  }
  return out;
}

/// The view's transform summed over n in sto_n only and reported at each
/// k in sto_k, in increasing k. Real transforms have zero imaginary parts.
/// CDFT and RDFT views use the cell layouts of real_factor.hpp.
template <typename T>
std::vector<std::complex<T>> pruned_naive(const SignalView<T>& v,
                                          Summation mode = Summation::plain) {
  const std::size_t N = v.N;
  const IndexSet ns = sto_n(v.type, N);
  const IndexSet ks = sto_k(v.type, N);
  switch (transform_of(v.type)) {
    case TransformKind::cdft: {
      std::vector<std::complex<T>> s(N);
      for (std::size_t n = 0; n < N; ++n) s[n] = {v.cells[2 * n], v.cells[2 * n + 1]};
      return cdft_naive<T>(s, mode);
    }
    case TransformKind::rdft: return rdft_naive<T>(v.cells, mode);
    default: break;
  }
  const bool cosine = is_cosine(v.type);
  const detail::UnitCircle<T> w(N);
  std::vector<std::complex<T>> out;
  out.reserve(ks.size());
  for (std::size_t k : ks.values()) {
    detail::Accumulator<T> acc(mode);
    for (std::size_t n : ns.values()) {
      const std::size_t j = (n * k) % N;
      acc.add(v.time(n) * (cosine ? w.cos[j] : w.sin[j]));
    }
    out.emplace_back(acc.value(), T{0});
  }
  return out;
}

}  // namespace qft

#endif  // QFT_REFERENCE_HPP_
