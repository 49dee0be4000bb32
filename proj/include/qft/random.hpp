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
// Counter-based uniform samples: the value at (seed, trial, n, component) is
// a pure function of those four integers, built from the SplitMix64 finalizer.

#ifndef QFT_RANDOM_HPP_
#define QFT_RANDOM_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qft {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform in the open interval (-0.5, 0.5).
constexpr double uniform_centered(std::uint64_t seed, std::uint64_t trial, std::uint64_t n,
                                  std::uint64_t component) {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) + trial) + 2 * n + component);
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53 - 0.5;
}

/// Complex signal with real and imaginary parts drawn from (-0.5, 0.5).
inline std::vector<std::complex<double>> random_signal(std::size_t N, std::uint64_t seed,
                                                       std::uint64_t trial) {
  std::vector<std::complex<double>> s(N);
  for (std::size_t n = 0; n < N; ++n) {
    s[n] = {uniform_centered(seed, trial, n, 0), uniform_centered(seed, trial, n, 1)};
  }
  return s;
}

/// Real signal of the given length drawn from (-0.5, 0.5).
inline std::vector<double> random_real_signal(std::size_t length, std::uint64_t seed,
                                              std::uint64_t trial) {
  std::vector<double> s(length);
  for (std::size_t n = 0; n < length; ++n) s[n] = uniform_centered(seed, trial, n, 0);
  return s;
}

}  // namespace qft

#endif  // QFT_RANDOM_HPP_
