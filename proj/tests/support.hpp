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
// Test helpers: seeded typed signals and comparison against the long double
// oracle.

#ifndef QFT_TESTS_SUPPORT_HPP_
#define QFT_TESTS_SUPPORT_HPP_

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "qft/random.hpp"
#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"

namespace qft::testing {

inline Signal<double> random_typed(SignalTypeId type, std::size_t N, std::uint64_t seed) {
  Signal<double> s(type, N);
  const auto v = random_real_signal(s.cells.size(), seed, N);
  if (type == SignalTypeId::cx_tt || type == SignalTypeId::re_tt) {
    s.cells = v;
    return s;
  }
  SignalView<double> view = s.view();
  std::size_t i = 0;
  for (std::size_t n : sto_n(type, N).values()) view.time(n) = v[i++];
  return s;
}

/// Oracle spectrum of a DCT/DST-family signal at its stored harmonics.
inline std::vector<long double> oracle_spectrum(const SignalView<double>& v) {
  std::vector<std::pair<std::size_t, long double>> samples;
  for (std::size_t n : sto_n(v.type, v.N).values()) samples.emplace_back(n, v.time(n));
  std::vector<std::size_t> ks;
  for (std::size_t k : sto_k(v.type, v.N).values()) ks.push_back(k);
  return is_cosine(v.type) ? oracle::cosine_sum(samples, ks, v.N)
                           : oracle::sine_sum(samples, ks, v.N);
}

inline std::vector<double> stored_harmonics(const SignalView<double>& v) {
  std::vector<double> out;
  for (std::size_t k : sto_k(v.type, v.N).values()) out.push_back(v.freq(k));
  return out;
}

}  // namespace qft::testing

#endif  // QFT_TESTS_SUPPORT_HPP_
