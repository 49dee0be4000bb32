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
// Accuracy protocol: random complex inputs with components in (-0.5, 0.5),
// CDFT in a working precision, brute-force CDFT in a wider oracle precision
// on the same (rounded) inputs, relative rms error averaged over trials.

#ifndef QFT_ACCURACY_HPP_
#define QFT_ACCURACY_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "qft/random.hpp"
#include "qft/reference.hpp"
#include "qft/transforms.hpp"
#include "qft/trig_table.hpp"

namespace qft {

/// ||approx - exact||_2 / ||exact||_2.
template <typename T>
T relative_rms_error(std::span<const std::complex<T>> approx, std::span<const std::complex<T>> exact) {
  if (approx.size() != exact.size()) {
    throw std::invalid_argument("relative_rms_error: length mismatch");
  }
  T num{0};
  T den{0};
  for (std::size_t i = 0; i < exact.size(); ++i) {
    num += std::norm(approx[i] - exact[i]);
    den += std::norm(exact[i]);
  }
  if (den == T{0}) throw std::domain_error("relative_rms_error: exact spectrum is all zero");
  return std::sqrt(num / den);
}

struct AccuracyConfig {
  std::vector<std::size_t> sizes;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  TrigPipeline pipeline = TrigPipeline::two_tier;
  std::vector<Algorithm> algorithms = {Algorithm::classical, Algorithm::improved};
};

struct AccuracyRow {
  Algorithm algorithm;
  std::size_t N;
  std::size_t trials;
  double mean_error;
};

/// Working precision W, oracle precision O (O strictly wider than W).
template <typename W = float, typename O = double>
std::vector<AccuracyRow> accuracy_experiment(const AccuracyConfig& config) {
  static_assert(sizeof(O) > sizeof(W), "oracle precision must be wider than working precision");
  if (config.trials == 0) throw std::invalid_argument("accuracy experiment needs trials >= 1");
  std::vector<AccuracyRow> rows;
  for (std::size_t N : config.sizes) {
    if (!is_power_of_two(N) || N < 2) {
      throw std::domain_error("accuracy experiment: invalid N " + std::to_string(N));
    }
    std::vector<Plan<W>> plans;
    for (Algorithm a : config.algorithms) plans.emplace_back(a, N, config.pipeline);
    std::vector<double> total(plans.size(), 0.0);

    std::vector<std::complex<W>> input(N);
    std::vector<std::complex<O>> widened(N);
    std::vector<std::complex<O>> result(N);
    for (std::size_t t = 0; t < config.trials; ++t) {
      const std::vector<std::complex<double>> s = random_signal(N, config.seed, t);
      for (std::size_t n = 0; n < N; ++n) {
        input[n] = {static_cast<W>(s[n].real()), static_cast<W>(s[n].imag())};
        widened[n] = {static_cast<O>(input[n].real()), static_cast<O>(input[n].imag())};
      }
      const std::vector<std::complex<O>> exact = cdft_naive<O>(widened);
      for (std::size_t p = 0; p < plans.size(); ++p) {
        const std::vector<std::complex<W>> approx = plans[p].cdft(input);
        for (std::size_t k = 0; k < N; ++k) {
          result[k] = {static_cast<O>(approx[k].real()), static_cast<O>(approx[k].imag())};
        }
        total[p] += static_cast<double>(relative_rms_error<O>(result, exact));
      }
    }
    for (std::size_t p = 0; p < plans.size(); ++p) {
      rows.push_back({config.algorithms[p], N, config.trials,
                      total[p] / static_cast<double>(config.trials)});
    }
  }
  return rows;
}

inline void write_accuracy_csv(std::ostream& out, const std::vector<AccuracyRow>& rows) {
  out << "algorithm,N,trials,mean_rel_rms_error\n";
  char buf[32];
  for (const AccuracyRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.3g", r.mean_error);
    out << name(r.algorithm) << ',' << r.N << ',' << r.trials << ',' << buf << '\n';
  }
}

}  // namespace qft

#endif  // QFT_ACCURACY_HPP_
