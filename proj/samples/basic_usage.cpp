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
// Transforms a short complex signal with both QFT variants, prints the
// spectrum, the operation counts and the top of the improved decomposition
// tree.

#include <complex>
#include <cstdio>
#include <iostream>
#include <vector>

#include "qft/qft.hpp"

int main() {
  constexpr std::size_t kN = 16;
  std::vector<std::complex<double>> signal(kN);
  for (std::size_t n = 0; n < kN; ++n) {
    signal[n] = {static_cast<double>(n % 5) - 2.0, 0.25 * static_cast<double>(n % 3)};
  }

  for (qft::Algorithm algorithm : {qft::Algorithm::classical, qft::Algorithm::improved}) {
    qft::OpCounter ops;
    qft::TrigAccessLog trig;
    const qft::Plan<double> plan(algorithm, kN);
    const auto spectrum = plan.cdft(signal, {.ops = &ops, .trig_log = &trig});

    std::printf("%s: %llu adds, %llu muls, %zu trig constants\n", qft::name(algorithm).data(),
                static_cast<unsigned long long>(ops.adds),
                static_cast<unsigned long long>(ops.muls), trig.size());
    for (std::size_t k = 0; k < 4; ++k) {
      std::printf("  S(%zu) = %+.6f %+.6fi\n", k, spectrum[k].real(), spectrum[k].imag());
    }
  }

  const auto exact = qft::cdft_naive<double>(signal);
  std::printf("naive:     S(1) = %+.6f %+.6fi\n", exact[1].real(), exact[1].imag());

  const qft::TreeRecorder tree =
      qft::decomposition_tree(qft::Algorithm::improved, qft::SignalTypeId::re_tt, 8);
  std::cout << "\nimproved decomposition tree, re_tt N=8:\n" << qft::format_tree(tree);
  return 0;
}
