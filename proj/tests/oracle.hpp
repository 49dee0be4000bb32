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
// Independent long double oracle for the tests: direct per-term cosl/sinl
// sums over explicit (n, value) lists. Shares no code with the library's
// reference transforms.

#ifndef QFT_TESTS_ORACLE_HPP_
#define QFT_TESTS_ORACLE_HPP_

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Real = long double;
using Complex = std::complex<long double>;

inline constexpr Real kTwoPi = 6.283185307179586476925286766559005768L;

inline Real angle(std::size_t n, std::size_t k, std::size_t N) {
  return kTwoPi * static_cast<Real>((n * k) % N) / static_cast<Real>(N);
}

inline std::vector<Complex> dft(const std::vector<Complex>& s) {
  const std::size_t N = s.size();
  std::vector<Complex> out(N);
  for (std::size_t k = 0; k < N; ++k) {
    Complex acc = 0;
    for (std::size_t n = 0; n < N; ++n) {
      const Real a = angle(n, k, N);
      acc += s[n] * Complex(std::cos(a), -std::sin(a));
    }
    out[k] = acc;
  }
  return out;
}

/// sum over the listed samples of s(n) cos(2 pi n k / N), at each listed k.
inline std::vector<Real> cosine_sum(const std::vector<std::pair<std::size_t, Real>>& samples,
                                    const std::vector<std::size_t>& ks, std::size_t N) {
  std::vector<Real> out;
  for (std::size_t k : ks) {
    Real acc = 0;
    for (const auto& [n, v] : samples) acc += v * std::cos(angle(n, k, N));
    out.push_back(acc);
  }
  return out;
}

inline std::vector<Real> sine_sum(const std::vector<std::pair<std::size_t, Real>>& samples,
                                  const std::vector<std::size_t>& ks, std::size_t N) {
  std::vector<Real> out;
  for (std::size_t k : ks) {
    Real acc = 0;
    for (const auto& [n, v] : samples) acc += v * std::sin(angle(n, k, N));
    out.push_back(acc);
  }
  return out;
}

template <typename A, typename B>
long double relative_rms(const A& approx, const B& exact) {
  long double num = 0, den = 0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const Complex e(exact[i]);
    const Complex a(approx[i]);
    num += std::norm(a - e);
    den += std::norm(e);
  }
  return den == 0 ? std::sqrt(num) : std::sqrt(num / den);
}

}  // namespace oracle

#endif  // QFT_TESTS_ORACLE_HPP_
