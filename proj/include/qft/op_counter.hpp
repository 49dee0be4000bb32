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

#ifndef QFT_OP_COUNTER_HPP_
#define QFT_OP_COUNTER_HPP_

#include <cstdint>

namespace qft {

/// Running totals of real additions (subtractions included) and real
/// multiplications. Sign flips and data moves are never charged.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;

  std::uint64_t flops() const { return adds + muls; }
  void reset() { adds = muls = 0; }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

template <typename T>
inline T counted_add(T a, T b, OpCounter& ops) {
  ++ops.adds;
  return a + b;
}

template <typename T>
inline T counted_sub(T a, T b, OpCounter& ops) {
  ++ops.adds;
  return a - b;
}

template <typename T>
inline T counted_mul(T a, T b, OpCounter& ops) {
  ++ops.muls;
  return a * b;
}

/// Division by two as an exponent shift; not charged.
template <typename T>
inline T binary_halve(T a) {
  return a * T(0.5);
}

}  // namespace qft

#endif  // QFT_OP_COUNTER_HPP_
