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

#ifndef QFT_SIGNAL_VIEW_HPP_
#define QFT_SIGNAL_VIEW_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qft/signal_types.hpp"

namespace qft {

/// Non-owning signal: a typed, periodized window onto real cells laid out by
/// the buffer slot maps. Time samples and harmonics share the same cells;
/// a transform overwrites the former with the latter.
template <typename T>
struct SignalView {
  SignalTypeId type;
  std::size_t N;
  std::span<T> cells;

  SignalView(SignalTypeId t, std::size_t n, std::span<T> c) : type(t), N(n), cells(c) {
    if (cells.size() != buffer_length(type, N)) {
      throw std::invalid_argument("buffer of " + std::to_string(cells.size()) + " cells for " +
                                  std::string(name(type)) + " N=" + std::to_string(N) +
                                  ", expected " + std::to_string(buffer_length(type, N)));
    }
  }

  T& time(std::size_t n) { return cells[detail::slot_time_unchecked(type, n)]; }
  T& freq(std::size_t k) { return cells[detail::slot_freq_unchecked(type, k)]; }
  T time(std::size_t n) const { return cells[detail::slot_time_unchecked(type, n)]; }
  T freq(std::size_t k) const { return cells[detail::slot_freq_unchecked(type, k)]; }
};

/// Owning counterpart used for children created by the elaborations.
template <typename T>
struct Signal {
  SignalTypeId type;
  std::size_t N;
  std::vector<T> cells;

  Signal(SignalTypeId t, std::size_t n) : type(t), N(n), cells(buffer_length(t, n), T{0}) {}

  SignalView<T> view() { return SignalView<T>(type, N, std::span<T>(cells)); }

  /// Reinterprets the cells as another type and periodization with the same
  /// buffer length (the halving and relabeling elaborations).
  void relabel(SignalTypeId t, std::size_t n) {
    if (buffer_length(t, n) != cells.size()) {
      throw std::logic_error("relabel to " + std::string(name(t)) + " changes buffer length");
    }
    type = t;
    N = n;
  }
};

}  // namespace qft

#endif  // QFT_SIGNAL_VIEW_HPP_
