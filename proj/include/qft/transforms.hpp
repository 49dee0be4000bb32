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
// Plan<T>: a trig table plus the algorithm choice, with CDFT, RDFT, DCT-0 and
// DST-0 entry points on plain sample vectors.

#ifndef QFT_TRANSFORMS_HPP_
#define QFT_TRANSFORMS_HPP_

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qft/classical.hpp"
#include "qft/context.hpp"
#include "qft/improved.hpp"
#include "qft/real_factor.hpp"
#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"
#include "qft/trig_table.hpp"

namespace qft {

/// Root signal type of a transform.
constexpr SignalTypeId root_type(TransformKind kind) {
  switch (kind) {
    case TransformKind::cdft: return SignalTypeId::cx_tt;
    case TransformKind::rdft: return SignalTypeId::re_tt;
    case TransformKind::dct0: return SignalTypeId::dc_tt;
    case TransformKind::dst0: return SignalTypeId::ds_tt;
  }
  return SignalTypeId::cx_tt;
}

template <typename T>
class Plan {
 public:
  Plan(Algorithm algorithm, std::size_t N, TrigPipeline pipeline = TrigPipeline::two_tier)
      : Plan(std::make_shared<const TrigTable<T>>(algorithm, N, pipeline)) {}

  explicit Plan(std::shared_ptr<const TrigTable<T>> table) : table_(std::move(table)) {
    if (!table_) throw std::invalid_argument("plan needs a trig table");
  }

  Algorithm algorithm() const { return table_->algorithm(); }
  std::size_t size() const { return table_->periodization(); }
  const TrigTable<T>& trig() const { return *table_; }

  /// Transforms the root signal in place. The view's type must be cx_tt,
  /// re_tt, dc_tt or ds_tt at the plan's periodization.
  void execute(SignalView<T> v, Instruments instruments = {}) const {
    if (v.N != size()) {
      throw std::invalid_argument("signal periodization " + std::to_string(v.N) +
                                  " differs from plan size " + std::to_string(size()));
    }
    require_valid_periodization(v.type, v.N);
    Context<T> ctx(*table_, instruments);
    const NodeId root = ctx.root(v.type, v.N);
    if (algorithm() == Algorithm::classical) {
      run<classical::Kernels>(v, ctx, root);
    } else {
      run<improved::Kernels>(v, ctx, root);
    }
  }

  /// N complex samples to N harmonics.
  std::vector<std::complex<T>> cdft(std::span<const std::complex<T>> s,
                                    Instruments instruments = {}) const {
    check_length(s.size(), size(), "cdft");
    std::vector<T> cells(2 * size());
    for (std::size_t n = 0; n < size(); ++n) {
      cells[2 * n] = s[n].real();
      cells[2 * n + 1] = s[n].imag();
    }
    execute(SignalView<T>(SignalTypeId::cx_tt, size(), cells), instruments);
    std::vector<std::complex<T>> out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = {cells[2 * k], cells[2 * k + 1]};
    return out;
  }

  /// N real samples to harmonics k = 0..N/2.
  std::vector<std::complex<T>> rdft(std::span<const T> s, Instruments instruments = {}) const {
    const std::size_t N = size();
    check_length(s.size(), N, "rdft");
    std::vector<T> cells(s.begin(), s.end());
    execute(SignalView<T>(SignalTypeId::re_tt, N, cells), instruments);
    std::vector<std::complex<T>> out(N / 2 + 1);
    out[0] = {cells[0], T{0}};
    out[N / 2] = {cells[N / 2], T{0}};
    for (std::size_t k = 1; k < N / 2; ++k) out[k] = {cells[k], cells[N - k]};
    return out;
  }

  /// Samples n = 0..N/2 to harmonics k = 0..N/2.
  std::vector<T> dct0(std::span<const T> s, Instruments instruments = {}) const {
    return real_transform(SignalTypeId::dc_tt, s, instruments);
  }

  /// Samples n = 1..N/2-1 to harmonics k = 1..N/2-1.
  std::vector<T> dst0(std::span<const T> s, Instruments instruments = {}) const {
    return real_transform(SignalTypeId::ds_tt, s, instruments);
  }

 private:
  template <typename Kernels>
  static void run(SignalView<T> v, Context<T>& ctx, NodeId root) {
    switch (v.type) {
      case SignalTypeId::cx_tt: qft::cdft<Kernels>(v, ctx, root); break;
      case SignalTypeId::re_tt: qft::rdft<Kernels>(v, ctx, root); break;
      case SignalTypeId::dc_tt:
      case SignalTypeId::ds_tt: Kernels::tt(v, ctx, root); break;
      default:
        throw dispatch_error("no transform entry point for " + std::string(name(v.type)));
    }
  }

  static void check_length(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
      throw std::invalid_argument(std::string(what) + " expects " + std::to_string(want) +
                                  " samples, got " + std::to_string(got));
    }
  }

  std::vector<T> real_transform(SignalTypeId type, std::span<const T> s,
                                Instruments instruments) const {
    const std::size_t N = size();
    require_valid_periodization(type, N);
    check_length(s.size(), sto_n(type, N).size(), name(type).data());
    std::vector<T> cells(s.begin(), s.end());
    execute(SignalView<T>(type, N, cells), instruments);
    return cells;
  }

  std::shared_ptr<const TrigTable<T>> table_;
};

}  // namespace qft

#endif  // QFT_TRANSFORMS_HPP_
