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
// CDFT and RDFT front ends common to both QFT algorithms.
//
// Cell layouts: cx_tt stores Re and Im of sample (or harmonic) j in cells 2j
// and 2j+1. re_tt stores sample n in cell n; its spectrum is half-complex,
// Re S(k) in cell k for k = 0..N/2 and Im S(k) in cell N-k for 0 < k < N/2.

#ifndef QFT_REAL_FACTOR_HPP_
#define QFT_REAL_FACTOR_HPP_

#include <cstddef>

#include "qft/context.hpp"
#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"

namespace qft {

/// RDFT via one DCT-0 of t(n) + t(N-n) and one DST-0 of t(n) - t(N-n):
/// Re S(k) = DCT(k), Im S(k) = -DST(k).
template <typename Kernels, typename T>
void rdft(SignalView<T> v, Context<T>& ctx, NodeId node) {
  using enum SignalTypeId;
  const std::size_t N = v.N;
  std::span<T> c = v.cells;
  if (N == 2) {
    const T a = c[0];
    const T b = c[1];
    c[0] = ctx.add(a, b);
    c[1] = ctx.sub(a, b);
    return;
  }

  Signal<T> even(dc_tt, N);
  Signal<T> odd(ds_tt, N);
  {
    SignalView<T> e = even.view();
    SignalView<T> o = odd.view();
    e.time(0) = c[0];
    e.time(N / 2) = c[N / 2];
    for (std::size_t n = 1; n < N / 2; ++n) {
      e.time(n) = ctx.add(c[n], c[N - n]);
      o.time(n) = ctx.sub(c[n], c[N - n]);
    }
  }
  const NodeId even_node = ctx.child(node, dc_tt, N, N);
  const NodeId odd_node = ctx.child(node, ds_tt, N, N);
  ctx.frame("rdft", node, {even_node, odd_node});

  Kernels::tt(even.view(), ctx, even_node);
  Kernels::tt(odd.view(), ctx, odd_node);

  const SignalView<T> e = even.view();
  const SignalView<T> o = odd.view();
  for (std::size_t k = 0; k <= N / 2; ++k) c[k] = e.freq(k);
  for (std::size_t k = 1; k < N / 2; ++k) c[N - k] = -o.freq(k);
}

/// CDFT via the RDFTs of the real and imaginary parts.
template <typename Kernels, typename T>
void cdft(SignalView<T> v, Context<T>& ctx, NodeId node) {
  using enum SignalTypeId;
  const std::size_t N = v.N;
  std::span<T> c = v.cells;
  if (N == 2) {
    const T ar = c[0], ai = c[1], br = c[2], bi = c[3];
    c[0] = ctx.add(ar, br);
    c[1] = ctx.add(ai, bi);
    c[2] = ctx.sub(ar, br);
    c[3] = ctx.sub(ai, bi);
    return;
  }

  Signal<T> re(re_tt, N);
  Signal<T> im(re_tt, N);
  for (std::size_t n = 0; n < N; ++n) {
    re.cells[n] = c[2 * n];
    im.cells[n] = c[2 * n + 1];
  }
  const NodeId re_node = ctx.child(node, re_tt, N, N);
  const NodeId im_node = ctx.child(node, re_tt, N, N);
  ctx.frame("cdft", node, {re_node, im_node});

  rdft<Kernels>(re.view(), ctx, re_node);
  rdft<Kernels>(im.view(), ctx, im_node);

  // S(k) = A(k) + i B(k), A and B the spectra of the real and imaginary parts.
  const std::vector<T>& a = re.cells;
  const std::vector<T>& b = im.cells;
  c[0] = a[0];
  c[1] = b[0];
  c[N] = a[N / 2];
  c[N + 1] = b[N / 2];
  for (std::size_t k = 1; k < N / 2; ++k) {
    const T ar = a[k], ai = a[N - k], br = b[k], bi = b[N - k];
    c[2 * k] = ctx.sub(ar, bi);
    c[2 * k + 1] = ctx.add(ai, br);
    c[2 * (N - k)] = ctx.add(ar, bi);
    c[2 * (N - k) + 1] = ctx.sub(br, ai);
  }
}

}  // namespace qft

#endif  // QFT_REAL_FACTOR_HPP_
