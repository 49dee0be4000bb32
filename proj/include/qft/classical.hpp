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
// Classical QFT: dct_cla, dst_cla, dct_to_cla and dst_to_cla. The CDFT and
// RDFT front ends are shared with the improved algorithm (real_factor.hpp).
//
// Every function takes a view whose cells hold the time samples on entry and
// the harmonics on exit, plus the tree node naming the view.

#ifndef QFT_CLASSICAL_HPP_
#define QFT_CLASSICAL_HPP_

#include <cstddef>

#include "qft/context.hpp"
#include "qft/elaborations.hpp"
#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"

namespace qft::classical {

template <typename T>
void dct_to(SignalView<T> v, Context<T>& ctx, NodeId node);
template <typename T>
void dst_to(SignalView<T> v, Context<T>& ctx, NodeId node);

/// dct_cla on dc_tt or dst_cla on ds_tt: harmonic-parity split, even child
/// halved and recursed, odd child handed to the matching *_to function.
template <typename T>
void tt(SignalView<T> v, Context<T>& ctx, NodeId node) {
  const std::size_t N = v.N;
  const bool cosine = is_cosine(v.type);
  if (cosine && N == 2) {
    const T a = v.time(0);
    const T b = v.time(1);
    v.freq(0) = ctx.add(a, b);
    v.freq(1) = ctx.sub(a, b);
    return;
  }
  if (!cosine && N == 4) return;  // S(1) = s(1)

  ChildPair<T> ch = split_harmonic_parity_forward(v, ctx.ops());
  const SignalTypeId even_type = ch.even.type;
  const NodeId even_node = ctx.child(node, even_type, N, N);
  const NodeId odd_node = ctx.child(node, ch.odd.type, N, N);
  halve_even_harmonics(ch.even);
  const NodeId half_node = ctx.convert(even_node, ch.even.type, N / 2, N);
  ctx.frame(cosine ? "dct_cla" : "dst_cla", node, {half_node, odd_node});

  tt(ch.even.view(), ctx, half_node);
  if (cosine) {
    dct_to(ch.odd.view(), ctx, odd_node);
  } else {
    dst_to(ch.odd.view(), ctx, odd_node);
  }

  ch.even.relabel(even_type, N);
  split_harmonic_parity_backward(ch.even.view(), ch.odd.view(), v);
}

/// dct_to_cla on dc_to.
template <typename T>
void dct_to(SignalView<T> v, Context<T>& ctx, NodeId node) {
  const std::size_t N = v.N;
  if (N == 4) return;  // S(1) = s(0)
  if (N == 8) {
    const T p = ctx.mul(v.time(1), ctx.half_secant(1, 8));
    const T s0 = v.time(0);
    v.freq(1) = ctx.add(s0, p);
    v.freq(3) = ctx.sub(s0, p);
    return;
  }

  Signal<T> conv = secant_forward(v, ctx);
  const NodeId conv_node = ctx.convert(node, conv.type, N, N);
  halve_even_harmonics(conv);
  const NodeId half_node = ctx.convert(conv_node, conv.type, N / 2, N);

  ChildPair<T> ch = split_harmonic_parity_forward(conv.view(), ctx.ops());
  const SignalTypeId even_type = ch.even.type;
  const NodeId even_node = ctx.child(half_node, even_type, N / 2, N);
  const NodeId odd_node = ctx.child(half_node, ch.odd.type, N / 2, N);
  halve_even_harmonics(ch.even);
  const NodeId quarter_node = ctx.convert(even_node, ch.even.type, N / 4, N);
  ctx.frame("dct_to_cla", node, {odd_node, quarter_node});

  tt(ch.even.view(), ctx, quarter_node);
  dct_to(ch.odd.view(), ctx, odd_node);

  ch.even.relabel(even_type, N / 2);
  split_harmonic_parity_backward(ch.even.view(), ch.odd.view(), conv.view());
  conv.relabel(SignalTypeId::dc_t1e, N);
  secant_backward(conv.view(), v, ctx.ops());
}

/// dst_to_cla on ds_to. The sample n = N/4 is split off as a ds_e1o leaf
/// whose only harmonic S(1) = s(N/4) enters every odd k with sign
/// (-1)^((k-1)/2).
template <typename T>
void dst_to(SignalView<T> v, Context<T>& ctx, NodeId node) {
  using enum SignalTypeId;
  const std::size_t N = v.N;
  if (N == 4) return;  // S(1) = s(1)

  Signal<T> rest(ds_t1o, N);
  Signal<T> leaf(ds_e1o, N);
  {
    SignalView<T> r = rest.view();
    for (std::size_t n = 1; n < N / 4; ++n) r.time(n) = v.time(n);
    leaf.view().time(N / 4) = v.time(N / 4);
  }
  const NodeId rest_node = ctx.child(node, ds_t1o, N, N);
  const NodeId leaf_node = ctx.child(node, ds_e1o, N, N);

  Signal<T> conv = secant_forward(rest.view(), ctx);
  const NodeId conv_node = ctx.convert(rest_node, conv.type, N, N);
  halve_even_harmonics(conv);
  const NodeId half_node = ctx.convert(conv_node, conv.type, N / 2, N);
  ctx.frame("dst_to_cla", node, {half_node, leaf_node});

  tt(conv.view(), ctx, half_node);

  conv.relabel(ds_te, N);
  SignalView<T> r = rest.view();
  secant_backward(conv.view(), r, ctx.ops());
  const T x = leaf.view().freq(1);
  for (std::size_t k = 1; k < N / 2; k += 2) {
    v.freq(k) = ((k - 1) / 2) % 2 == 0 ? ctx.add(r.freq(k), x) : ctx.sub(r.freq(k), x);
  }
}

/// Entry points for the shared real-factor front end.
struct Kernels {
  static constexpr const char* kName = "classical";
  template <typename T>
  static void tt(SignalView<T> v, Context<T>& ctx, NodeId node) {
    classical::tt(v, ctx, node);
  }
};

}  // namespace qft::classical

#endif  // QFT_CLASSICAL_HPP_
