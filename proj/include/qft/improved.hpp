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
// Improved QFT: dct, dct_ot, dct_oo and their sine counterparts dst, dst_ot,
// dst_oo. Cosine and sine variants share one implementation; the signal types
// picked by the elaboration dispatch tables select the family.

#ifndef QFT_IMPROVED_HPP_
#define QFT_IMPROVED_HPP_

#include <cstddef>
#include <string_view>

#include "qft/context.hpp"
#include "qft/elaborations.hpp"
#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"

namespace qft::improved {

template <typename T>
void ot(SignalView<T> v, Context<T>& ctx, NodeId node);
template <typename T>
void oo(SignalView<T> v, Context<T>& ctx, NodeId node);

/// dct on dc_tt, dst on ds_tt: time-parity split, even child halved.
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

  ChildPair<T> ch = split_time_parity_forward(v);
  const SignalTypeId even_type = ch.even.type;
  const NodeId even_node = ctx.child(node, even_type, N, N);
  const NodeId odd_node = ctx.child(node, ch.odd.type, N, N);
  halve_even_time(ch.even);
  const NodeId half_node = ctx.convert(even_node, ch.even.type, N / 2, N);
  ctx.frame(cosine ? "dct" : "dst", node, {half_node, odd_node});

  tt(ch.even.view(), ctx, half_node);
  ot(ch.odd.view(), ctx, odd_node);

  ch.even.relabel(even_type, N);
  split_time_parity_backward(ch.even.view(), ch.odd.view(), v, ctx.ops());
}

namespace detail {

// Harmonic-parity split of a *_ot signal at periodization v.N, even child
// halved into *_ot at v.N/2, odd child *_oo at v.N. Shared by ot() and by
// oo() after its secant conversion.
template <typename T>
void split_odd_time(SignalView<T> v, Context<T>& ctx, NodeId node, std::size_t function_N,
                    std::string_view function, NodeId frame_input) {
  const std::size_t M = v.N;
  ChildPair<T> ch = split_harmonic_parity_forward(v, ctx.ops());
  const SignalTypeId even_type = ch.even.type;
  const NodeId even_node = ctx.child(node, even_type, M, function_N);
  const NodeId odd_node = ctx.child(node, ch.odd.type, M, function_N);
  halve_even_harmonics(ch.even);
  const NodeId half_node = ctx.convert(even_node, ch.even.type, M / 2, function_N);
  ctx.frame(function, frame_input, {half_node, odd_node});

  ot(ch.even.view(), ctx, half_node);
  oo(ch.odd.view(), ctx, odd_node);

  ch.even.relabel(even_type, M);
  split_harmonic_parity_backward(ch.even.view(), ch.odd.view(), v);
}

}  // namespace detail

/// dct_ot on dc_ot, dst_ot on ds_ot.
template <typename T>
void ot(SignalView<T> v, Context<T>& ctx, NodeId node) {
  if (v.N == 4) return;  // single sample s(1), single harmonic
  detail::split_odd_time(v, ctx, node, v.N, is_cosine(v.type) ? "dct_ot" : "dst_ot", node);
}

/// dct_oo on dc_oo, dst_oo on ds_oo: secant conversion to *_oe, halving to
/// *_ot at N/2, then the dct_ot chain.
template <typename T>
void oo(SignalView<T> v, Context<T>& ctx, NodeId node) {
  const std::size_t N = v.N;
  if (N == 8) {
    // cos(2 pi / 8) = sin(2 pi / 8)
    v.freq(1) = ctx.mul(v.time(1), ctx.base_cosine());
    return;
  }

  const SignalTypeId mother_type = v.type;
  Signal<T> conv = secant_forward(v, ctx);
  const SignalTypeId conv_type = conv.type;
  const NodeId conv_node = ctx.convert(node, conv_type, N, N);
  halve_even_harmonics(conv);
  const NodeId half_node = ctx.convert(conv_node, conv.type, N / 2, N);

  detail::split_odd_time(conv.view(), ctx, half_node, N,
                         is_cosine(mother_type) ? "dct_oo" : "dst_oo", node);

  conv.relabel(conv_type, N);
  secant_backward(conv.view(), v, ctx.ops());
}

/// Entry points for the shared real-factor front end.
struct Kernels {
  static constexpr const char* kName = "improved";
  template <typename T>
  static void tt(SignalView<T> v, Context<T>& ctx, NodeId node) {
    improved::tt(v, ctx, node);
  }
};

}  // namespace qft::improved

#endif  // QFT_IMPROVED_HPP_
