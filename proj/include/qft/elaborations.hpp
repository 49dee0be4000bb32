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
// The basic elaborations shared by both QFT algorithms. Each has a forward
// phase on time samples and a backward phase on harmonics.
//
//   time-parity split        dc_tt, ds_tt, dc_t1t -> (even-n, odd-n) children
//   harmonic-parity split    dc_tt, dc_ot, ds_tt, ds_ot, dc_t1t -> (even-k, odd-k)
//   even-harmonic halving    dc_te, dc_oe, ds_te, ds_oe, dc_t1e -> periodization N/2
//   even-time halving        dc_et, ds_et -> periodization N/2
//   secant conversion        dc_to, ds_t1o, dc_oo, ds_oo -> even-k child
//
// The two halvings only relabel a buffer; their backward phase is the
// inverse relabel.

#ifndef QFT_ELABORATIONS_HPP_
#define QFT_ELABORATIONS_HPP_

#include <cstddef>
#include <string>
#include <utility>

#include "qft/context.hpp"
#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"

namespace qft {

namespace detail {

[[noreturn]] inline void no_dispatch(std::string_view elaboration, SignalTypeId mother) {
  throw dispatch_error(std::string(elaboration) + " does not apply to " + std::string(name(mother)));
}

}  // namespace detail

using SignalTypePair = std::pair<SignalTypeId, SignalTypeId>;

/// (even-n child, odd-n child).
inline SignalTypePair time_parity_children(SignalTypeId mother) {
  using enum SignalTypeId;
  switch (mother) {
    case dc_tt:
    case dc_t1t: return {dc_et, dc_ot};
    case ds_tt: return {ds_et, ds_ot};
    default: detail::no_dispatch("time-parity split", mother);
  }
}

/// (even-k child, odd-k child).
inline SignalTypePair harmonic_parity_children(SignalTypeId mother) {
  using enum SignalTypeId;
  switch (mother) {
    case dc_tt:
    case dc_t1t: return {dc_te, dc_to};
    case dc_ot: return {dc_oe, dc_oo};
    case ds_tt: return {ds_te, ds_to};
    case ds_ot: return {ds_oe, ds_oo};
    default: detail::no_dispatch("harmonic-parity split", mother);
  }
}

inline SignalTypeId even_harmonic_halving_target(SignalTypeId mother) {
  using enum SignalTypeId;
  switch (mother) {
    case dc_te: return dc_tt;
    case dc_oe: return dc_ot;
    case ds_te: return ds_tt;
    case ds_oe: return ds_ot;
    case dc_t1e: return dc_t1t;
    default: detail::no_dispatch("even-harmonic halving", mother);
  }
}

inline SignalTypeId even_time_halving_target(SignalTypeId mother) {
  using enum SignalTypeId;
  switch (mother) {
    case dc_et: return dc_tt;
    case ds_et: return ds_tt;
    default: detail::no_dispatch("even-time halving", mother);
  }
}

inline SignalTypeId secant_target(SignalTypeId mother) {
  using enum SignalTypeId;
  switch (mother) {
    case dc_to: return dc_t1e;
    case ds_t1o: return ds_te;
    case dc_oo: return dc_oe;
    case ds_oo: return ds_oe;
    default: detail::no_dispatch("secant conversion", mother);
  }
}

template <typename T>
struct ChildPair {
  Signal<T> even;
  Signal<T> odd;
};

// Time-parity split ---------------------------------------------------------

/// Routes even-n samples to the first child and odd-n samples to the second.
/// Samples the mother does not store (s(N/2) of dc_t1t) are zero.
template <typename T>
ChildPair<T> split_time_parity_forward(const SignalView<T>& mother) {
  const auto [even_type, odd_type] = time_parity_children(mother.type);
  ChildPair<T> out{Signal<T>(even_type, mother.N), Signal<T>(odd_type, mother.N)};
  SignalView<T> even = out.even.view();
  SignalView<T> odd = out.odd.view();
  for (std::size_t n : sto_n(mother.type, mother.N).values()) {
    if (n % 2 == 0) {
      even.time(n) = mother.time(n);
    } else {
      odd.time(n) = mother.time(n);
    }
  }
  return out;
}

/// S(k) = E(k) + O(k), S(N/2-k) = E(k) - O(k), S(N/4) = E(N/4) for cosine
/// mothers; the sine case swaps the roles of E and O.
template <typename T>
void split_time_parity_backward(const SignalView<T>& even, const SignalView<T>& odd,
                                SignalView<T> mother, OpCounter& ops) {
  const std::size_t N = mother.N;
  const bool cosine = is_cosine(mother.type);
  const SignalView<T>& first = cosine ? even : odd;
  const SignalView<T>& second = cosine ? odd : even;
  for (std::size_t k : sto_k(mother.type, N).values()) {
    if (4 * k < N) {
      const T a = first.freq(k);
      const T b = second.freq(k);
      mother.freq(k) = counted_add(a, b, ops);
      mother.freq(N / 2 - k) = counted_sub(a, b, ops);
    } else if (4 * k == N) {
      mother.freq(k) = first.freq(k);
    }
  }
}

// Harmonic-parity split -----------------------------------------------------

/// Pairs n < N/4 with N/2 - n. For cosine mothers the even-k child takes the
/// sum and the odd-k child the difference; sine mothers swap them. The
/// unpaired n = N/4 goes to the even-k child (cosine) or the odd-k child
/// (sine). A partner the mother does not store is zero and still charged.
template <typename T>
ChildPair<T> split_harmonic_parity_forward(const SignalView<T>& mother, OpCounter& ops) {
  const std::size_t N = mother.N;
  const auto [even_type, odd_type] = harmonic_parity_children(mother.type);
  ChildPair<T> out{Signal<T>(even_type, N), Signal<T>(odd_type, N)};
  SignalView<T> even = out.even.view();
  SignalView<T> odd = out.odd.view();
  const bool cosine = is_cosine(mother.type);
  const IndexSet ns = sto_n(mother.type, N);
  for (std::size_t n : ns.values()) {
    if (4 * n < N) {
      const T a = mother.time(n);
      const T b = ns.contains(N / 2 - n) ? mother.time(N / 2 - n) : T{0};
      const T sum = counted_add(a, b, ops);
      const T diff = counted_sub(a, b, ops);
      (cosine ? even : odd).time(n) = sum;
      (cosine ? odd : even).time(n) = diff;
    } else if (4 * n == N) {
      (cosine ? even : odd).time(n) = mother.time(n);
    }
  }
  return out;
}

/// Interleave: even k from the first child, odd k from the second.
template <typename T>
void split_harmonic_parity_backward(const SignalView<T>& even, const SignalView<T>& odd,
                                    SignalView<T> mother) {
  for (std::size_t k : sto_k(mother.type, mother.N).values()) {
    mother.freq(k) = (k % 2 == 0) ? even.freq(k) : odd.freq(k);
  }
}

// Halvings ------------------------------------------------------------------

/// The child keeps every cell; harmonic 2k of the mother is harmonic k of
/// the child.
template <typename T>
void halve_even_harmonics(Signal<T>& signal) {
  signal.relabel(even_harmonic_halving_target(signal.type), signal.N / 2);
}

/// Time sample 2n of the mother is sample n of the child; spectra agree.
template <typename T>
void halve_even_time(Signal<T>& signal) {
  signal.relabel(even_time_halving_target(signal.type), signal.N / 2);
}

// Secant conversion ---------------------------------------------------------

/// u(n) = s(n) / (2 cos(theta n)). The factor 1/2 at n = 0 is charged as a
/// multiplication.
template <typename T>
Signal<T> secant_forward(const SignalView<T>& mother, Context<T>& ctx) {
  const std::size_t N = mother.N;
  Signal<T> out(secant_target(mother.type), N);
  SignalView<T> child = out.view();
  for (std::size_t n : sto_n(mother.type, N).values()) {
    const T factor = n == 0 ? T(0.5) : ctx.half_secant(n, N);
    child.time(n) = ctx.mul(mother.time(n), factor);
  }
  return out;
}

/// S(k) = S'(k-1) + S'(k+1) for odd k. A neighbour the child does not store
/// is a vanishing harmonic (sin(0), sin(pi n), or cos(pi n / 2) for odd n)
/// and costs nothing.
template <typename T>
void secant_backward(const SignalView<T>& child, SignalView<T> mother, OpCounter& ops) {
  const IndexSet child_k = sto_k(child.type, child.N);
  for (std::size_t k : sto_k(mother.type, mother.N).values()) {
    const bool has_lo = child_k.contains(k - 1);
    const bool has_hi = child_k.contains(k + 1);
    if (has_lo && has_hi) {
      mother.freq(k) = counted_add(child.freq(k - 1), child.freq(k + 1), ops);
    } else if (has_lo) {
      mother.freq(k) = child.freq(k - 1);
    } else if (has_hi) {
      mother.freq(k) = child.freq(k + 1);
    } else {
      mother.freq(k) = T{0};
    }
  }
}

}  // namespace qft

#endif  // QFT_ELABORATIONS_HPP_
