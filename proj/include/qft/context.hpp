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

#ifndef QFT_CONTEXT_HPP_
#define QFT_CONTEXT_HPP_

#include <cstddef>
#include <initializer_list>
#include <string_view>

#include "qft/op_counter.hpp"
#include "qft/signal_types.hpp"
#include "qft/trig_table.hpp"
#include "qft/tree_recorder.hpp"

namespace qft {

/// Optional observers of a run. Null members are not recorded.
struct Instruments {
  OpCounter* ops = nullptr;
  TrigAccessLog* trig_log = nullptr;
  TreeRecorder* tree = nullptr;
};

/// Per-run state threaded through the recursive functions.
template <typename T>
class Context {
 public:
  Context(const TrigTable<T>& trig, Instruments instruments)
      : trig_(trig),
        ops_(instruments.ops != nullptr ? *instruments.ops : scratch_),
        log_(instruments.trig_log),
        tree_(instruments.tree) {}

  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  OpCounter& ops() { return ops_; }

  T add(T a, T b) { return counted_add(a, b, ops_); }
  T sub(T a, T b) { return counted_sub(a, b, ops_); }
  T mul(T a, T b) { return counted_mul(a, b, ops_); }

  T half_secant(std::size_t n, std::size_t N) const { return trig_.half_secant(n, N, log_); }
  T base_cosine() const { return trig_.base_cosine(log_); }

  bool tracing() const { return tree_ != nullptr; }

  NodeId root(SignalTypeId type, std::size_t N) {
    return tree_ != nullptr ? tree_->root(type, N) : kNoNode;
  }
  NodeId child(NodeId parent, SignalTypeId type, std::size_t N, std::size_t function_N) {
    return tree_ != nullptr ? tree_->child(parent, type, N, function_N) : kNoNode;
  }
  NodeId convert(NodeId from, SignalTypeId type, std::size_t N, std::size_t function_N) {
    return tree_ != nullptr ? tree_->convert(from, type, N, function_N) : kNoNode;
  }
  void frame(std::string_view function, NodeId input, std::initializer_list<NodeId> outputs) {
    if (tree_ != nullptr) tree_->frame(function, input, outputs);
  }

 private:
  const TrigTable<T>& trig_;
  OpCounter scratch_;
  OpCounter& ops_;
  TrigAccessLog* log_;
  TreeRecorder* tree_;
};

}  // namespace qft

#endif  // QFT_CONTEXT_HPP_
