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
// Records every signal created by a recursion together with the signals each
// function hands on to further calls.
//
// Naming: s_{L,P_[A_|B_]type}. L is the decomposition level and P the
// position inside the level, both 1-based. A decomposition creates children
// at L+1 with fresh positions; a conversion (halving, secant) keeps L and P.
// The letter marks a periodization N/2 (A) or N/4 (B) relative to the input
// of the function that created the signal.

#ifndef QFT_TREE_RECORDER_HPP_
#define QFT_TREE_RECORDER_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qft/signal_types.hpp"

namespace qft {

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

struct TreeNode {
  enum class Origin : std::uint8_t { root, decomposition, conversion };

  SignalTypeId type;
  std::size_t N;
  std::size_t level;
  std::size_t position;
  char letter;  // 'A', 'B' or 0
  Origin origin;
  NodeId parent;

  std::string label() const {
    std::string out = "s_{" + std::to_string(level) + "," + std::to_string(position) + "_";
    if (letter != 0) {
      out += letter;
      out += '_';
    }
    out += name(type);
    out += '}';
    return out;
  }
};

/// One call of a recursive function: its input and the signals passed on.
struct FunctionFrame {
  std::string_view function;
  NodeId input;
  std::vector<NodeId> outputs;
};

class TreeRecorder {
 public:
  NodeId root(SignalTypeId type, std::size_t N) {
    return push({type, N, 1, next_position(1), 0, TreeNode::Origin::root, kNoNode});
  }

  NodeId child(NodeId parent, SignalTypeId type, std::size_t N, std::size_t function_N) {
    const std::size_t level = node(parent).level + 1;
    return push({type, N, level, next_position(level), letter_for(N, function_N),
                 TreeNode::Origin::decomposition, parent});
  }

  NodeId convert(NodeId from, SignalTypeId type, std::size_t N, std::size_t function_N) {
    const TreeNode& src = node(from);
    return push({type, N, src.level, src.position, letter_for(N, function_N),
                 TreeNode::Origin::conversion, from});
  }

  void frame(std::string_view function, NodeId input, std::initializer_list<NodeId> outputs) {
    frames_.push_back({function, input, std::vector<NodeId>(outputs)});
  }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::vector<FunctionFrame>& frames() const { return frames_; }
  const TreeNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }

 private:
  static char letter_for(std::size_t N, std::size_t function_N) {
    if (2 * N == function_N) return 'A';
    if (4 * N == function_N) return 'B';
    return 0;
  }

  std::size_t next_position(std::size_t level) {
    if (level_counts_.size() <= level) level_counts_.resize(level + 1, 0);
    return ++level_counts_[level];
  }

  NodeId push(const TreeNode& node) {
    nodes_.push_back(node);
    return static_cast<NodeId>(nodes_.size() - 1);
  }

  std::vector<TreeNode> nodes_;
  std::vector<FunctionFrame> frames_;
  std::vector<std::size_t> level_counts_;
};

}  // namespace qft

#endif  // QFT_TREE_RECORDER_HPP_
