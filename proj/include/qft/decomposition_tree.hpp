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
// Decomposition trees and their storage balance.

#ifndef QFT_DECOMPOSITION_TREE_HPP_
#define QFT_DECOMPOSITION_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qft/signal_types.hpp"
#include "qft/transforms.hpp"
#include "qft/tree_recorder.hpp"

namespace qft {

/// Runs the algorithm on a zero signal of the root type and records every
/// signal it creates. Roots: cx_tt, re_tt, dc_tt, ds_tt.
inline TreeRecorder decomposition_tree(Algorithm algorithm, SignalTypeId root, std::size_t N) {
  using enum SignalTypeId;
  if (root != cx_tt && root != re_tt && root != dc_tt && root != ds_tt) {
    throw std::invalid_argument("tree root must be cx_tt, re_tt, dc_tt or ds_tt, got " +
                                std::string(name(root)));
  }
  require_valid_periodization(root, N);
  TreeRecorder tree;
  std::vector<double> cells(buffer_length(root, N), 0.0);
  Plan<double>(algorithm, N).execute(SignalView<double>(root, N, cells), {.tree = &tree});
  return tree;
}

/// One line per signal in creation order, indented by level:
///   s_{2,1_dc_tt} N=8
inline std::string format_tree(const TreeRecorder& tree) {
  std::string out;
  for (const TreeNode& node : tree.nodes()) {
    out.append(2 * (node.level - 1), ' ');
    out += node.label();
    out += " N=" + std::to_string(node.N);
    out += '\n';
  }
  return out;
}

struct StorageBalance {
  std::string_view function;
  NodeId input;
  StorageSizes mother;
  StorageSizes children;  // summed over the signals handed on

  std::int64_t ln_growth() const {
    return static_cast<std::int64_t>(children.ln) - static_cast<std::int64_t>(mother.ln);
  }
  std::int64_t lk_growth() const {
    return static_cast<std::int64_t>(children.lk) - static_cast<std::int64_t>(mother.lk);
  }
};

inline std::vector<StorageBalance> storage_balance(const TreeRecorder& tree) {
  std::vector<StorageBalance> out;
  out.reserve(tree.frames().size());
  for (const FunctionFrame& f : tree.frames()) {
    const TreeNode& in = tree.node(f.input);
    StorageBalance b{f.function, f.input, storage_sizes(in.type, in.N), {}};
    for (NodeId id : f.outputs) {
      const TreeNode& c = tree.node(id);
      const StorageSizes s = storage_sizes(c.type, c.N);
      b.children.ln += s.ln;
      b.children.lk += s.lk;
    }
    out.push_back(b);
  }
  return out;
}

/// Expected growth: one cell in each domain for dct_to_cla, none elsewhere.
inline std::int64_t expected_storage_growth(std::string_view function) {
  return function == "dct_to_cla" ? 1 : 0;
}

/// Frames whose growth differs from expected_storage_growth.
inline std::vector<StorageBalance> storage_violations(const TreeRecorder& tree) {
  std::vector<StorageBalance> bad;
  for (const StorageBalance& b : storage_balance(tree)) {
    const std::int64_t want = expected_storage_growth(b.function);
    if (b.ln_growth() != want || b.lk_growth() != want) bad.push_back(b);
  }
  return bad;
}

}  // namespace qft

#endif  // QFT_DECOMPOSITION_TREE_HPP_
