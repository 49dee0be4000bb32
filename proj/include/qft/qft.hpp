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
// Umbrella header.

#ifndef QFT_QFT_HPP_
#define QFT_QFT_HPP_

#include "qft/accuracy.hpp"
#include "qft/classical.hpp"
#include "qft/context.hpp"
#include "qft/cost_model.hpp"
#include "qft/decomposition_tree.hpp"
#include "qft/elaborations.hpp"
#include "qft/improved.hpp"
#include "qft/op_counter.hpp"
#include "qft/random.hpp"
#include "qft/real_factor.hpp"
#include "qft/reference.hpp"
#include "qft/signal_types.hpp"
#include "qft/signal_view.hpp"
#include "qft/transforms.hpp"
#include "qft/tree_recorder.hpp"
#include "qft/trig_table.hpp"

#endif  // QFT_QFT_HPP_
