// Copyright 2026 The Antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANTIMAGIC_COMPOSITION_HPP_
#define ANTIMAGIC_COMPOSITION_HPP_

#include "antimagic/labeling.hpp"
#include "antimagic/spider.hpp"
#include "antimagic/spider_tree.hpp"

namespace antimagic {

// Attaches a new pendant edge to every vertex of degree `degree`. The new
// edges take labels 1..|V_k| in ascending order of the old vertex sums and
// every old label moves up by |V_k|. Old vertex and edge ids are kept; new
// ones are appended in the order of the old vertex ids.
//
// Throws PreconditionError if the input is not strongly antimagic or has no
// vertex of that degree.
LabeledTree attach_pendants_to_degree_class(const LabeledTree& input,
                                            int degree);

// attach_pendants_to_degree_class(input, 1).
LabeledTree extend_leaves(const LabeledTree& input);

// A labeled double spider whose hubs are known by id. Produced while undoing
// reductions, where the tree no longer follows materialize_tree's layout.
struct LabeledSpiderTree {
  LabeledTree labeled;
  VertexId left_hub = 0;
  VertexId right_hub = 0;
};

// Hangs a new unit path on one hub. The new edge gets label 1 and every old
// label moves up by one.
//
// Side::kRight requires deg(v_l) >= deg(v_r) > 3 after the insertion.
// Side::kLeft requires deg(v_l) + 1 > deg(v_r) >= 3 and
// phi(v_l) > phi(v_r) before it. Both require a strongly antimagic input.
LabeledSpiderTree insert_unit_path(const LabeledSpiderTree& input, Side side);

// Shortens every pendant path by one edge. Throws PreconditionError if a
// pendant path has length one.
CanonicalDoubleSpider delete_leaf_level(const CanonicalDoubleSpider& spider);

}  // namespace antimagic

#endif  // ANTIMAGIC_COMPOSITION_HPP_
