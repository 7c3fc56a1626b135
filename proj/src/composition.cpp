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

#include "antimagic/composition.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

void require_strong(const LabeledTree& input, const char* op) {
  if (!input.report.strong_ok) {
    throw PreconditionError(std::string(op) +
                            ": input labeling is not strongly antimagic");
  }
}

// Copy of `tree` with its labels shifted by `shift`.
std::pair<Tree, std::vector<int>> shifted_copy(const LabeledTree& input,
                                               int shift) {
  Tree tree = input.tree;
  std::vector<int> labels = input.labeling.labels;
  for (int& l : labels) l += shift;
  return {std::move(tree), std::move(labels)};
}

}  // namespace

LabeledTree attach_pendants_to_degree_class(const LabeledTree& input,
                                            int degree) {
  require_strong(input, "attach_pendants_to_degree_class");
  std::vector<VertexId> targets;
  for (VertexId v = 0; v < input.tree.vertex_count(); ++v) {
    if (input.tree.degree(v) == degree) targets.push_back(v);
  }
  if (targets.empty()) {
    throw PreconditionError("attach_pendants_to_degree_class: no vertex of degree " +
                            std::to_string(degree));
  }
  std::vector<VertexId> by_sum = targets;
  std::stable_sort(by_sum.begin(), by_sum.end(), [&](VertexId x, VertexId y) {
    return input.report.sums[x] < input.report.sums[y];
  });
  std::vector<int> rank(input.tree.vertex_count(), 0);
  for (int r = 0; r < static_cast<int>(by_sum.size()); ++r) {
    rank[by_sum[r]] = r + 1;
  }

  const int count = static_cast<int>(targets.size());
  auto [tree, labels] = shifted_copy(input, count);
  for (VertexId v : targets) {
    const VertexId leaf = tree.add_vertex();
    tree.add_edge(v, leaf);
    labels.push_back(rank[v]);
  }
  return make_labeled_tree(std::move(tree), EdgeLabeling(std::move(labels)));
}

LabeledTree extend_leaves(const LabeledTree& input) {
  return attach_pendants_to_degree_class(input, 1);
}

LabeledSpiderTree insert_unit_path(const LabeledSpiderTree& input, Side side) {
  const LabeledTree& lt = input.labeled;
  require_strong(lt, "insert_unit_path");
  const int deg_l = lt.tree.degree(input.left_hub);
  const int deg_r = lt.tree.degree(input.right_hub);
  if (side == Side::kRight) {
    if (!(deg_l >= deg_r + 1 && deg_r + 1 > 3)) {
      throw PreconditionError(
          "insert_unit_path(right) needs deg(v_l) >= deg(v_r) > 3 afterwards");
    }
  } else {
    if (!(deg_l + 1 > deg_r && deg_r >= 3)) {
      throw PreconditionError(
          "insert_unit_path(left) needs deg(v_l) > deg(v_r) >= 3 afterwards");
    }
    if (!(lt.report.sums[input.left_hub] > lt.report.sums[input.right_hub])) {
      throw PreconditionError(
          "insert_unit_path(left) needs phi(v_l) > phi(v_r)");
    }
  }
  auto [tree, labels] = shifted_copy(lt, 1);
  const VertexId hub = side == Side::kLeft ? input.left_hub : input.right_hub;
  tree.add_edge(hub, tree.add_vertex());
  labels.push_back(1);
  return {make_labeled_tree(std::move(tree), EdgeLabeling(std::move(labels))),
          input.left_hub, input.right_hub};
}

CanonicalDoubleSpider delete_leaf_level(const CanonicalDoubleSpider& spider) {
  DoubleSpiderSpec shorter = spider.as_spec();
  for (auto* side : {&shorter.left_lengths, &shorter.right_lengths}) {
    for (int& len : *side) {
      if (len < 2) {
        throw PreconditionError("delete_leaf_level: " + spider.to_string() +
                                " has a unit pendant path");
      }
      --len;
    }
  }
  return canonicalize(shorter);
}

}  // namespace antimagic
