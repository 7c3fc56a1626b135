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

#ifndef ANTIMAGIC_SPIDER_TREE_HPP_
#define ANTIMAGIC_SPIDER_TREE_HPP_

#include <map>
#include <optional>
#include <vector>

#include "antimagic/spider.hpp"
#include "antimagic/tree.hpp"

namespace antimagic {

enum class Side { kLeft, kRight };

// A materialized double spider. Vertex and edge ids follow address order:
// core vertices v_l = v_1, v_2, ..., v_{s+1} = v_r first, then the paths in
// family order R/odd, R/even, L/odd, L/even, L/unit. Each non-hub vertex is
// named after the edge joining it to its hub-side neighbour, so "R/odd/2/3"
// is the far endpoint of edge R/odd/2/3.
struct SpiderTree {
  CanonicalDoubleSpider spider;
  Tree tree;
  VertexId left_hub = 0;
  VertexId right_hub = 0;
  std::vector<EdgeAddress> address;  // indexed by EdgeId
  std::vector<EdgeId> core;          // e_1..e_s, starting at the left hub
  // Pendant paths indexed like spider.left_lengths / right_lengths, each
  // listed from the hub outward.
  std::vector<std::vector<EdgeId>> left_paths;
  std::vector<std::vector<EdgeId>> right_paths;

  std::optional<EdgeId> find(const EdgeAddress& a) const;
  // Throws InvalidInput for an address outside the instance.
  EdgeId edge_of(const EdgeAddress& a) const;

  std::map<EdgeAddress, EdgeId> index;
};

SpiderTree materialize_tree(const CanonicalDoubleSpider& spider);

}  // namespace antimagic

#endif  // ANTIMAGIC_SPIDER_TREE_HPP_
