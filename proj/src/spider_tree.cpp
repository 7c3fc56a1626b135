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

#include "antimagic/spider_tree.hpp"

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

struct PathSlot {
  int rank;    // index into the side's sorted length list
  int length;
  int family_index;
};

// Splits one side into its address families, preserving ascending order.
void split_side(const std::vector<int>& lengths, Side side,
                std::vector<PathSlot>& odd, std::vector<PathSlot>& even,
                std::vector<PathSlot>& unit) {
  for (int r = 0; r < static_cast<int>(lengths.size()); ++r) {
    const int len = lengths[r];
    std::vector<PathSlot>* target = nullptr;
    if (side == Side::kLeft && len == 1) {
      target = &unit;
    } else if (len % 2 == 1) {
      target = &odd;
    } else {
      target = &even;
    }
    target->push_back({r, len, static_cast<int>(target->size()) + 1});
  }
}

}  // namespace

std::optional<EdgeId> SpiderTree::find(const EdgeAddress& a) const {
  const auto it = index.find(a);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

EdgeId SpiderTree::edge_of(const EdgeAddress& a) const {
  const auto found = find(a);
  if (!found) {
    throw InvalidInput("edge address " + a.to_string() +
                       " is not part of " + spider.to_string());
  }
  return *found;
}

SpiderTree materialize_tree(const CanonicalDoubleSpider& spider) {
  SpiderTree out;
  out.spider = spider;
  Tree& tree = out.tree;
  const int s = spider.core_length;

  for (int j = 1; j <= s + 1; ++j) {
    std::string name = j == 1 ? "v_l" : j == s + 1 ? "v_r" : "v_" + std::to_string(j);
    tree.add_vertex(std::move(name));
  }
  out.left_hub = 0;
  out.right_hub = s;

  auto record = [&](EdgeId e, const EdgeAddress& a) {
    out.address.push_back(a);
    out.index.emplace(a, e);
  };
  for (int j = 1; j <= s; ++j) {
    const EdgeId e = tree.add_edge(j - 1, j);
    record(e, EdgeAddress::core(j));
    out.core.push_back(e);
  }

  std::vector<PathSlot> right_odd, right_even, right_unit;
  std::vector<PathSlot> left_odd, left_even, left_unit;
  split_side(spider.right_lengths, Side::kRight, right_odd, right_even,
             right_unit);
  split_side(spider.left_lengths, Side::kLeft, left_odd, left_even, left_unit);
  out.right_paths.resize(spider.right_lengths.size());
  out.left_paths.resize(spider.left_lengths.size());

  // Right paths: position j's far endpoint is j steps from the hub.
  auto add_right = [&](const std::vector<PathSlot>& slots, PathFamily family) {
    for (const PathSlot& slot : slots) {
      VertexId previous = out.right_hub;
      auto& path = out.right_paths[slot.rank];
      for (int j = 1; j <= slot.length; ++j) {
        const EdgeAddress a{family, slot.family_index, j};
        const VertexId v = tree.add_vertex(a.to_string());
        const EdgeId e = tree.add_edge(previous, v);
        record(e, a);
        path.push_back(e);
        previous = v;
      }
    }
  };
  // Left paths: position 1 is the pendant edge, position len touches the hub.
  auto add_left = [&](const std::vector<PathSlot>& slots, PathFamily family) {
    for (const PathSlot& slot : slots) {
      std::vector<VertexId> vertices;
      for (int j = 1; j <= slot.length; ++j) {
        vertices.push_back(
            tree.add_vertex(EdgeAddress{family, slot.family_index, j}.to_string()));
      }
      std::vector<EdgeId> edges;
      for (int j = 1; j <= slot.length; ++j) {
        const VertexId inner = j == slot.length ? out.left_hub : vertices[j];
        const EdgeId e = tree.add_edge(vertices[j - 1], inner);
        record(e, EdgeAddress{family, slot.family_index, j});
        edges.push_back(e);
      }
      out.left_paths[slot.rank].assign(edges.rbegin(), edges.rend());
    }
  };

  add_right(right_odd, PathFamily::kRightOdd);
  add_right(right_even, PathFamily::kRightEven);
  add_left(left_odd, PathFamily::kLeftOdd);
  add_left(left_even, PathFamily::kLeftEven);
  add_left(left_unit, PathFamily::kLeftUnit);
  return out;
}

}  // namespace antimagic
