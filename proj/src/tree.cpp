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

#include "antimagic/tree.hpp"

#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {

VertexId Tree::add_vertex(std::string name) {
  const VertexId id = vertex_count();
  if (name.empty()) name = "v" + std::to_string(id);
  names_.push_back(std::move(name));
  incident_.emplace_back();
  return id;
}

EdgeId Tree::add_edge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v) {
    throw InvalidInput("edge endpoints out of range or equal");
  }
  const EdgeId id = edge_count();
  edges_.push_back({u, v});
  incident_[u].push_back(id);
  incident_[v].push_back(id);
  return id;
}

std::vector<int> Tree::degrees() const {
  std::vector<int> out(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) out[v] = degree(v);
  return out;
}

bool Tree::is_tree() const {
  if (vertex_count() == 0) return false;
  if (edge_count() != vertex_count() - 1) return false;
  std::vector<bool> seen(vertex_count(), false);
  std::vector<VertexId> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident_[v]) {
      const VertexId w = edges_[e].other(v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count();
}

Tree Tree::from_edges(int vertex_count,
                      const std::vector<std::pair<int, int>>& edges) {
  Tree tree;
  for (int i = 0; i < vertex_count; ++i) tree.add_vertex();
  for (const auto& [u, v] : edges) tree.add_edge(u, v);
  return tree;
}

Tree Tree::path(int vertex_count) {
  Tree tree;
  for (int i = 0; i < vertex_count; ++i) tree.add_vertex();
  for (int i = 0; i + 1 < vertex_count; ++i) tree.add_edge(i, i + 1);
  return tree;
}

Tree Tree::star(int leaf_count) {
  Tree tree;
  tree.add_vertex();
  for (int i = 0; i < leaf_count; ++i) tree.add_edge(0, tree.add_vertex());
  return tree;
}

}  // namespace antimagic
