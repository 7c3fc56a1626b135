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

#ifndef ANTIMAGIC_TREE_HPP_
#define ANTIMAGIC_TREE_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
};

// Undirected simple graph with stable, append-only vertex and edge ids. Used
// for trees throughout; is_tree() checks the shape.
class Tree {
 public:
  Tree() = default;

  VertexId add_vertex(std::string name = {});
  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v); }
  int degree(VertexId v) const {
    return static_cast<int>(incident_.at(v).size());
  }
  std::vector<int> degrees() const;

  // Vertex names default to "v<id>".
  const std::string& name(VertexId v) const { return names_.at(v); }

  // Connected and |E| = |V| - 1.
  bool is_tree() const;

  static Tree from_edges(int vertex_count,
                         const std::vector<std::pair<int, int>>& edges);
  static Tree path(int vertex_count);
  static Tree star(int leaf_count);

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

}  // namespace antimagic

#endif  // ANTIMAGIC_TREE_HPP_
