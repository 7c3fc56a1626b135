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

#ifndef ANTIMAGIC_LABELING_HPP_
#define ANTIMAGIC_LABELING_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic {

using VertexSum = std::int64_t;

// Edge labels indexed by EdgeId. A valid labeling of an m-edge tree is a
// bijection onto 1..m.
struct EdgeLabeling {
  std::vector<int> labels;

  EdgeLabeling() = default;
  explicit EdgeLabeling(std::vector<int> l) : labels(std::move(l)) {}

  int edge_count() const { return static_cast<int>(labels.size()); }
  int operator[](EdgeId e) const { return labels.at(e); }

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

// Two vertices whose sums break the property being checked.
struct Violation {
  VertexId first = 0;
  VertexId second = 0;
  VertexSum first_sum = 0;
  VertexSum second_sum = 0;
  int first_degree = 0;
  int second_degree = 0;

  std::string describe(const Tree& tree) const;
};

struct VertexSumReport {
  std::vector<VertexSum> sums;                     // indexed by VertexId
  std::map<int, std::vector<VertexId>> degree_classes;  // degree -> vertices
  bool bijection_ok = false;
  bool antimagic_ok = false;
  bool strong_ok = false;
  // First offending pair for the strong property, scanning vertices in
  // (degree, id) order. Present iff bijection_ok && !strong_ok.
  std::optional<Violation> violation;
  // First pair with equal sums in the same order. Present iff bijection_ok &&
  // !antimagic_ok.
  std::optional<Violation> collision;
  std::string bijection_problem;  // empty when bijection_ok
};

// Sums only; the flags are left false. Throws InvalidInput when the labeling
// does not have one label per tree edge.
VertexSumReport vertex_sums(const Tree& tree, const EdgeLabeling& labeling);

bool verify_bijection(const EdgeLabeling& labeling);

// Full evaluation. Never throws for a non-bijective labeling; it only clears
// bijection_ok and fills bijection_problem.
VertexSumReport evaluate(const Tree& tree, const EdgeLabeling& labeling);

// Both throw NotBijectiveError when the labeling is not a bijection onto 1..m.
bool verify_antimagic(const Tree& tree, const EdgeLabeling& labeling);
VertexSumReport verify_strongly_antimagic(const Tree& tree,
                                          const EdgeLabeling& labeling);

struct LabeledTree {
  Tree tree;
  EdgeLabeling labeling;
  VertexSumReport report;
};

// Evaluates the labeling and bundles everything together.
LabeledTree make_labeled_tree(Tree tree, EdgeLabeling labeling);

}  // namespace antimagic

#endif  // ANTIMAGIC_LABELING_HPP_
