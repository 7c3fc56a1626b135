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

#ifndef ANTIMAGIC_CONSTRUCTIVE_HPP_
#define ANTIMAGIC_CONSTRUCTIVE_HPP_

#include <vector>

#include "antimagic/labeling.hpp"
#include "antimagic/spider.hpp"
#include "antimagic/spider_tree.hpp"

namespace antimagic {

// One label placement, tagged with the rule step that produced it.
struct TraceEntry {
  int step = 0;
  EdgeAddress edge;
  int label = 0;
};
using StepTrace = std::vector<TraceEntry>;

// Every labeler below returns an EdgeLabeling indexed by the edge ids of
// materialize_tree(params.spider).

// Both hubs of degree three with four unit pendant paths. Closed-form labels;
// the largest label sits on the core edge at the left hub.
bool is_type_a(const Parameters& params);
EdgeLabeling label_type_a(const Parameters& params, StepTrace* trace = nullptr);

// Bookkeeping for the two-right-path labeler. The right side is a unit path
// (R/odd/1/1) plus one more path of length k.
struct TypeBCContext {
  int other_right_length = 0;   // k
  // t' = 1: the right unit edge is labelled just before the left unit edge.
  bool right_unit_first = false;
  // w' = -1 when a left odd path longer than one exists: its hub edge is held
  // back until the end.
  int held_back_offset = 0;
  int early_core_edges = 0;     // s1 = floor(|s - 2| / 2)
  int late_core_edges = 0;      // s2 = 1 if s == 1 or s even, else 2
};

// Type (b): both hubs of degree 3, at most one left unit path, right side
// {P1, Pk}. Type (c): right side {P1, P1} and no left unit path. Excludes the
// one instance handled by figure2_labeling().
bool is_type_bc(const Parameters& params);
TypeBCContext make_type_bc_context(const Parameters& params);
EdgeLabeling label_type_bc(const Parameters& params, const TypeBCContext& ctx,
                           StepTrace* trace = nullptr);

// core 2, left {1, 3}, right {1, 1}: the two-right-path rules fail here and a
// fixed labeling is used instead.
bool is_figure2_instance(const CanonicalDoubleSpider& spider);
CanonicalDoubleSpider figure2_instance();
EdgeLabeling figure2_edge_labeling(StepTrace* trace = nullptr);
LabeledTree figure2_labeling();

// Left hub strictly larger, no even right path, some odd right path of
// length >= 3.
EdgeLabeling label_odd_right(const Parameters& params,
                             StepTrace* trace = nullptr);

// Bookkeeping for the even-right labeler. The labelling order is switched on
// `reordered_paths` right even paths, P2's first.
struct EvenCaseContext {
  int reordered_paths = 0;  // alpha = max(0, (b - 1) - (c + d))
  int right_p2_count = 0;   // b2
  int reordered_p2 = 0;     // beta = min(alpha, b2)
  int early_units = 0;      // beta1 = max(0, beta - 1)
  // Set for s even, a = c = d = 0, t = 3, b = 2 and no right P2, where the
  // plain step order ties phi(v_l) with phi(v_r). Steps 6 and 15 (the b-th
  // even path) then run before Steps 5 and 14 (the core). Clear it to get
  // the plain order.
  bool longest_path_first = false;
  int early_core_edges = 0;
  int late_core_edges = 0;
};

EvenCaseContext make_even_case_context(const Parameters& params);

// Left hub strictly larger and at least one even right path.
EdgeLabeling label_even_right(const Parameters& params,
                              const EvenCaseContext& ctx,
                              StepTrace* trace = nullptr);

int early_core_edge_count(int core_length);
int late_core_edge_count(int core_length);

}  // namespace antimagic

#endif  // ANTIMAGIC_CONSTRUCTIVE_HPP_
