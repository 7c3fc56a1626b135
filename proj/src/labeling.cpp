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

#include "antimagic/labeling.hpp"

#include <algorithm>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

std::string bijection_diagnostic(const EdgeLabeling& labeling) {
  const int m = labeling.edge_count();
  std::vector<int> seen(m + 1, 0);
  for (int label : labeling.labels) {
    if (label < 1 || label > m) {
      return "label " + std::to_string(label) + " is outside 1.." +
             std::to_string(m);
    }
    if (seen[label]++ > 0) {
      return "label " + std::to_string(label) + " is used more than once";
    }
  }
  return {};
}

std::vector<VertexId> ordered_vertices(const Tree& tree) {
  std::vector<VertexId> order(tree.vertex_count());
  for (VertexId v = 0; v < tree.vertex_count(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
    return tree.degree(x) < tree.degree(y);
  });
  return order;
}

Violation make_violation(const Tree& tree, const VertexSumReport& r,
                         VertexId u, VertexId v) {
  return {u, v, r.sums[u], r.sums[v], tree.degree(u), tree.degree(v)};
}

}  // namespace

std::string Violation::describe(const Tree& tree) const {
  return tree.name(first) + " (deg " + std::to_string(first_degree) +
         ", sum " + std::to_string(first_sum) + ") vs " + tree.name(second) +
         " (deg " + std::to_string(second_degree) + ", sum " +
         std::to_string(second_sum) + ")";
}

VertexSumReport vertex_sums(const Tree& tree, const EdgeLabeling& labeling) {
  if (labeling.edge_count() != tree.edge_count()) {
    throw InvalidInput("labeling has " + std::to_string(labeling.edge_count()) +
                       " labels for " + std::to_string(tree.edge_count()) +
                       " edges");
  }
  VertexSumReport report;
  report.sums.assign(tree.vertex_count(), 0);
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    report.sums[tree.edge(e).u] += labeling[e];
    report.sums[tree.edge(e).v] += labeling[e];
  }
  for (VertexId v = 0; v < tree.vertex_count(); ++v) {
    report.degree_classes[tree.degree(v)].push_back(v);
  }
  return report;
}

bool verify_bijection(const EdgeLabeling& labeling) {
  return bijection_diagnostic(labeling).empty();
}

VertexSumReport evaluate(const Tree& tree, const EdgeLabeling& labeling) {
  VertexSumReport report = vertex_sums(tree, labeling);
  report.bijection_problem = bijection_diagnostic(labeling);
  report.bijection_ok = report.bijection_problem.empty();
  if (!report.bijection_ok) return report;

  // Distinctness: sort a copy of the sums.
  std::vector<VertexSum> sorted = report.sums;
  std::sort(sorted.begin(), sorted.end());
  report.antimagic_ok =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  // Monotone across occupied degree classes: max of one class below min of
  // the next.
  bool monotone = true;
  std::optional<VertexSum> previous_max;
  for (const auto& [degree, members] : report.degree_classes) {
    VertexSum lo = report.sums[members.front()];
    VertexSum hi = lo;
    for (VertexId v : members) {
      lo = std::min(lo, report.sums[v]);
      hi = std::max(hi, report.sums[v]);
    }
    if (previous_max && *previous_max >= lo) monotone = false;
    previous_max = hi;
  }
  report.strong_ok = report.antimagic_ok && monotone;

  if (!report.strong_ok) {
    const auto order = ordered_vertices(tree);
    for (size_t i = 0; i < order.size() && !report.violation; ++i) {
      for (size_t j = i + 1; j < order.size(); ++j) {
        const VertexId u = order[i];
        const VertexId v = order[j];
        const bool equal = report.sums[u] == report.sums[v];
        const bool inverted = tree.degree(u) < tree.degree(v) &&
                              report.sums[u] >= report.sums[v];
        if (equal && !report.collision) {
          report.collision = make_violation(tree, report, u, v);
        }
        if (equal || inverted) {
          report.violation = make_violation(tree, report, u, v);
          break;
        }
      }
    }
    // The strong witness can be an inversion that precedes the first
    // collision; finish the collision scan separately.
    if (!report.antimagic_ok && !report.collision) {
      for (size_t i = 0; i < order.size() && !report.collision; ++i) {
        for (size_t j = i + 1; j < order.size(); ++j) {
          if (report.sums[order[i]] == report.sums[order[j]]) {
            report.collision = make_violation(tree, report, order[i], order[j]);
            break;
          }
        }
      }
    }
  }
  return report;
}

bool verify_antimagic(const Tree& tree, const EdgeLabeling& labeling) {
  const VertexSumReport report = evaluate(tree, labeling);
  if (!report.bijection_ok) throw NotBijectiveError(report.bijection_problem);
  return report.antimagic_ok;
}

VertexSumReport verify_strongly_antimagic(const Tree& tree,
                                          const EdgeLabeling& labeling) {
  VertexSumReport report = evaluate(tree, labeling);
  if (!report.bijection_ok) throw NotBijectiveError(report.bijection_problem);
  return report;
}

LabeledTree make_labeled_tree(Tree tree, EdgeLabeling labeling) {
  VertexSumReport report = evaluate(tree, labeling);
  return {std::move(tree), std::move(labeling), std::move(report)};
}

}  // namespace antimagic
