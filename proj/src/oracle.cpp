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

#include "antimagic/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

class Search {
 public:
  Search(const Tree& tree, const SearchBudget& budget, bool strong)
      : g_(tree),
        budget_(budget),
        strong_(strong),
        labels_(tree.edge_count(), 0),
        sum_(tree.vertex_count(), 0),
        open_(tree.vertex_count(), 0),
        start_(std::chrono::steady_clock::now()) {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      open_[v] = g_.degree(v);
      if (open_[v] == 0) closed_.push_back(v);
    }
  }

  SearchResult run() {
    SearchResult result;
    const bool found = place(g_.edge_count());
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::kFound;
      result.labeling = EdgeLabeling(labels_);
    } else {
      result.status =
          exhausted_ ? SearchStatus::kBudgetExhausted : SearchStatus::kNone;
    }
    return result;
  }

 private:
  bool out_of_budget() {
    if (budget_.node_limit && nodes_ > *budget_.node_limit) return true;
    if (budget_.time_limit && (nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.time_limit) {
      return true;
    }
    return false;
  }

  // Range of sums still reachable by v once labels 1..next are spread out.
  std::pair<VertexSum, VertexSum> reachable(VertexId v, int next) const {
    const VertexSum r = open_[v];
    return {sum_[v] + r * (r + 1) / 2, sum_[v] + r * next - r * (r - 1) / 2};
  }

  // Checks a vertex that has just been closed against every closed vertex.
  bool closed_ok(VertexId v) const {
    for (VertexId u : closed_) {
      if (u == v) continue;
      if (sum_[u] == sum_[v]) return false;
      if (!strong_) continue;
      const int du = g_.degree(u);
      const int dv = g_.degree(v);
      if (du < dv && sum_[u] > sum_[v]) return false;
      if (du > dv && sum_[u] < sum_[v]) return false;
    }
    return true;
  }

  // An open vertex must still be able to fit between the closed vertices of
  // lower and higher degree.
  bool open_ok(VertexId v, int next) const {
    if (!strong_) return true;
    const auto [lo, hi] = reachable(v, next);
    const int dv = g_.degree(v);
    for (VertexId u : closed_) {
      const int du = g_.degree(u);
      if (du < dv && hi <= sum_[u]) return false;
      if (du > dv && lo >= sum_[u]) return false;
    }
    return true;
  }

  bool place(int label) {
    if (label == 0) return true;
    ++nodes_;
    if (out_of_budget()) {
      exhausted_ = true;
      return false;
    }
    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (labels_[e] == 0) order.push_back(e);
    }
    auto pressure = [&](EdgeId e) {
      return std::min(open_[g_.edge(e).u], open_[g_.edge(e).v]);
    };
    std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) {
      return pressure(x) < pressure(y);
    });

    for (EdgeId e : order) {
      const Edge& edge = g_.edge(e);
      assign(e, label);
      bool ok = true;
      for (VertexId v : {edge.u, edge.v}) {
        ok = ok && (open_[v] == 0 ? closed_ok(v) : open_ok(v, label - 1));
      }
      if (ok && place(label - 1)) return true;
      unassign(e, label);
      if (exhausted_) return false;
    }
    return false;
  }

  void assign(EdgeId e, int label) {
    labels_[e] = label;
    for (VertexId v : {g_.edge(e).u, g_.edge(e).v}) {
      sum_[v] += label;
      if (--open_[v] == 0) closed_.push_back(v);
    }
  }

  void unassign(EdgeId e, int label) {
    labels_[e] = 0;
    for (VertexId v : {g_.edge(e).v, g_.edge(e).u}) {
      sum_[v] -= label;
      if (open_[v]++ == 0) closed_.erase(std::find(closed_.begin(), closed_.end(), v));
    }
  }

  const Tree& g_;
  SearchBudget budget_;
  bool strong_;
  std::vector<int> labels_;
  std::vector<VertexSum> sum_;
  std::vector<int> open_;
  std::vector<VertexId> closed_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

SearchResult search(const Tree& tree, const SearchBudget& budget, bool strong) {
  if (tree.edge_count() > budget.max_edges) {
    throw BudgetError("tree has " + std::to_string(tree.edge_count()) +
                      " edges; the search budget allows " +
                      std::to_string(budget.max_edges));
  }
  return Search(tree, budget, strong).run();
}

}  // namespace

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kNone: return "none";
    case SearchStatus::kBudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

SearchResult find_strongly_antimagic(const Tree& tree,
                                     const SearchBudget& budget) {
  return search(tree, budget, true);
}

SearchResult find_antimagic(const Tree& tree, const SearchBudget& budget) {
  return search(tree, budget, false);
}

}  // namespace antimagic
