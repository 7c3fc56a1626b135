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

#include "antimagic/driver.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "antimagic/composition.hpp"
#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int shortest_pendant(const CanonicalDoubleSpider& spider) {
  return std::min(
      *std::min_element(spider.left_lengths.begin(), spider.left_lengths.end()),
      *std::min_element(spider.right_lengths.begin(),
                        spider.right_lengths.end()));
}

int unit_count(const std::vector<int>& lengths) {
  return static_cast<int>(std::count(lengths.begin(), lengths.end(), 1));
}

// The reductions must never flip the orientation, since hub identities are
// carried through the replay.
CanonicalDoubleSpider same_orientation(const DoubleSpiderSpec& spec,
                                       const char* what) {
  CanonicalDoubleSpider next = canonicalize(spec);
  if (next.swapped) {
    throw InternalError(std::string(what) + " flipped the orientation of " +
                        next.to_string());
  }
  return next;
}

CanonicalDoubleSpider drop_unit(const CanonicalDoubleSpider& spider,
                                Side side) {
  DoubleSpiderSpec spec = spider.as_spec();
  auto& lengths = side == Side::kLeft ? spec.left_lengths : spec.right_lengths;
  const auto it = std::find(lengths.begin(), lengths.end(), 1);
  if (it == lengths.end()) {
    throw InternalError("no unit path to remove in " + spider.to_string());
  }
  lengths.erase(it);
  return same_orientation(spec, "unit path removal");
}

// Left-side stopping rule: no unit path, exactly {P1, P1}, or exactly one
// unit path next to one longer path.
bool left_removal_done(const std::vector<int>& left) {
  const int units = unit_count(left);
  if (units == 0) return true;
  return left.size() == 2;
}

// Walks a pendant path from its hub edge to the leaf.
std::vector<EdgeId> walk_out(const Tree& g, VertexId hub, EdgeId first) {
  std::vector<EdgeId> path{first};
  VertexId at = g.edge(first).other(hub);
  EdgeId via = first;
  while (g.degree(at) == 2) {
    const auto inc = g.incident(at);
    via = inc[0] == via ? inc[1] : inc[0];
    path.push_back(via);
    at = g.edge(via).other(at);
  }
  return path;
}

std::vector<EdgeId> core_edges(const Tree& g, VertexId from, VertexId to) {
  std::vector<EdgeId> parent(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexId> queue;
  queue.push(from);
  seen[from] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (EdgeId e : g.incident(u)) {
      const VertexId v = g.edge(e).other(u);
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = e;
        queue.push(v);
      }
    }
  }
  std::vector<EdgeId> path;
  for (VertexId at = to; at != from; at = g.edge(parent[at]).other(at)) {
    path.push_back(parent[at]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<EdgeId>> pendant_paths(const Tree& g, VertexId hub,
                                               EdgeId core_edge) {
  std::vector<std::vector<EdgeId>> paths;
  for (EdgeId e : g.incident(hub)) {
    if (e != core_edge) paths.push_back(walk_out(g, hub, e));
  }
  std::sort(paths.begin(), paths.end(), [](const auto& x, const auto& y) {
    return std::pair(x.size(), x.front()) < std::pair(y.size(), y.front());
  });
  return paths;
}

// Moves a labeling of a double spider with known hubs onto the canonical
// layout of the same shape.
LabeledTree transfer(const LabeledSpiderTree& source, const SpiderTree& target) {
  const Tree& g = source.labeled.tree;
  const auto& from = source.labeled.labeling;
  std::vector<int> labels(target.tree.edge_count(), 0);
  auto copy_path = [&](const std::vector<EdgeId>& src,
                       const std::vector<EdgeId>& dst) {
    if (src.size() != dst.size()) {
      throw InternalError("composed tree does not match " +
                          target.spider.to_string());
    }
    for (std::size_t i = 0; i < src.size(); ++i) labels[dst[i]] = from[src[i]];
  };
  const auto core = core_edges(g, source.left_hub, source.right_hub);
  copy_path(core, target.core);
  const auto left = pendant_paths(g, source.left_hub, core.front());
  const auto right = pendant_paths(g, source.right_hub, core.back());
  if (left.size() != target.left_paths.size() ||
      right.size() != target.right_paths.size()) {
    throw InternalError("composed tree does not match " +
                        target.spider.to_string());
  }
  for (std::size_t i = 0; i < left.size(); ++i) {
    copy_path(left[i], target.left_paths[i]);
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    copy_path(right[i], target.right_paths[i]);
  }
  return make_labeled_tree(target.tree, EdgeLabeling(std::move(labels)));
}

void check_strong(const LabeledTree& lt, const std::string& where) {
  if (!lt.report.strong_ok) {
    std::string detail = lt.report.bijection_problem;
    if (lt.report.violation) detail = lt.report.violation->describe(lt.tree);
    throw InternalError(where + " is not strongly antimagic: " + detail);
  }
}

}  // namespace

std::string_view step_name(const ReductionStep& step) {
  return std::visit(Overloaded{
                        [](const DeleteLeafLevel&) { return "DeleteLeafLevel"; },
                        [](const RemoveUnitRight&) { return "RemoveUnitRight"; },
                        [](const RemoveUnitLeft&) { return "RemoveUnitLeft"; },
                    },
                    step);
}

std::string_view to_string(BaseLabeler labeler) {
  switch (labeler) {
    case BaseLabeler::kTypeA: return "TypeA";
    case BaseLabeler::kTypeBC: return "TypeBC";
    case BaseLabeler::kFigure2: return "Figure2";
    case BaseLabeler::kOddRight: return "OddRight";
    case BaseLabeler::kEvenRight: return "EvenRight";
  }
  return "?";
}

std::string Route::describe() const {
  std::string out(to_string(tag));
  out += ": ";
  for (const auto& step : reductions) {
    out += step_name(step);
    out += " -> ";
  }
  out += to_string(base);
  return out;
}

bool directly_labelable(const Parameters& p) {
  if (is_figure2_instance(p.spider) || is_type_a(p) || is_type_bc(p)) {
    return true;
  }
  const CaseTag tag = classify(p);
  return tag == CaseTag::kUnequalOddRight || tag == CaseTag::kUnequalEvenRight;
}

EdgeLabeling label_directly(const Parameters& p, BaseLabeler* used,
                            StepTrace* trace) {
  auto report = [&](BaseLabeler b) {
    if (used != nullptr) *used = b;
  };
  if (is_figure2_instance(p.spider)) {
    report(BaseLabeler::kFigure2);
    return figure2_edge_labeling(trace);
  }
  if (is_type_a(p)) {
    report(BaseLabeler::kTypeA);
    return label_type_a(p, trace);
  }
  if (is_type_bc(p)) {
    report(BaseLabeler::kTypeBC);
    return label_type_bc(p, make_type_bc_context(p), trace);
  }
  switch (classify(p)) {
    case CaseTag::kUnequalOddRight:
      report(BaseLabeler::kOddRight);
      return label_odd_right(p, trace);
    case CaseTag::kUnequalEvenRight:
      report(BaseLabeler::kEvenRight);
      return label_even_right(p, make_even_case_context(p), trace);
    default:
      throw PreconditionError("no base labeler applies to " +
                              p.spider.to_string());
  }
}

LabelResult strongly_antimagic_label(const DoubleSpiderSpec& spec) {
  spec.validate();
  LabelResult result;
  result.spider = canonicalize(spec);
  const CanonicalDoubleSpider original = result.spider;
  result.route.tag = classify(derive_parameters(original));

  auto& steps = result.route.reductions;
  CanonicalDoubleSpider cur = original;
  while (true) {
    const Parameters p = derive_parameters(cur);
    if (directly_labelable(p)) break;
    switch (classify(p)) {
      case CaseTag::kEqualDeg3:
      case CaseTag::kEqualDegHigh: {
        const int h = shortest_pendant(cur);
        if (classify(p) == CaseTag::kEqualDeg3 && h == 1) {
          throw InternalError("no residue labeler for " + cur.to_string());
        }
        for (int i = 1; i < h; ++i) {
          steps.push_back(DeleteLeafLevel{cur});
          cur = delete_leaf_level(cur);
          if (cur.swapped) {
            throw InternalError("leaf deletion flipped " + cur.to_string());
          }
        }
        if (classify(p) == CaseTag::kEqualDegHigh) {
          steps.push_back(RemoveUnitRight{cur});
          cur = drop_unit(cur, Side::kRight);
        }
        break;
      }
      case CaseTag::kUnequalAllUnitRight:
        if (cur.right_lengths.size() > 2) {
          steps.push_back(RemoveUnitRight{cur});
          cur = drop_unit(cur, Side::kRight);
        } else if (!left_removal_done(cur.left_lengths)) {
          steps.push_back(RemoveUnitLeft{cur});
          cur = drop_unit(cur, Side::kLeft);
        } else {
          throw InternalError("no residue labeler for " + cur.to_string());
        }
        break;
      default:
        throw InternalError("no residue labeler for " + cur.to_string());
    }
  }
  result.route.residue = cur;

  const Parameters residue = derive_parameters(cur);
  const EdgeLabeling base =
      label_directly(residue, &result.route.base, &result.trace);
  const SpiderTree residue_layout = materialize_tree(cur);
  LabeledSpiderTree acc{make_labeled_tree(residue_layout.tree, base),
                        residue_layout.left_hub, residue_layout.right_hub};
  check_strong(acc.labeled, "base labeling of " + cur.to_string());

  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const std::string where =
        std::string(step_name(*it)) + " undo towards " +
        std::visit([](const auto& s) { return s.before.to_string(); }, *it);
    try {
      std::visit(
          Overloaded{
              [&](const DeleteLeafLevel&) {
                acc.labeled = extend_leaves(acc.labeled);
              },
              [&](const RemoveUnitRight&) {
                acc = insert_unit_path(acc, Side::kRight);
              },
              [&](const RemoveUnitLeft&) {
                const auto& sums = acc.labeled.report.sums;
                if (!(sums[acc.left_hub] > sums[acc.right_hub])) {
                  throw InternalError(where + ": phi(v_l) <= phi(v_r)");
                }
                acc = insert_unit_path(acc, Side::kLeft);
              },
          },
          *it);
    } catch (const PreconditionError& e) {
      throw InternalError(where + ": " + e.what());
    }
    check_strong(acc.labeled, where);
  }

  result.layout = materialize_tree(original);
  result.labeled = transfer(acc, result.layout);
  check_strong(result.labeled, "labeling of " + original.to_string());
  return result;
}

}  // namespace antimagic
