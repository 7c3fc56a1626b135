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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "antimagic/driver.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/spider.hpp"
#include "antimagic/spider_tree.hpp"
#include "antimagic/text_format.hpp"

namespace py = pybind11;

namespace antimagic {
namespace {

using LabelMap = std::map<std::string, int>;

DoubleSpiderSpec make_spec(int core, std::vector<int> left,
                           std::vector<int> right) {
  return {core, std::move(left), std::move(right)};
}

LabelMap to_map(const SpiderTree& layout, const EdgeLabeling& labeling) {
  LabelMap out;
  for (EdgeId e = 0; e < layout.tree.edge_count(); ++e) {
    out[layout.address[e].to_string()] = labeling[e];
  }
  return out;
}

EdgeLabeling from_map(const SpiderTree& layout, const LabelMap& labels) {
  LabelingRecords records;
  records.edge_count = static_cast<int>(labels.size());
  for (const auto& [address, label] : labels) {
    records.records.emplace_back(EdgeAddress::parse(address), label);
  }
  return to_edge_labeling(records, layout);
}

py::dict label(int core, std::vector<int> left, std::vector<int> right) {
  const LabelResult r =
      strongly_antimagic_label(make_spec(core, std::move(left), std::move(right)));
  py::dict out;
  out["instance"] = r.spider.to_string();
  out["edge_count"] = r.labeled.labeling.edge_count();
  out["route"] = r.route.describe();
  out["labels"] = to_map(r.layout, r.labeled.labeling);
  return out;
}

py::dict verify(int core, std::vector<int> left, std::vector<int> right,
                const LabelMap& labels) {
  const SpiderTree layout = materialize_tree(
      canonicalize(make_spec(core, std::move(left), std::move(right))));
  const VertexSumReport report = evaluate(layout.tree, from_map(layout, labels));
  py::dict out;
  out["bijection"] = report.bijection_ok;
  out["antimagic"] = report.antimagic_ok;
  out["strong"] = report.strong_ok;
  out["sums"] = report.sums;
  if (report.violation) {
    out["violation"] = report.violation->describe(layout.tree);
  } else {
    out["violation"] = py::none();
  }
  return out;
}

std::tuple<std::string, std::optional<std::vector<int>>, std::uint64_t> search(
    int vertex_count, const std::vector<std::pair<int, int>>& edges,
    bool strong, int max_edges, std::optional<double> timeout_seconds) {
  const Tree tree = Tree::from_edges(vertex_count, edges);
  SearchBudget budget;
  budget.max_edges = max_edges;
  if (timeout_seconds) {
    budget.time_limit = std::chrono::milliseconds(
        static_cast<std::int64_t>(*timeout_seconds * 1000.0));
  }
  SearchResult r;
  {
    py::gil_scoped_release release;
    r = strong ? find_strongly_antimagic(tree, budget)
               : find_antimagic(tree, budget);
  }
  std::optional<std::vector<int>> labels;
  if (r.labeling) labels = r.labeling->labels;
  return {std::string(to_string(r.status)), labels, r.nodes};
}

}  // namespace
}  // namespace antimagic

PYBIND11_MODULE(_core, m) {
  using namespace antimagic;
  m.doc() = "Strongly antimagic labelings of double spiders";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def(
      "canonicalize",
      [](int core, std::vector<int> left, std::vector<int> right) {
        const CanonicalDoubleSpider c =
            canonicalize(make_spec(core, std::move(left), std::move(right)));
        return std::make_tuple(c.core_length, c.left_lengths, c.right_lengths,
                               c.swapped);
      },
      py::arg("core"), py::arg("left"), py::arg("right"),
      "Return (core, left, right, swapped) in canonical orientation.");

  m.def(
      "classify",
      [](int core, std::vector<int> left, std::vector<int> right) {
        const auto c =
            canonicalize(make_spec(core, std::move(left), std::move(right)));
        return std::string(to_string(classify(derive_parameters(c))));
      },
      py::arg("core"), py::arg("left"), py::arg("right"));

  m.def(
      "enumerate_instances",
      [](int max_edges) {
        std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> out;
        for (const auto& c : enumerate_instances(max_edges)) {
          out.emplace_back(c.core_length, c.left_lengths, c.right_lengths);
        }
        return out;
      },
      py::arg("max_edges"),
      "All canonical double spiders with at most max_edges edges.");

  m.def("label", &label, py::arg("core"), py::arg("left"), py::arg("right"),
        "Strongly antimagic labeling keyed by edge address.");
  m.def("verify", &verify, py::arg("core"), py::arg("left"), py::arg("right"),
        py::arg("labels"));

  m.def(
      "export_dot",
      [](int core, std::vector<int> left, std::vector<int> right,
         std::optional<LabelMap> labels) {
        const SpiderTree layout = materialize_tree(
            canonicalize(make_spec(core, std::move(left), std::move(right))));
        if (!labels) return export_dot(layout);
        const EdgeLabeling l = from_map(layout, *labels);
        return export_dot(layout, &l);
      },
      py::arg("core"), py::arg("left"), py::arg("right"),
      py::arg("labels") = py::none());

  m.def("search", &search, py::arg("vertex_count"), py::arg("edges"),
        py::kw_only(), py::arg("strong") = true, py::arg("max_edges") = 10,
        py::arg("timeout_seconds") = py::none(),
        "Exhaustive search on a tree given as an edge list. Returns "
        "(status, labels or None, nodes); labels follow the edge order.");
}
