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

#ifndef ANTIMAGIC_TEXT_FORMAT_HPP_
#define ANTIMAGIC_TEXT_FORMAT_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "antimagic/labeling.hpp"
#include "antimagic/spider.hpp"
#include "antimagic/spider_tree.hpp"

namespace antimagic {

// Instance files:
//   core = 2
//   left = 3,1
//   right = 1,1
// Blank lines and lines starting with '#' are ignored. Throws InvalidInput on
// anything malformed, including specs that fail DoubleSpiderSpec::validate.
DoubleSpiderSpec parse_instance(std::string_view text);
std::string format_instance(const DoubleSpiderSpec& spec);

// Labeling files:
//   m = 8
//   edge = core/1, label = 3
//   ...
struct LabelingRecords {
  int edge_count = 0;
  std::vector<std::pair<EdgeAddress, int>> records;
};

LabelingRecords parse_labeling(std::string_view text);

// Records in edge id order, which is also address order.
std::string format_labeling(const SpiderTree& layout,
                            const EdgeLabeling& labeling);

// Places the records on the layout's edges. Throws InvalidInput when m does
// not match, an address is unknown or repeated, or an edge is missing. The
// label values themselves are not checked here.
EdgeLabeling to_edge_labeling(const LabelingRecords& records,
                              const SpiderTree& layout);

// Graphviz export; vertex names are the layout's names and edges carry
// label=<n> when a labeling is given.
std::string export_dot(const SpiderTree& layout,
                       const EdgeLabeling* labeling = nullptr);

}  // namespace antimagic

#endif  // ANTIMAGIC_TEXT_FORMAT_HPP_
