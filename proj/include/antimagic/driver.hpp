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

#ifndef ANTIMAGIC_DRIVER_HPP_
#define ANTIMAGIC_DRIVER_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "antimagic/constructive.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/spider.hpp"
#include "antimagic/spider_tree.hpp"

namespace antimagic {

// One reduction applied on the way down. `before` is the instance it was
// applied to, which is what undoing it restores.
struct DeleteLeafLevel {
  CanonicalDoubleSpider before;
};
struct RemoveUnitRight {
  CanonicalDoubleSpider before;
};
struct RemoveUnitLeft {
  CanonicalDoubleSpider before;
};
using ReductionStep =
    std::variant<DeleteLeafLevel, RemoveUnitRight, RemoveUnitLeft>;

std::string_view step_name(const ReductionStep& step);

enum class BaseLabeler { kTypeA, kTypeBC, kFigure2, kOddRight, kEvenRight };

std::string_view to_string(BaseLabeler labeler);

struct Route {
  CaseTag tag = CaseTag::kEqualDeg3;  // classification of the input
  BaseLabeler base = BaseLabeler::kTypeA;
  CanonicalDoubleSpider residue;      // instance handed to the base labeler
  std::vector<ReductionStep> reductions;  // in application order

  // e.g. "UnequalAllUnitRight: RemoveUnitLeft -> TypeA"
  std::string describe() const;
};

// Labels an instance that one of the base labelers handles without any
// reduction. Throws PreconditionError otherwise.
EdgeLabeling label_directly(const Parameters& params, BaseLabeler* used = nullptr,
                            StepTrace* trace = nullptr);

// True when label_directly accepts the instance.
bool directly_labelable(const Parameters& params);

struct LabelResult {
  CanonicalDoubleSpider spider;
  SpiderTree layout;       // materialize_tree(spider)
  LabeledTree labeled;     // on layout.tree
  Route route;
  StepTrace trace;         // base labeler steps, addressed on route.residue
};

// Strongly antimagic labeling of any double spider. The result is verified;
// InternalError signals a failed check and should never happen.
LabelResult strongly_antimagic_label(const DoubleSpiderSpec& spec);

}  // namespace antimagic

#endif  // ANTIMAGIC_DRIVER_HPP_
