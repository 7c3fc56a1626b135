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


#include "antimagic/constructive.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "antimagic/errors.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/spider_tree.hpp"
#include "test_util.hpp"

namespace antimagic {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;
using ::testing::UnorderedElementsAreArray;
using testing::params;

constexpr int kSweepEdges = 16;

struct Labeled {
  Parameters p;
  SpiderTree layout;
  EdgeLabeling labeling;
  StepTrace trace;
  VertexSumReport report;

  int at(const EdgeAddress& a) const { return labeling[layout.edge_of(a)]; }
  VertexSum sum(VertexId v) const { return report.sums[v]; }
  std::vector<VertexSum> class_sums(int degree) const {
    std::vector<VertexSum> out;
    for (VertexId v : report.degree_classes.at(degree)) {
      out.push_back(report.sums[v]);
    }
    return out;
  }
  testing::AddressLabels labels() const {
    return testing::by_address(layout, labeling);
  }
};

using Labeler = std::function<EdgeLabeling(const Parameters&, StepTrace*)>;

Labeled run(const Parameters& p, const Labeler& labeler) {
  Labeled r{p, materialize_tree(p.spider), {}, {}, {}};
  r.labeling = labeler(p, &r.trace);
  r.report = verify_strongly_antimagic(r.layout.tree, r.labeling);
  return r;
}

EdgeLabeling type_a(const Parameters& p, StepTrace* t) {
  return label_type_a(p, t);
}
EdgeLabeling type_bc(const Parameters& p, StepTrace* t) {
  return label_type_bc(p, make_type_bc_context(p), t);
}
EdgeLabeling odd_right(const Parameters& p, StepTrace* t) {
  return label_odd_right(p, t);
}
EdgeLabeling even_right(const Parameters& p, StepTrace* t) {
  return label_even_right(p, make_even_case_context(p), t);
}

std::vector<Parameters> instances_where(
    const std::function<bool(const Parameters&)>& keep) {
  std::vector<Parameters> out;
  for (const auto& c : enumerate_instances(kSweepEdges)) {
    Parameters p = derive_parameters(c);
    if (keep(p)) out.push_back(std::move(p));
  }
  return out;
}

bool is_odd_right(const Parameters& p) {
  return classify(p) == CaseTag::kUnequalOddRight;
}
bool is_even_right(const Parameters& p) {
  return classify(p) == CaseTag::kUnequalEvenRight;
}
bool is_bc(const Parameters& p) { return is_type_bc(p); }

bool pendant(const Labeled& r, EdgeId e) {
  const Edge& edge = r.layout.tree.edge(e);
  return r.layout.tree.degree(edge.u) == 1 || r.layout.tree.degree(edge.v) == 1;
}

// ---------------------------------------------------------------- type (a)

TEST(TypeATest, CoreOneLabels) {
  const Labeled r = run(params(1, {1, 1}, {1, 1}), type_a);
  EXPECT_EQ(r.labels(), (testing::AddressLabels{{"core/1", 5},
                                                {"R/odd/1/1", 1},
                                                {"R/odd/2/1", 2},
                                                {"L/unit/1", 3},
                                                {"L/unit/2", 4}}));
  EXPECT_EQ(r.sum(r.layout.left_hub), 12);
  EXPECT_EQ(r.sum(r.layout.right_hub), 8);
  EXPECT_TRUE(r.report.strong_ok);
}

TEST(TypeATest, CoreThreeLabels) {
  const Labeled r = run(params(3, {1, 1}, {1, 1}), type_a);
  EXPECT_EQ(r.at(EdgeAddress::core(1)), 7);
  EXPECT_EQ(r.at(EdgeAddress::core(2)), 1);
  EXPECT_EQ(r.at(EdgeAddress::core(3)), 6);
  EXPECT_EQ(r.at(EdgeAddress::right_odd(1, 1)), 2);
  EXPECT_EQ(r.at(EdgeAddress::right_odd(2, 1)), 3);
  EXPECT_EQ(r.at(EdgeAddress::left_unit(1)), 4);
  EXPECT_EQ(r.at(EdgeAddress::left_unit(2)), 5);
  EXPECT_EQ(r.sum(r.layout.left_hub), 16);
  EXPECT_EQ(r.sum(r.layout.right_hub), 11);
}

TEST(TypeATest, CoreTwoLabels) {
  const Labeled r = run(params(2, {1, 1}, {1, 1}), type_a);
  EXPECT_EQ(r.at(EdgeAddress::core(1)), 6);
  EXPECT_EQ(r.at(EdgeAddress::core(2)), 1);
  EXPECT_EQ(r.at(EdgeAddress::left_unit(1)), 2);
  EXPECT_EQ(r.at(EdgeAddress::left_unit(2)), 3);
  EXPECT_EQ(r.at(EdgeAddress::right_odd(1, 1)), 4);
  EXPECT_EQ(r.at(EdgeAddress::right_odd(2, 1)), 5);
  EXPECT_EQ(r.sum(r.layout.left_hub), 11);
  EXPECT_EQ(r.sum(r.layout.right_hub), 10);
  EXPECT_THAT(r.class_sums(1), UnorderedElementsAre(2, 3, 4, 5));
  EXPECT_TRUE(r.report.strong_ok);
}

class TypeAOddTest : public ::testing::TestWithParam<int> {};

TEST_P(TypeAOddTest, ClosedFormSums) {
  const int s = GetParam();
  const Labeled r = run(params(s, {1, 1}, {1, 1}), type_a);
  ASSERT_TRUE(r.report.strong_ok);
  EXPECT_EQ(r.sum(r.layout.left_hub), 2 * s + 10);
  EXPECT_EQ(r.sum(r.layout.right_hub), (3 * s + 13) / 2);
  std::vector<VertexSum> leaves, middle;
  for (int k = (s + 1) / 2; k <= (s + 7) / 2; ++k) leaves.push_back(k);
  for (int j = 2; j <= s; ++j) middle.push_back((3 * s + 11 - 2 * j) / 2);
  EXPECT_THAT(r.class_sums(1), UnorderedElementsAreArray(leaves));
  if (s > 1) {
    EXPECT_THAT(r.class_sums(2), UnorderedElementsAreArray(middle));
  }
}

INSTANTIATE_TEST_SUITE_P(OddCore, TypeAOddTest,
                         ::testing::Values(1, 3, 5, 7, 9, 11, 13, 15, 17, 19));

class TypeAEvenTest : public ::testing::TestWithParam<int> {};

TEST_P(TypeAEvenTest, StrongWithExecutedHubSums) {
  const int s = GetParam();
  const Labeled r = run(params(s, {1, 1}, {1, 1}), type_a);
  EXPECT_TRUE(r.report.strong_ok);
  EXPECT_EQ(r.sum(r.layout.left_hub), (3 * s + 16) / 2);
  EXPECT_EQ(r.sum(r.layout.right_hub), (3 * s + 14) / 2);
}

INSTANTIATE_TEST_SUITE_P(EvenCore, TypeAEvenTest,
                         ::testing::Values(2, 4, 6, 8, 10, 12, 14, 16, 18, 20));

TEST(TypeATest, RejectsOtherShapes) {
  EXPECT_FALSE(is_type_a(params(1, {1, 1, 1}, {1, 1})));
  EXPECT_FALSE(is_type_a(params(1, {2, 1}, {1, 1})));
  EXPECT_THROW(label_type_a(params(1, {2, 1}, {1, 1})), PreconditionError);
}

// ----------------------------------------------------------- Figure 2

TEST(Figure2Test, FixedLabels) {
  const LabeledTree lt = figure2_labeling();
  const SpiderTree layout = materialize_tree(figure2_instance());
  EXPECT_EQ(testing::by_address(layout, lt.labeling),
            (testing::AddressLabels{{"L/odd/1/3", 7},
                                    {"L/odd/1/2", 2},
                                    {"L/odd/1/1", 6},
                                    {"L/unit/1", 5},
                                    {"core/1", 3},
                                    {"core/2", 8},
                                    {"R/odd/1/1", 1},
                                    {"R/odd/2/1", 4}}));
  EXPECT_TRUE(lt.report.strong_ok);
  EXPECT_EQ(lt.report.sums[layout.left_hub], 15);
  EXPECT_EQ(lt.report.sums[layout.right_hub], 13);
}

TEST(Figure2Test, IsExcludedFromStepsOneToEleven) {
  EXPECT_TRUE(is_figure2_instance(testing::canon(2, {1, 3}, {1, 1})));
  EXPECT_FALSE(is_type_bc(derive_parameters(figure2_instance())));
  EXPECT_FALSE(is_figure2_instance(testing::canon(2, {1, 5}, {1, 1})));
}

// ----------------------------------------------------------- types (b)/(c)

TEST(TypeBCTest, TypeCExample) {
  const Labeled r = run(params(1, {3, 3}, {1, 1}), type_bc);
  EXPECT_EQ(r.labels(), (testing::AddressLabels{{"L/odd/1/1", 1},
                                                {"L/odd/1/2", 6},
                                                {"L/odd/1/3", 8},
                                                {"L/odd/2/1", 2},
                                                {"L/odd/2/2", 7},
                                                {"L/odd/2/3", 3},
                                                {"R/odd/1/1", 4},
                                                {"R/odd/2/1", 5},
                                                {"core/1", 9}}));
  EXPECT_EQ(r.sum(r.layout.left_hub), 20);
  EXPECT_EQ(r.sum(r.layout.right_hub), 18);
  EXPECT_THAT(r.class_sums(2), UnorderedElementsAre(14, 10, 9, 7));
  EXPECT_THAT(r.class_sums(1), UnorderedElementsAre(5, 4, 2, 1));
  EXPECT_TRUE(r.report.strong_ok);
}

TEST(TypeBCTest, TypeBWithUnitAndEvenLeft) {
  const Parameters p = params(2, {2, 1}, {1, 1});
  const TypeBCContext ctx = make_type_bc_context(p);
  EXPECT_EQ(ctx.other_right_length, 1);
  EXPECT_TRUE(ctx.right_unit_first);
  const Labeled r = run(p, type_bc);
  EXPECT_TRUE(verify_bijection(r.labeling));
  EXPECT_TRUE(r.report.strong_ok);
}

TEST(TypeBCTest, RightUnitFirstLabelsConsecutively) {
  int checked = 0;
  for (const Parameters& p : instances_where(is_bc)) {
    if (!make_type_bc_context(p).right_unit_first) continue;
    const Labeled r = run(p, type_bc);
    std::vector<TraceEntry> step5;
    for (const auto& t : r.trace) {
      if (t.step == 5) step5.push_back(t);
    }
    ASSERT_GE(step5.size(), 2u) << p.spider.to_string();
    EXPECT_EQ(step5[0].edge, EdgeAddress::right_odd(1, 1));
    EXPECT_EQ(step5[1].edge, EdgeAddress::left_unit(1));
    EXPECT_EQ(step5[1].label, step5[0].label + 1);
    ++checked;
  }
  EXPECT_GT(checked, 0);
}

TEST(TypeBCTest, ContextInvariants) {
  for (const Parameters& p : instances_where(is_bc)) {
    const TypeBCContext ctx = make_type_bc_context(p);
    const int s = p.core_length, c = p.left_odd_count, d = p.left_even_count;
    const int t = p.left_unit_count, k = ctx.other_right_length;
    const bool expected_t1 =
        (t == 1 && d == 1) ||
        (t == 1 && s == 2 && c == 1 && p.left_odd_half[0] == 1 && k >= 2);
    EXPECT_EQ(ctx.right_unit_first, expected_t1) << p.spider.to_string();
    EXPECT_EQ(ctx.held_back_offset, c >= 1 ? -1 : 0);
    EXPECT_EQ(ctx.early_core_edges, std::abs(s - 2) / 2);
    EXPECT_EQ(ctx.late_core_edges, (s == 1 || s % 2 == 0) ? 1 : 2);
    EXPECT_GE(k / 2 + c + ctx.held_back_offset + p.left_even_half_sum(d) + t, 1);
  }
}

TEST(TypeBCTest, AnchorsOnEveryInstance) {
  const auto all = instances_where(is_bc);
  ASSERT_FALSE(all.empty());
  for (const Parameters& p : all) {
    const Labeled r = run(p, type_bc);
    const int m = p.edge_count;
    ASSERT_TRUE(r.report.strong_ok) << p.spider.to_string();
    EXPECT_EQ(r.at(EdgeAddress::core(p.core_length)), m);
    if (p.left_odd_count >= 1) {
      const int w1 = p.left_odd_half[0];
      EXPECT_EQ(r.at(EdgeAddress::left_odd(1, 2 * w1 + 1)),
                m - make_type_bc_context(p).late_core_edges);
    }
  }
}

TEST(TypeBCTest, RejectsOtherShapes) {
  EXPECT_FALSE(is_type_bc(params(1, {1, 1, 1}, {3, 1})));
  EXPECT_THROW(make_type_bc_context(params(1, {1, 1, 1}, {3, 1})),
               PreconditionError);
}

// ------------------------------------------------------------- odd right

TEST(OddRightTest, Example) {
  const Labeled r = run(params(1, {1, 1, 1}, {3, 1}), odd_right);
  EXPECT_EQ(r.labels(), (testing::AddressLabels{{"R/odd/1/1", 1},
                                                {"R/odd/2/1", 7},
                                                {"R/odd/2/2", 6},
                                                {"R/odd/2/3", 2},
                                                {"L/unit/1", 3},
                                                {"L/unit/2", 4},
                                                {"L/unit/3", 5},
                                                {"core/1", 8}}));
  EXPECT_THAT(r.class_sums(1), UnorderedElementsAre(1, 2, 3, 4, 5));
  EXPECT_THAT(r.class_sums(2), UnorderedElementsAre(13, 8));
  EXPECT_EQ(r.sum(r.layout.right_hub), 16);
  EXPECT_EQ(r.sum(r.layout.left_hub), 20);
  EXPECT_TRUE(r.report.strong_ok);
}

TEST(OddRightTest, AnchorsOnEveryInstance) {
  const auto all = instances_where(is_odd_right);
  ASSERT_FALSE(all.empty());
  for (const Parameters& p : all) {
    const Labeled r = run(p, odd_right);
    ASSERT_TRUE(r.report.strong_ok) << p.spider.to_string();
    const int m = p.edge_count, s = p.core_length, c = p.left_odd_count;
    const int a = p.right_odd_count, d = p.left_even_count;
    const int t = p.left_unit_count;
    const int s2 = late_core_edge_count(s);
    EXPECT_EQ(r.at(EdgeAddress::core(s)), m);
    EXPECT_EQ(r.at(EdgeAddress::right_odd(a, 1)), m - c - s2);
    EXPECT_EQ(r.at(EdgeAddress::right_odd(a, 1)),
              (s == 1 || s % 2 == 0) ? m - c - 1 : m - c - 2);
    for (int i = 1; i <= c; ++i) {
      EXPECT_EQ(r.at(EdgeAddress::left_odd(i, 2 * p.left_odd_half[i - 1] + 1)),
                m - c - s2 + i);
    }
    // Steps 1-5 fill an initial segment and place every pendant edge.
    const int first_block = p.right_odd_odd_edges(a) - 1 +
                            p.left_odd_odd_edges(c) - c +
                            early_core_edge_count(s) +
                            p.left_even_half_sum(d) + t;
    std::set<int> early;
    for (const auto& e : r.trace) {
      if (e.step <= 5) early.insert(e.label);
    }
    EXPECT_EQ(static_cast<int>(early.size()), first_block);
    if (!early.empty()) {
      EXPECT_EQ(*early.rbegin(), first_block);
    }
    for (EdgeId e = 0; e < r.layout.tree.edge_count(); ++e) {
      if (pendant(r, e)) {
        EXPECT_LE(r.labeling[e], first_block);
      }
    }
  }
}

// ------------------------------------------------------------ even right

TEST(EvenRightTest, Example) {
  const Parameters p = params(1, {1, 1, 1}, {2, 1});
  const EvenCaseContext ctx = make_even_case_context(p);
  EXPECT_EQ(ctx.reordered_paths, 0);
  EXPECT_EQ(ctx.reordered_p2, 0);
  const Labeled r = run(p, even_right);
  EXPECT_EQ(r.labels(), (testing::AddressLabels{{"R/odd/1/1", 1},
                                                {"R/even/1/1", 6},
                                                {"R/even/1/2", 2},
                                                {"L/unit/1", 3},
                                                {"L/unit/2", 4},
                                                {"L/unit/3", 5},
                                                {"core/1", 7}}));
  EXPECT_THAT(r.class_sums(1), UnorderedElementsAre(1, 2, 3, 4, 5));
  EXPECT_THAT(r.class_sums(2), UnorderedElementsAre(8));
  EXPECT_EQ(r.sum(r.layout.right_hub), 14);
  EXPECT_EQ(r.sum(r.layout.left_hub), 19);
}

bool in_tie_family(const Parameters& p) {
  return p.core_length % 2 == 0 && p.right_odd_count == 0 &&
         p.left_odd_count == 0 && p.left_even_count == 0 &&
         p.left_unit_count == 3 && p.right_even_count == 2 &&
         p.right_even_half[0] >= 2;
}

TEST(EvenRightTest, ContextInvariants) {
  for (const Parameters& p : instances_where(is_even_right)) {
    const EvenCaseContext ctx = make_even_case_context(p);
    const int a = p.right_odd_count, b = p.right_even_count;
    const int c = p.left_odd_count, d = p.left_even_count;
    const int t = p.left_unit_count;
    const int alpha = std::max(0, (b - 1) - (c + d));
    const int b2 = static_cast<int>(std::count(p.right_even_half.begin(),
                                               p.right_even_half.end(), 1));
    const int beta = std::min(alpha, b2);
    EXPECT_EQ(ctx.reordered_paths, alpha) << p.spider.to_string();
    EXPECT_EQ(ctx.right_p2_count, b2);
    EXPECT_EQ(ctx.reordered_p2, beta);
    EXPECT_EQ(ctx.early_units, std::max(0, beta - 1));
    if (alpha > 0) {
      EXPECT_GT(t, a + 1 + alpha);
      EXPECT_GT(a + 1 + alpha, beta);
    }
    EXPECT_EQ(ctx.longest_path_first, in_tie_family(p)) << p.spider.to_string();
  }
}

TEST(EvenRightTest, AnchorsOnEveryInstance) {
  const auto all = instances_where(is_even_right);
  ASSERT_FALSE(all.empty());
  for (const Parameters& p : all) {
    const Labeled r = run(p, even_right);
    ASSERT_TRUE(r.report.strong_ok) << p.spider.to_string();
    const int m = p.edge_count, s = p.core_length, b = p.right_even_count;
    const EvenCaseContext ctx = make_even_case_context(p);
    EXPECT_EQ(r.at(EdgeAddress::core(s)), m);
    if (s >= 3 && s % 2 == 1) {
      EXPECT_EQ(r.at(EdgeAddress::core(1)), m - 1);
    }
    for (int i = 1; i <= ctx.reordered_p2; ++i) {
      EXPECT_EQ(r.at(EdgeAddress::right_even(i, 1)), 2 * i - 1);
    }
    for (int i = 1; i < ctx.reordered_p2; ++i) {
      EXPECT_EQ(r.at(EdgeAddress::left_unit(i)), 2 * i);
    }
    // The reordered family gives up this relation; it is what moves v_r.
    if (s >= 2 && !ctx.longest_path_first) {
      EXPECT_GT(r.at(EdgeAddress::right_even(b, 1)),
                r.at(EdgeAddress::core(s - 1)))
          << p.spider.to_string();
    }
  }
}

TEST(EvenRightTest, SomeInstanceHasReorderedP2s) {
  const auto all = instances_where([](const Parameters& p) {
    return is_even_right(p) && make_even_case_context(p).reordered_p2 >= 2;
  });
  EXPECT_FALSE(all.empty());
}

TEST(EvenRightTest, PlainStepOrderTiesTheHubs) {
  const Parameters p = params(2, {1, 1, 1}, {4, 4});
  EvenCaseContext ctx = make_even_case_context(p);
  ASSERT_TRUE(ctx.longest_path_first);
  ctx.longest_path_first = false;
  const SpiderTree layout = materialize_tree(p.spider);
  const VertexSumReport plain =
      evaluate(layout.tree, label_even_right(p, ctx));
  EXPECT_TRUE(plain.bijection_ok);
  EXPECT_EQ(plain.sums[layout.left_hub], 27);
  EXPECT_EQ(plain.sums[layout.right_hub], 27);
  EXPECT_FALSE(plain.strong_ok);

  const Labeled fixed = run(p, even_right);
  EXPECT_TRUE(fixed.report.strong_ok);
  EXPECT_GT(fixed.sum(fixed.layout.left_hub), fixed.sum(fixed.layout.right_hub));
}

TEST(EvenRightTest, PlainStepOrderFailsOnlyInTieFamily) {
  for (const Parameters& p : instances_where(is_even_right)) {
    EvenCaseContext ctx = make_even_case_context(p);
    ctx.longest_path_first = false;
    const SpiderTree layout = materialize_tree(p.spider);
    const bool ok = evaluate(layout.tree, label_even_right(p, ctx)).strong_ok;
    EXPECT_EQ(ok, !in_tie_family(p)) << p.spider.to_string();
  }
}

// ------------------------------------------------ step-range accounting

// Rank of a step in label order: the reordered even case takes Steps 6 and
// 15 before Steps 5 and 14.
int step_rank(int step, bool reordered) {
  if (!reordered) return step;
  switch (step) {
    case 5: return 6;
    case 6: return 5;
    case 14: return 15;
    case 15: return 14;
    default: return step;
  }
}

void expect_contiguous_steps(const Labeled& r, bool reordered) {
  const int m = r.p.edge_count;
  ASSERT_EQ(static_cast<int>(r.trace.size()), m) << r.p.spider.to_string();
  std::map<int, std::vector<int>> by_rank;
  std::set<EdgeAddress> edges;
  for (const auto& e : r.trace) {
    by_rank[step_rank(e.step, reordered)].push_back(e.label);
    edges.insert(e.edge);
    EXPECT_EQ(r.at(e.edge), e.label);
  }
  EXPECT_EQ(static_cast<int>(edges.size()), m);
  int next = 1;
  for (auto& [rank, labels] : by_rank) {
    std::sort(labels.begin(), labels.end());
    for (int l : labels) {
      EXPECT_EQ(l, next++) << r.p.spider.to_string() << " step rank " << rank;
    }
  }
}

TEST(StepRangeTest, TypeA) {
  for (int s = 1; s <= 12; ++s) {
    expect_contiguous_steps(run(params(s, {1, 1}, {1, 1}), type_a), false);
  }
}

TEST(StepRangeTest, TypeBC) {
  for (const Parameters& p : instances_where(is_bc)) {
    expect_contiguous_steps(run(p, type_bc), false);
  }
}

TEST(StepRangeTest, OddRight) {
  for (const Parameters& p : instances_where(is_odd_right)) {
    expect_contiguous_steps(run(p, odd_right), false);
  }
}

TEST(StepRangeTest, EvenRight) {
  for (const Parameters& p : instances_where(is_even_right)) {
    expect_contiguous_steps(run(p, even_right),
                            make_even_case_context(p).longest_path_first);
  }
}

// ----------------------------------------------------- pendant ordering

// Pendant edges placed by step `last` stay below every later label. At most
// `allowed_late` pendant edges may come after `last`.
void expect_pendants_first(const Labeled& r, int last, int allowed_late) {
  int max_pendant = 0;
  int min_later = r.p.edge_count + 1;
  int late = 0;
  for (const auto& e : r.trace) {
    const bool is_pendant = pendant(r, r.layout.edge_of(e.edge));
    if (e.step > last) {
      if (is_pendant) {
        ++late;
      } else {
        min_later = std::min(min_later, e.label);
      }
    } else if (is_pendant) {
      max_pendant = std::max(max_pendant, e.label);
    }
  }
  EXPECT_LE(late, allowed_late) << r.p.spider.to_string();
  EXPECT_LT(max_pendant, min_later) << r.p.spider.to_string();
}

TEST(PendantOrderTest, OddRightByStepFive) {
  for (const Parameters& p : instances_where(is_odd_right)) {
    expect_pendants_first(run(p, odd_right), 5, 0);
  }
}

TEST(PendantOrderTest, EvenRightByStepTen) {
  for (const Parameters& p : instances_where(is_even_right)) {
    expect_pendants_first(run(p, even_right), 10, 0);
  }
}

TEST(PendantOrderTest, TypeBCAllowsOnePendantAtStepSix) {
  for (const Parameters& p : instances_where(is_bc)) {
    const Labeled r = run(p, type_bc);
    expect_pendants_first(r, 5, 1);
    for (const auto& e : r.trace) {
      if (e.step > 5 && pendant(r, r.layout.edge_of(e.edge))) {
        EXPECT_EQ(e.step, 6) << p.spider.to_string();
      }
    }
  }
}

// ---------------------------------------------------------- core counts

TEST(CoreCountTest, EarlyAndLate) {
  EXPECT_EQ(early_core_edge_count(1), 0);
  EXPECT_EQ(early_core_edge_count(2), 0);
  EXPECT_EQ(early_core_edge_count(5), 1);
  EXPECT_EQ(early_core_edge_count(8), 3);
  EXPECT_EQ(late_core_edge_count(1), 1);
  EXPECT_EQ(late_core_edge_count(4), 1);
  EXPECT_EQ(late_core_edge_count(3), 2);
  EXPECT_EQ(late_core_edge_count(7), 2);
}

}  // namespace
}  // namespace antimagic
