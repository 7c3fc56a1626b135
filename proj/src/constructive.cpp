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

#include <algorithm>
#include <cstdlib>
#include <string>

#include "antimagic/errors.hpp"

// Formula-heavy code below uses the customary short names for the instance
// counts: a/b right odd/even paths, c/d left odd (>1)/even paths, t left unit
// paths, s core length, m edges. The prefix-sum helpers are
//   ro_odd(i)  = sum_{k<=i}(x_k+1)   ro_even(i) = sum_{k<=i} x_k
//   re_sum(i)  = sum_{k<=i} y_k
//   lo_odd(i)  = sum_{k<=i}(w_k+1)   lo_even(i) = sum_{k<=i} w_k
//   le_sum(i)  = sum_{k<=i} z_k
// where right odd paths have length 2x+1, right even 2y, left odd 2w+1 and
// left even 2z.

namespace antimagic {
namespace {

using A = EdgeAddress;

class LabelBuilder {
 public:
  LabelBuilder(const CanonicalDoubleSpider& spider, StepTrace* trace)
      : layout_(materialize_tree(spider)),
        labels_(layout_.tree.edge_count(), 0),
        used_(layout_.tree.edge_count() + 1, false),
        trace_(trace) {}

  int edge_count() const { return static_cast<int>(labels_.size()); }
  void step(int n) { step_ = n; }

  void set(const EdgeAddress& address, int label) {
    const auto e = layout_.find(address);
    if (!e) {
      throw InternalError("rule addressed " + address.to_string() +
                          " outside " + layout_.spider.to_string());
    }
    if (labels_[*e] != 0) {
      throw InternalError("step " + std::to_string(step_) + " relabels " +
                          address.to_string());
    }
    if (label < 1 || label > edge_count() || used_[label]) {
      throw InternalError("step " + std::to_string(step_) + " gives " +
                          address.to_string() + " label " +
                          std::to_string(label) + " (out of range or reused)");
    }
    labels_[*e] = label;
    used_[label] = true;
    if (trace_ != nullptr) trace_->push_back({step_, address, label});
  }

  EdgeLabeling finish() const {
    for (EdgeId e = 0; e < edge_count(); ++e) {
      if (labels_[e] == 0) {
        throw InternalError("rules left " + layout_.address[e].to_string() +
                            " unlabeled in " + layout_.spider.to_string());
      }
    }
    return EdgeLabeling(labels_);
  }

 private:
  SpiderTree layout_;
  std::vector<int> labels_;
  std::vector<bool> used_;
  StepTrace* trace_;
  int step_ = 0;
};

// Core edges placed before the pendant-adjacent stage (only when s >= 4).
void label_early_core(LabelBuilder& out, int s, int base) {
  if (s < 4) return;
  if (s % 2 == 0) {
    for (int j = 2; j <= s - 2; j += 2) out.set(A::core(j), base + (s - j) / 2);
  } else {
    for (int j = 3; j <= s - 2; j += 2) out.set(A::core(j), base + (j - 1) / 2);
  }
}

void label_middle_core(LabelBuilder& out, int s, int base) {
  if (s < 2) return;
  if (s % 2 == 0) {
    for (int j = 1; j <= s; j += 2) out.set(A::core(j), base + (s + 1 - j) / 2);
  } else {
    for (int j = 2; j <= s; j += 2) out.set(A::core(j), base + j / 2);
  }
}

// The largest label always goes on e_s; for odd s >= 3, m - 1 goes on e_1.
void label_final_core(LabelBuilder& out, int s, int m) {
  if (s == 1 || s % 2 == 0) {
    out.set(A::core(s), m);
  } else {
    out.set(A::core(1), m - 1);
    out.set(A::core(s), m);
  }
}

void require(bool condition, const std::string& what,
             const CanonicalDoubleSpider& spider) {
  if (!condition) throw PreconditionError(what + ": " + spider.to_string());
}

void check_claim(bool condition, const std::string& what,
                 const CanonicalDoubleSpider& spider) {
  if (!condition) throw InternalError(what + " fails for " + spider.to_string());
}

}  // namespace

int early_core_edge_count(int core_length) {
  return std::abs(core_length - 2) / 2;
}

int late_core_edge_count(int core_length) {
  return (core_length == 1 || core_length % 2 == 0) ? 1 : 2;
}

// ---------------------------------------------------------------------------
// Type (a)

bool is_type_a(const Parameters& p) {
  return p.right_odd_count == 2 && p.right_even_count == 0 &&
         p.right_odd_half[0] == 0 && p.right_odd_half[1] == 0 &&
         p.left_unit_count == 2 && p.left_odd_count == 0 &&
         p.left_even_count == 0;
}

EdgeLabeling label_type_a(const Parameters& p, StepTrace* trace) {
  require(is_type_a(p), "label_type_a needs four unit pendant paths",
          p.spider);
  const int s = p.core_length;
  LabelBuilder out(p.spider, trace);
  if (s % 2 == 1) {
    const int h = (s - 1) / 2;
    out.step(1);
    for (int j = 2; j <= s; j += 2) out.set(A::core(j), ((s + 1) - j) / 2);
    out.step(2);
    out.set(A::right_odd(1, 1), h + 1);
    out.set(A::right_odd(2, 1), h + 2);
    out.step(3);
    out.set(A::left_unit(1), h + 3);
    out.set(A::left_unit(2), h + 4);
    out.step(4);
    for (int j = 1; j <= s; j += 2) out.set(A::core(j), h + 4 + ((s + 2) - j) / 2);
  } else {
    const int h = s / 2;
    out.step(1);
    for (int j = 2; j <= s; j += 2) out.set(A::core(j), j / 2);
    out.step(2);
    out.set(A::left_unit(1), h + 1);
    out.set(A::left_unit(2), h + 2);
    out.step(3);
    out.set(A::right_odd(1, 1), h + 3);
    out.set(A::right_odd(2, 1), h + 4);
    out.step(4);
    for (int j = 1; j <= s; j += 2) out.set(A::core(j), h + 4 + (j + 1) / 2);
  }
  return out.finish();
}

// ---------------------------------------------------------------------------
// Types (b) and (c)

bool is_figure2_instance(const CanonicalDoubleSpider& spider) {
  return spider == figure2_instance();
}

CanonicalDoubleSpider figure2_instance() { return {2, {1, 3}, {1, 1}, false}; }

EdgeLabeling figure2_edge_labeling(StepTrace* trace) {
  const CanonicalDoubleSpider spider = figure2_instance();
  LabelBuilder out(spider, trace);
  out.step(0);
  out.set(A::core(1), 3);
  out.set(A::core(2), 8);
  out.set(A::left_odd(1, 3), 7);
  out.set(A::left_odd(1, 2), 2);
  out.set(A::left_odd(1, 1), 6);
  out.set(A::left_unit(1), 5);
  out.set(A::right_odd(1, 1), 1);
  out.set(A::right_odd(2, 1), 4);
  return out.finish();
}

LabeledTree figure2_labeling() {
  return make_labeled_tree(materialize_tree(figure2_instance()).tree,
                           figure2_edge_labeling());
}

bool is_type_bc(const Parameters& p) {
  if (is_figure2_instance(p.spider)) return false;
  const bool right_has_unit = p.right_odd_count >= 1 && p.right_odd_half[0] == 0;
  if (p.right_hub_degree != 3 || !right_has_unit) return false;
  const bool type_b = p.left_hub_degree == 3 && p.left_unit_count <= 1;
  const bool type_c = p.left_unit_count == 0 && p.right_odd_count == 2 &&
                      p.right_odd_half[1] == 0;
  return type_b || type_c;
}

TypeBCContext make_type_bc_context(const Parameters& p) {
  require(is_type_bc(p), "label_type_bc needs a type (b) or (c) instance",
          p.spider);
  TypeBCContext ctx;
  ctx.other_right_length = p.right_odd_count == 2
                               ? 2 * p.right_odd_half[1] + 1
                               : 2 * p.right_even_half[0];
  const int k = ctx.other_right_length;
  const int c = p.left_odd_count;
  const int d = p.left_even_count;
  const int t = p.left_unit_count;
  const int s = p.core_length;
  ctx.right_unit_first =
      (t == 1 && d == 1) ||
      (t == 1 && s == 2 && c == 1 && p.left_odd_half[0] == 1 && k >= 2);
  ctx.held_back_offset = c >= 1 ? -1 : 0;
  ctx.early_core_edges = early_core_edge_count(s);
  ctx.late_core_edges = late_core_edge_count(s);
  check_claim(k / 2 + c + ctx.held_back_offset + p.left_even_half_sum(d) + t >= 1,
              "floor(k/2) + c + w' + D + t >= 1", p.spider);
  return ctx;
}

EdgeLabeling label_type_bc(const Parameters& p, const TypeBCContext& ctx,
                           StepTrace* trace) {
  require(is_type_bc(p), "label_type_bc needs a type (b) or (c) instance",
          p.spider);
  const int c = p.left_odd_count;
  const int d = p.left_even_count;
  const int t = p.left_unit_count;
  const int s = p.core_length;
  const int m = p.edge_count;
  const int k = ctx.other_right_length;
  const int half_k = k / 2;
  const int wp = ctx.held_back_offset;
  const int s1 = ctx.early_core_edges;
  const int s2 = ctx.late_core_edges;
  auto lo_odd = [&](int i) { return p.left_odd_odd_edges(i); };
  auto lo_even = [&](int i) { return p.left_odd_even_edges(i); };
  auto le_sum = [&](int i) { return p.left_even_half_sum(i); };
  auto w = [&](int i) { return p.left_odd_half[i - 1]; };
  auto z = [&](int i) { return p.left_even_half[i - 1]; };
  const bool other_is_odd = p.right_odd_count == 2;
  auto other = [&](int j) {
    return other_is_odd ? A::right_odd(2, j) : A::right_even(1, j);
  };

  LabelBuilder out(p.spider, trace);

  out.step(1);
  for (int j = 2; j <= k; j += 2) out.set(other(j), (k + 2 - j) / 2);

  out.step(2);
  if (c >= 1) {
    for (int j = 1; j <= 2 * w(1) - 1; j += 2) {
      out.set(A::left_odd(1, j), half_k + (j + 1) / 2);
    }
    for (int i = 2; i <= c; ++i) {
      for (int j = 1; j <= 2 * w(i) + 1; j += 2) {
        out.set(A::left_odd(i, j), half_k + lo_odd(i - 1) - 1 + (j + 1) / 2);
      }
    }
  }

  out.step(3);
  label_early_core(out, s, half_k + lo_odd(c) + wp);

  out.step(4);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= 2 * z(i); j += 2) {
      out.set(A::left_even(i, j),
              half_k + lo_odd(c) + wp + s1 + le_sum(i - 1) + (j + 1) / 2);
    }
  }

  out.step(5);
  const int base5 = half_k + lo_odd(c) + wp + s1 + le_sum(d);
  if (ctx.right_unit_first) {
    out.set(A::right_odd(1, 1), base5 + 1);
    out.set(A::left_unit(1), base5 + 2);
  } else {
    if (t == 1) out.set(A::left_unit(1), base5 + t);
    out.set(A::right_odd(1, 1), base5 + t + 1);
  }

  out.step(6);
  for (int j = 1; j <= k; j += 2) {
    out.set(other(j), base5 + 1 + t + (k + 2 - j) / 2);  // ceil((k+1-j)/2)
  }

  out.step(7);
  for (int i = 1; i <= c; ++i) {
    for (int j = 2; j <= 2 * w(i); j += 2) {
      out.set(A::left_odd(i, j),
              k + 1 + lo_odd(c) + wp + s1 + le_sum(d) + t + lo_even(i - 1) + j / 2);
    }
  }

  out.step(8);
  label_middle_core(out, s, k + 1 + p.left_odd_edges() + wp + le_sum(d) + s1 + t);

  out.step(9);
  for (int i = 1; i <= d; ++i) {
    for (int j = 2; j <= 2 * z(i); j += 2) {
      out.set(A::left_even(i, j), k + 1 + p.left_odd_edges() + wp + s - s2 +
                                      le_sum(d) + t + le_sum(i - 1) + j / 2);
    }
  }

  out.step(10);
  if (c >= 1) out.set(A::left_odd(1, 2 * w(1) + 1), m - s2);

  out.step(11);
  label_final_core(out, s, m);
  return out.finish();
}

// ---------------------------------------------------------------------------
// Odd right paths, no even right path.

EdgeLabeling label_odd_right(const Parameters& p, StepTrace* trace) {
  require(p.left_hub_degree > p.right_hub_degree && p.right_even_count == 0 &&
              !p.right_odd_half.empty() && p.right_odd_half.back() >= 1,
          "label_odd_right needs deg(v_l) > deg(v_r), b = 0 and x_a >= 1",
          p.spider);
  const int a = p.right_odd_count;
  const int c = p.left_odd_count;
  const int d = p.left_even_count;
  const int t = p.left_unit_count;
  const int s = p.core_length;
  const int m = p.edge_count;
  const int s1 = early_core_edge_count(s);
  const int s2 = late_core_edge_count(s);
  auto ro_odd = [&](int i) { return p.right_odd_odd_edges(i); };
  auto ro_even = [&](int i) { return p.right_odd_even_edges(i); };
  auto lo_odd = [&](int i) { return p.left_odd_odd_edges(i); };
  auto lo_even = [&](int i) { return p.left_odd_even_edges(i); };
  auto le_sum = [&](int i) { return p.left_even_half_sum(i); };
  auto x = [&](int i) { return p.right_odd_half[i - 1]; };
  auto w = [&](int i) { return p.left_odd_half[i - 1]; };
  auto z = [&](int i) { return p.left_even_half[i - 1]; };
  const int a_all = p.right_odd_edges();
  const int c_all = p.left_odd_edges();

  LabelBuilder out(p.spider, trace);

  // e^{r,odd}_{a,1} is held back so the right hub sum ends up large.
  out.step(1);
  for (int i = 1; i <= a - 1; ++i) {
    for (int j = 1; j <= 2 * x(i) + 1; j += 2) {
      out.set(A::right_odd(i, j), ro_odd(i - 1) + (j + 1) / 2);
    }
  }
  for (int j = 3; j <= 2 * x(a) + 1; j += 2) {
    out.set(A::right_odd(a, j), ro_odd(a - 1) + (j - 1) / 2);
  }

  out.step(2);
  for (int i = 1; i <= c; ++i) {
    for (int j = 1; j <= 2 * w(i) - 1; j += 2) {
      out.set(A::left_odd(i, j), ro_odd(a) - 1 + lo_odd(i - 1) - (i - 1) + (j + 1) / 2);
    }
  }

  const int base3 = ro_odd(a) - 1 + lo_odd(c) - c;
  out.step(3);
  label_early_core(out, s, base3);

  out.step(4);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= 2 * z(i); j += 2) {
      out.set(A::left_even(i, j), base3 + s1 + le_sum(i - 1) + (j + 1) / 2);
    }
  }

  out.step(5);
  for (int i = 1; i <= t; ++i) {
    out.set(A::left_unit(i), base3 + s1 + le_sum(d) + i);
  }

  out.step(6);
  for (int i = 1; i <= a; ++i) {
    for (int j = 2; j <= 2 * x(i); j += 2) {
      out.set(A::right_odd(i, j), base3 + s1 + le_sum(d) + t + ro_even(i - 1) + j / 2);
    }
  }

  out.step(7);
  for (int i = 1; i <= c; ++i) {
    for (int j = 2; j <= 2 * w(i); j += 2) {
      out.set(A::left_odd(i, j), a_all - 1 + lo_odd(c) - c + s1 + le_sum(d) + t +
                                     lo_even(i - 1) + j / 2);
    }
  }

  out.step(8);
  label_middle_core(out, s, a_all - 1 + c_all - c + s1 + le_sum(d) + t);

  out.step(9);
  for (int i = 1; i <= d; ++i) {
    for (int j = 2; j <= 2 * z(i); j += 2) {
      out.set(A::left_even(i, j), a_all - 1 + c_all - c + s - s2 + le_sum(d) + t +
                                      le_sum(i - 1) + j / 2);
    }
  }

  out.step(10);
  out.set(A::right_odd(a, 1), m - c - s2);

  out.step(11);
  for (int i = 1; i <= c; ++i) {
    out.set(A::left_odd(i, 2 * w(i) + 1), m - c - s2 + i);
  }

  out.step(12);
  label_final_core(out, s, m);
  return out.finish();
}

// ---------------------------------------------------------------------------
// At least one even right path.

EvenCaseContext make_even_case_context(const Parameters& p) {
  require(p.left_hub_degree > p.right_hub_degree && p.right_even_count >= 1,
          "label_even_right needs deg(v_l) > deg(v_r) and b >= 1", p.spider);
  const int a = p.right_odd_count;
  const int b = p.right_even_count;
  const int t = p.left_unit_count;
  EvenCaseContext ctx;
  ctx.reordered_paths =
      std::max(0, (b - 1) - (p.left_odd_count + p.left_even_count));
  ctx.right_p2_count = static_cast<int>(
      std::count(p.right_even_half.begin(), p.right_even_half.end(), 1));
  ctx.reordered_p2 = std::min(ctx.reordered_paths, ctx.right_p2_count);
  ctx.early_units = std::max(0, ctx.reordered_p2 - 1);
  ctx.early_core_edges = early_core_edge_count(p.core_length);
  ctx.late_core_edges = late_core_edge_count(p.core_length);
  ctx.longest_path_first = p.core_length % 2 == 0 && a == 0 &&
                        p.left_odd_count == 0 && p.left_even_count == 0 &&
                        t == 3 && b == 2 && ctx.right_p2_count == 0;
  if (ctx.reordered_paths > 0) {
    check_claim(t > a + 1 + ctx.reordered_paths &&
                    a + 1 + ctx.reordered_paths > ctx.reordered_p2,
                "t > a + 1 + alpha > beta", p.spider);
  }
  return ctx;
}

EdgeLabeling label_even_right(const Parameters& p, const EvenCaseContext& ctx,
                              StepTrace* trace) {
  require(p.left_hub_degree > p.right_hub_degree && p.right_even_count >= 1,
          "label_even_right needs deg(v_l) > deg(v_r) and b >= 1", p.spider);
  const int a = p.right_odd_count;
  const int b = p.right_even_count;
  const int c = p.left_odd_count;
  const int d = p.left_even_count;
  const int t = p.left_unit_count;
  const int s = p.core_length;
  const int alpha = ctx.reordered_paths;
  const int beta = ctx.reordered_p2;
  const int beta1 = ctx.early_units;
  const int shift = alpha - beta;
  const int s1 = ctx.early_core_edges;
  const int s2 = ctx.late_core_edges;
  auto ro_odd = [&](int i) { return p.right_odd_odd_edges(i); };
  auto ro_even = [&](int i) { return p.right_odd_even_edges(i); };
  auto re_sum = [&](int i) { return p.right_even_half_sum(i); };
  auto lo_odd = [&](int i) { return p.left_odd_odd_edges(i); };
  auto lo_even = [&](int i) { return p.left_odd_even_edges(i); };
  auto le_sum = [&](int i) { return p.left_even_half_sum(i); };
  auto x = [&](int i) { return p.right_odd_half[i - 1]; };
  auto y = [&](int i) { return p.right_even_half[i - 1]; };
  auto w = [&](int i) { return p.left_odd_half[i - 1]; };
  auto z = [&](int i) { return p.left_even_half[i - 1]; };
  const int a_all = p.right_odd_edges();
  const int b_all = p.right_even_edges();
  const int c_all = p.left_odd_edges();
  const int d_all = p.left_even_edges();
  const int y_b = y(b);

  LabelBuilder out(p.spider, trace);

  out.step(1);
  for (int i = 1; i <= beta; ++i) out.set(A::right_even(i, 1), 2 * i - 1);
  for (int i = 1; i <= beta - 1; ++i) out.set(A::left_unit(i), 2 * i);

  out.step(2);
  if (alpha > beta) {
    for (int i = beta + 1; i <= alpha; ++i) {
      for (int j = 4; j <= 2 * y(i); j += 2) {
        out.set(A::right_even(i, j),
                beta1 + re_sum(i - 1) - (i - (beta + 1)) + (j - 2) / 2);
      }
    }
  }
  for (int i = alpha + 1; i <= b - 1; ++i) {
    for (int j = 2; j <= 2 * y(i); j += 2) {
      out.set(A::right_even(i, j), beta1 + re_sum(i - 1) - shift + j / 2);
    }
  }

  const int base3 = beta1 + re_sum(b - 1) - shift;
  out.step(3);
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= 2 * x(i) + 1; j += 2) {
      out.set(A::right_odd(i, j), base3 + ro_odd(i - 1) + (j + 1) / 2);
    }
  }

  out.step(4);
  for (int i = 1; i <= c; ++i) {
    for (int j = 1; j <= 2 * w(i) - 1; j += 2) {
      out.set(A::left_odd(i, j),
              base3 + ro_odd(a) + lo_odd(i - 1) - (i - 1) + (j + 1) / 2);
    }
  }

  // Steps 5 and 6 (and 14 and 15 below) trade places when
  // ctx.longest_path_first is set: each block keeps its internal order but
  // the path block takes the lower labels.
  const bool swap = ctx.longest_path_first;
  const int base5 = base3 + ro_odd(a) + lo_odd(c) - c;
  const int core5 = swap ? base5 + y_b : base5;
  const int path6 = swap ? base5 : base5 + s1;
  out.step(5);
  label_early_core(out, s, core5);

  out.step(6);
  for (int j = 2; j <= 2 * y_b; j += 2) {
    out.set(A::right_even(b, j), path6 + j / 2);
  }

  const int base7 = beta1 + re_sum(b) - shift + ro_odd(a) + lo_odd(c) - c + s1;
  out.step(7);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= 2 * z(i); j += 2) {
      out.set(A::left_even(i, j), base7 + le_sum(i - 1) + (j + 1) / 2);
    }
  }

  out.step(8);
  if (alpha > beta) {
    for (int i = beta + 1; i <= alpha; ++i) {
      out.set(A::right_even(i, 1), base7 + le_sum(d) + (i - beta));
    }
  }

  // Units left over from the interleaving; with no interleaving this covers
  // every unit path.
  out.step(9);
  for (int i = std::max(1, beta); i <= t; ++i) {
    out.set(A::left_unit(i), beta1 + re_sum(b) + ro_odd(a) + lo_odd(c) - c +
                                 s1 + le_sum(d) + (i - beta1));
  }

  const int base10 = re_sum(b) + ro_odd(a) + lo_odd(c) - c + s1 + le_sum(d) + t;
  out.step(10);
  for (int i = 1; i <= beta; ++i) {
    out.set(A::right_even(i, 2), base10 + (beta + 1 - i));
  }

  out.step(11);
  if (alpha > beta) {
    for (int i = beta + 1; i <= alpha; ++i) {
      for (int j = 3; j <= 2 * y(i); j += 2) {
        out.set(A::right_even(i, j),
                base10 + re_sum(i - 1) - (i - (beta + 1)) + (j - 1) / 2);
      }
    }
  }
  for (int i = alpha + 1; i <= b - 1; ++i) {
    for (int j = 1; j <= 2 * y(i); j += 2) {
      out.set(A::right_even(i, j), base10 + re_sum(i - 1) - shift + (j + 1) / 2);
    }
  }

  const int base12 = b_all - y_b - shift + ro_odd(a) + lo_odd(c) - c + s1 +
                     le_sum(d) + t;
  out.step(12);
  for (int i = 1; i <= a; ++i) {
    for (int j = 2; j <= 2 * x(i); j += 2) {
      out.set(A::right_odd(i, j), base12 + ro_even(i - 1) + j / 2);
    }
  }

  out.step(13);
  for (int i = 1; i <= c; ++i) {
    for (int j = 2; j <= 2 * w(i); j += 2) {
      out.set(A::left_odd(i, j), b_all - y_b - shift + a_all + lo_odd(c) - c +
                                     s1 + le_sum(d) + t + lo_even(i - 1) + j / 2);
    }
  }

  const int base14 = b_all - y_b - shift + a_all + c_all - c + s1 + le_sum(d) + t;
  out.step(14);
  label_middle_core(out, s, swap ? base14 + y_b : base14);

  const int base15 = b_all - shift + a_all + c_all - c + s - s2 + le_sum(d) + t;
  const int path15 = swap ? base14 : base15 - y_b;
  out.step(15);
  for (int j = 1; j <= 2 * y_b; j += 2) {
    out.set(A::right_even(b, j), path15 + (j + 1) / 2);
  }

  out.step(16);
  for (int i = 1; i <= d; ++i) {
    for (int j = 2; j <= 2 * z(i); j += 2) {
      out.set(A::left_even(i, j), base15 + le_sum(i - 1) + j / 2);
    }
  }

  out.step(17);
  if (alpha > beta) {
    for (int i = beta + 1; i <= alpha; ++i) {
      out.set(A::right_even(i, 2), b_all - shift + a_all + c_all - c + s - s2 +
                                       d_all + t + (i - beta));
    }
  }

  out.step(18);
  for (int i = 1; i <= c; ++i) {
    out.set(A::left_odd(i, 2 * w(i) + 1),
            b_all + a_all + c_all - c + s - s2 + d_all + t + i);
  }

  out.step(19);
  label_final_core(out, s, p.edge_count);
  return out.finish();
}

}  // namespace antimagic
