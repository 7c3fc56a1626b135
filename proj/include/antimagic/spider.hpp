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

#ifndef ANTIMAGIC_SPIDER_HPP_
#define ANTIMAGIC_SPIDER_HPP_

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

// A double spider as the user describes it: a core path joining two hubs and
// the pendant paths hanging off each hub. Nothing is assumed about order.
struct DoubleSpiderSpec {
  int core_length = 0;
  std::vector<int> left_lengths;
  std::vector<int> right_lengths;

  // Throws InvalidInput unless core_length >= 1, each side has at least two
  // paths, and all lengths are positive.
  void validate() const;
  int edge_count() const;
};

// The oriented, sorted representative of a double spider. The left hub has at
// least as many pendant paths as the right hub; both sides are ascending.
struct CanonicalDoubleSpider {
  int core_length = 0;
  std::vector<int> left_lengths;
  std::vector<int> right_lengths;
  // True when canonicalization exchanged the user's left and right sides.
  bool swapped = false;

  int edge_count() const;
  DoubleSpiderSpec as_spec() const {
    return {core_length, left_lengths, right_lengths};
  }
  std::string to_string() const;

  // Shape equality; the swapped flag is provenance, not shape.
  friend bool operator==(const CanonicalDoubleSpider& x,
                         const CanonicalDoubleSpider& y) {
    return x.core_length == y.core_length &&
           x.left_lengths == y.left_lengths &&
           x.right_lengths == y.right_lengths;
  }
};

CanonicalDoubleSpider canonicalize(const DoubleSpiderSpec& spec);

// True when `spider` is already its own canonical form.
bool is_canonical(const CanonicalDoubleSpider& spider);

// Counts, half-lengths and prefix sums of a canonical double spider. Right
// pendant paths split into odd lengths 2x+1 and even lengths 2y; left paths
// into odd lengths 2w+1 (w >= 1), even lengths 2z, and unit paths. All half
// length sequences are ascending.
//
// Prefix sums take a 1-based count i and return 0 for i = 0:
//   right_odd_odd_edges(i)   = sum_{k<=i} (x_k + 1)   odd-position edges
//   right_odd_even_edges(i)  = sum_{k<=i} x_k         even-position edges
//   right_even_half_sum(i)   = sum_{k<=i} y_k
//   left_odd_odd_edges(i)    = sum_{k<=i} (w_k + 1)
//   left_odd_even_edges(i)   = sum_{k<=i} w_k
//   left_even_half_sum(i)    = sum_{k<=i} z_k
struct Parameters {
  CanonicalDoubleSpider spider;

  int core_length = 0;       // s
  int right_odd_count = 0;   // a
  int right_even_count = 0;  // b
  int left_odd_count = 0;    // c, odd paths longer than one
  int left_even_count = 0;   // d
  int left_unit_count = 0;   // t

  std::vector<int> right_odd_half;   // x_1..x_a
  std::vector<int> right_even_half;  // y_1..y_b
  std::vector<int> left_odd_half;    // w_1..w_c
  std::vector<int> left_even_half;   // z_1..z_d

  int edge_count = 0;  // m
  int left_hub_degree = 0;
  int right_hub_degree = 0;

  int right_odd_odd_edges(int i) const { return at(ro_odd_, i); }
  int right_odd_even_edges(int i) const { return at(ro_even_, i); }
  int right_even_half_sum(int i) const { return at(re_half_, i); }
  int left_odd_odd_edges(int i) const { return at(lo_odd_, i); }
  int left_odd_even_edges(int i) const { return at(lo_even_, i); }
  int left_even_half_sum(int i) const { return at(le_half_, i); }

  // Edge totals per path family.
  int right_odd_edges() const;
  int right_even_edges() const;
  int left_odd_edges() const;
  int left_even_edges() const;

 private:
  friend Parameters derive_parameters(const CanonicalDoubleSpider&);
  static int at(const std::vector<int>& prefix, int i) { return prefix.at(i); }

  std::vector<int> ro_odd_, ro_even_, re_half_, lo_odd_, lo_even_, le_half_;
};

Parameters derive_parameters(const CanonicalDoubleSpider& spider);

enum class CaseTag {
  kEqualDeg3,
  kEqualDegHigh,
  kUnequalAllUnitRight,
  kUnequalOddRight,
  kUnequalEvenRight,
};

std::string_view to_string(CaseTag tag);
CaseTag classify(const Parameters& params);

// Which family an edge belongs to. Positions on right paths grow away from
// the right hub; positions on left paths grow toward the left hub.
enum class PathFamily {
  kCore,
  kRightOdd,
  kRightEven,
  kLeftOdd,
  kLeftEven,
  kLeftUnit,
};

struct EdgeAddress {
  PathFamily family = PathFamily::kCore;
  int path = 0;      // 1-based index within the family; 0 for core edges
  int position = 0;  // 1-based position on the path; 1 for unit paths

  static EdgeAddress core(int j) { return {PathFamily::kCore, 0, j}; }
  static EdgeAddress right_odd(int i, int j) {
    return {PathFamily::kRightOdd, i, j};
  }
  static EdgeAddress right_even(int i, int j) {
    return {PathFamily::kRightEven, i, j};
  }
  static EdgeAddress left_odd(int i, int j) {
    return {PathFamily::kLeftOdd, i, j};
  }
  static EdgeAddress left_even(int i, int j) {
    return {PathFamily::kLeftEven, i, j};
  }
  static EdgeAddress left_unit(int i) { return {PathFamily::kLeftUnit, i, 1}; }

  bool odd() const { return position % 2 == 1; }

  // Text form: core/<j>, R/odd/<i>/<j>, R/even/<i>/<j>, L/odd/<i>/<j>,
  // L/even/<i>/<j>, L/unit/<i>.
  std::string to_string() const;
  static EdgeAddress parse(std::string_view text);

  friend auto operator<=>(const EdgeAddress&, const EdgeAddress&) = default;
};

// True when the address names an edge of the instance described by `params`.
bool address_in_range(const Parameters& params, const EdgeAddress& address);

// Every canonical double spider with at most `max_edges` edges, ordered by
// edge count, then core length, right lengths and left lengths.
std::vector<CanonicalDoubleSpider> enumerate_instances(int max_edges);

// Streaming form of enumerate_instances; stops early if `visit` returns false.
void for_each_instance(
    int max_edges,
    const std::function<bool(const CanonicalDoubleSpider&)>& visit);

}  // namespace antimagic

#endif  // ANTIMAGIC_SPIDER_HPP_
