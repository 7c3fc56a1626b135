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

#include "antimagic/spider.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <tuple>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

std::string join(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

int total(const std::vector<int>& values) {
  return std::accumulate(values.begin(), values.end(), 0);
}

std::vector<int> prefix_sums(const std::vector<int>& halves, int extra) {
  std::vector<int> out(halves.size() + 1, 0);
  for (size_t i = 0; i < halves.size(); ++i) {
    out[i + 1] = out[i] + halves[i] + extra;
  }
  return out;
}

// Nondecreasing sequences of at least two positive parts summing to n.
void partitions(int n, int min_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (current.size() >= 2) out.push_back(current);
    return;
  }
  for (int part = min_part; part <= n; ++part) {
    current.push_back(part);
    partitions(n - part, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  if (n >= 2) partitions(n, 1, current, out);
  return out;
}

int parse_index(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) {
    throw InvalidInput("bad index '" + std::string(text) + "' in edge address");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

void DoubleSpiderSpec::validate() const {
  if (core_length < 1) throw InvalidInput("core length must be at least 1");
  if (left_lengths.size() < 2 || right_lengths.size() < 2) {
    throw InvalidInput(
        "each hub needs at least two pendant paths (hub degree >= 3)");
  }
  for (const auto* side : {&left_lengths, &right_lengths}) {
    for (int len : *side) {
      if (len < 1) throw InvalidInput("path lengths must be positive");
    }
  }
}

int DoubleSpiderSpec::edge_count() const {
  return core_length + total(left_lengths) + total(right_lengths);
}

int CanonicalDoubleSpider::edge_count() const {
  return core_length + total(left_lengths) + total(right_lengths);
}

std::string CanonicalDoubleSpider::to_string() const {
  return "core=" + std::to_string(core_length) + " left=" + join(left_lengths) +
         " right=" + join(right_lengths);
}

CanonicalDoubleSpider canonicalize(const DoubleSpiderSpec& spec) {
  spec.validate();
  CanonicalDoubleSpider out{spec.core_length, spec.left_lengths,
                            spec.right_lengths, false};
  std::sort(out.left_lengths.begin(), out.left_lengths.end());
  std::sort(out.right_lengths.begin(), out.right_lengths.end());

  auto& left = out.left_lengths;
  auto& right = out.right_lengths;
  bool swap_sides = false;
  if (left.size() != right.size()) {
    swap_sides = left.size() < right.size();
  } else {
    const int shortest = std::min(left.front(), right.front());
    const auto left_copies = std::count(left.begin(), left.end(), shortest);
    const auto right_copies = std::count(right.begin(), right.end(), shortest);
    if (left_copies != right_copies) {
      swap_sides = left_copies > right_copies;
    } else {
      swap_sides = left < right;
    }
  }
  if (swap_sides) {
    std::swap(left, right);
    out.swapped = true;
  }
  return out;
}

bool is_canonical(const CanonicalDoubleSpider& spider) {
  return canonicalize(spider.as_spec()) == spider;
}

int Parameters::right_odd_edges() const {
  return right_odd_odd_edges(right_odd_count) +
         right_odd_even_edges(right_odd_count);
}
int Parameters::right_even_edges() const {
  return 2 * right_even_half_sum(right_even_count);
}
int Parameters::left_odd_edges() const {
  return left_odd_odd_edges(left_odd_count) +
         left_odd_even_edges(left_odd_count);
}
int Parameters::left_even_edges() const {
  return 2 * left_even_half_sum(left_even_count);
}

Parameters derive_parameters(const CanonicalDoubleSpider& spider) {
  if (!is_canonical(spider)) {
    throw PreconditionError("derive_parameters needs a canonical instance: " +
                            spider.to_string());
  }
  Parameters p;
  p.spider = spider;
  p.core_length = spider.core_length;
  for (int len : spider.right_lengths) {
    if (len % 2 == 1) {
      p.right_odd_half.push_back((len - 1) / 2);
    } else {
      p.right_even_half.push_back(len / 2);
    }
  }
  for (int len : spider.left_lengths) {
    if (len == 1) {
      ++p.left_unit_count;
    } else if (len % 2 == 1) {
      p.left_odd_half.push_back((len - 1) / 2);
    } else {
      p.left_even_half.push_back(len / 2);
    }
  }
  p.right_odd_count = static_cast<int>(p.right_odd_half.size());
  p.right_even_count = static_cast<int>(p.right_even_half.size());
  p.left_odd_count = static_cast<int>(p.left_odd_half.size());
  p.left_even_count = static_cast<int>(p.left_even_half.size());

  p.ro_odd_ = prefix_sums(p.right_odd_half, 1);
  p.ro_even_ = prefix_sums(p.right_odd_half, 0);
  p.re_half_ = prefix_sums(p.right_even_half, 0);
  p.lo_odd_ = prefix_sums(p.left_odd_half, 1);
  p.lo_even_ = prefix_sums(p.left_odd_half, 0);
  p.le_half_ = prefix_sums(p.left_even_half, 0);

  p.edge_count = p.right_odd_edges() + p.right_even_edges() + p.core_length +
                 p.left_odd_edges() + p.left_even_edges() + p.left_unit_count;
  p.left_hub_degree =
      p.left_odd_count + p.left_even_count + p.left_unit_count + 1;
  p.right_hub_degree = p.right_odd_count + p.right_even_count + 1;
  return p;
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kEqualDeg3:
      return "EqualDeg3";
    case CaseTag::kEqualDegHigh:
      return "EqualDegHigh";
    case CaseTag::kUnequalAllUnitRight:
      return "UnequalAllUnitRight";
    case CaseTag::kUnequalOddRight:
      return "UnequalOddRight";
    case CaseTag::kUnequalEvenRight:
      return "UnequalEvenRight";
  }
  return "?";
}

CaseTag classify(const Parameters& p) {
  if (p.left_hub_degree == p.right_hub_degree) {
    return p.left_hub_degree == 3 ? CaseTag::kEqualDeg3
                                  : CaseTag::kEqualDegHigh;
  }
  if (p.right_even_count >= 1) return CaseTag::kUnequalEvenRight;
  const bool long_odd = std::any_of(p.right_odd_half.begin(),
                                    p.right_odd_half.end(),
                                    [](int x) { return x >= 1; });
  return long_odd ? CaseTag::kUnequalOddRight
                  : CaseTag::kUnequalAllUnitRight;
}

std::string EdgeAddress::to_string() const {
  const std::string i = std::to_string(path);
  const std::string j = std::to_string(position);
  switch (family) {
    case PathFamily::kCore:
      return "core/" + j;
    case PathFamily::kRightOdd:
      return "R/odd/" + i + "/" + j;
    case PathFamily::kRightEven:
      return "R/even/" + i + "/" + j;
    case PathFamily::kLeftOdd:
      return "L/odd/" + i + "/" + j;
    case PathFamily::kLeftEven:
      return "L/even/" + i + "/" + j;
    case PathFamily::kLeftUnit:
      return "L/unit/" + i;
  }
  return "?";
}

EdgeAddress EdgeAddress::parse(std::string_view text) {
  const auto parts = split(text, '/');
  if (parts.size() == 2 && parts[0] == "core") {
    return core(parse_index(parts[1]));
  }
  if (parts.size() == 3 && parts[0] == "L" && parts[1] == "unit") {
    return left_unit(parse_index(parts[2]));
  }
  if (parts.size() == 4) {
    const int i = parse_index(parts[2]);
    const int j = parse_index(parts[3]);
    if (parts[0] == "R" && parts[1] == "odd") return right_odd(i, j);
    if (parts[0] == "R" && parts[1] == "even") return right_even(i, j);
    if (parts[0] == "L" && parts[1] == "odd") return left_odd(i, j);
    if (parts[0] == "L" && parts[1] == "even") return left_even(i, j);
  }
  throw InvalidInput("unrecognised edge address '" + std::string(text) + "'");
}

bool address_in_range(const Parameters& p, const EdgeAddress& address) {
  const int i = address.path;
  const int j = address.position;
  auto within = [](int value, int hi) { return value >= 1 && value <= hi; };
  switch (address.family) {
    case PathFamily::kCore:
      return i == 0 && within(j, p.core_length);
    case PathFamily::kRightOdd:
      return within(i, p.right_odd_count) &&
             within(j, 2 * p.right_odd_half[i - 1] + 1);
    case PathFamily::kRightEven:
      return within(i, p.right_even_count) &&
             within(j, 2 * p.right_even_half[i - 1]);
    case PathFamily::kLeftOdd:
      return within(i, p.left_odd_count) &&
             within(j, 2 * p.left_odd_half[i - 1] + 1);
    case PathFamily::kLeftEven:
      return within(i, p.left_even_count) &&
             within(j, 2 * p.left_even_half[i - 1]);
    case PathFamily::kLeftUnit:
      return within(i, p.left_unit_count) && j == 1;
  }
  return false;
}

void for_each_instance(
    int max_edges,
    const std::function<bool(const CanonicalDoubleSpider&)>& visit) {
  for (int m = 5; m <= max_edges; ++m) {
    std::vector<CanonicalDoubleSpider> batch;
    for (int s = 1; s <= m - 4; ++s) {
      for (int right_total = 2; right_total <= m - s - 2; ++right_total) {
        const auto rights = partitions_of(right_total);
        const auto lefts = partitions_of(m - s - right_total);
        for (const auto& right : rights) {
          for (const auto& left : lefts) {
            if (left.size() < right.size()) continue;
            CanonicalDoubleSpider candidate{s, left, right, false};
            if (is_canonical(candidate)) batch.push_back(std::move(candidate));
          }
        }
      }
    }
    std::sort(batch.begin(), batch.end(), [](const auto& x, const auto& y) {
      return std::tie(x.core_length, x.right_lengths, x.left_lengths) <
             std::tie(y.core_length, y.right_lengths, y.left_lengths);
    });
    for (const auto& spider : batch) {
      if (!visit(spider)) return;
    }
  }
}

std::vector<CanonicalDoubleSpider> enumerate_instances(int max_edges) {
  std::vector<CanonicalDoubleSpider> out;
  for_each_instance(max_edges, [&](const CanonicalDoubleSpider& spider) {
    out.push_back(spider);
    return true;
  });
  return out;
}

}  // namespace antimagic
