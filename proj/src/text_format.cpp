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

#include "antimagic/text_format.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    parts.push_back(trim(s.substr(start, at - start)));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InvalidInput("expected an integer for " + std::string(what) +
                       ", got '" + std::string(text) + "'");
  }
  return value;
}

// Non-comment lines as (key, value) pairs split at the first '='.
std::vector<std::pair<std::string_view, std::string_view>> key_values(
    std::string_view text) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput("line " + std::to_string(line_no) + ": missing '='");
    }
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

std::vector<int> parse_lengths(std::string_view text, std::string_view key) {
  std::vector<int> lengths;
  for (std::string_view part : split(text, ',')) {
    lengths.push_back(parse_int(part, key));
  }
  return lengths;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

DoubleSpiderSpec parse_instance(std::string_view text) {
  DoubleSpiderSpec spec;
  bool seen_core = false, seen_left = false, seen_right = false;
  for (const auto& [key, value] : key_values(text)) {
    auto once = [&](bool& seen) {
      if (seen) throw InvalidInput("duplicate key '" + std::string(key) + "'");
      seen = true;
    };
    if (key == "core") {
      once(seen_core);
      spec.core_length = parse_int(value, key);
    } else if (key == "left") {
      once(seen_left);
      spec.left_lengths = parse_lengths(value, key);
    } else if (key == "right") {
      once(seen_right);
      spec.right_lengths = parse_lengths(value, key);
    } else {
      throw InvalidInput("unknown key '" + std::string(key) + "'");
    }
  }
  if (!seen_core || !seen_left || !seen_right) {
    throw InvalidInput("instance needs core, left and right");
  }
  spec.validate();
  return spec;
}

std::string format_instance(const DoubleSpiderSpec& spec) {
  return "core = " + std::to_string(spec.core_length) + "\nleft = " +
         join(spec.left_lengths) + "\nright = " + join(spec.right_lengths) +
         "\n";
}

LabelingRecords parse_labeling(std::string_view text) {
  LabelingRecords out;
  bool seen_m = false;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no);
    const auto fields = split(line, ',');
    std::map<std::string_view, std::string_view> kv;
    for (std::string_view field : fields) {
      const auto eq = field.find('=');
      if (eq == std::string_view::npos) {
        throw InvalidInput(where + ": missing '='");
      }
      if (!kv.emplace(trim(field.substr(0, eq)), trim(field.substr(eq + 1))).second) {
        throw InvalidInput(where + ": repeated field");
      }
    }
    if (kv.size() == 1 && kv.count("m")) {
      if (seen_m) throw InvalidInput(where + ": duplicate m");
      seen_m = true;
      out.edge_count = parse_int(kv["m"], "m");
    } else if (kv.size() == 2 && kv.count("edge") && kv.count("label")) {
      out.records.emplace_back(EdgeAddress::parse(kv["edge"]),
                               parse_int(kv["label"], "label"));
    } else {
      throw InvalidInput(where + ": expected 'm = <int>' or "
                                 "'edge = <address>, label = <int>'");
    }
  }
  if (!seen_m) throw InvalidInput("labeling file has no 'm = <int>' line");
  return out;
}

std::string format_labeling(const SpiderTree& layout,
                            const EdgeLabeling& labeling) {
  std::ostringstream out;
  out << "m = " << layout.tree.edge_count() << '\n';
  for (EdgeId e = 0; e < layout.tree.edge_count(); ++e) {
    out << "edge = " << layout.address[e].to_string()
        << ", label = " << labeling[e] << '\n';
  }
  return out.str();
}

EdgeLabeling to_edge_labeling(const LabelingRecords& records,
                              const SpiderTree& layout) {
  const int m = layout.tree.edge_count();
  if (records.edge_count != m) {
    throw InvalidInput("labeling declares m = " +
                       std::to_string(records.edge_count) + " but " +
                       layout.spider.to_string() + " has " + std::to_string(m) +
                       " edges");
  }
  std::vector<int> labels(m, 0);
  std::vector<bool> seen(m, false);
  for (const auto& [address, label] : records.records) {
    const EdgeId e = layout.edge_of(address);
    if (seen[e]) {
      throw InvalidInput("edge " + address.to_string() + " is listed twice");
    }
    seen[e] = true;
    labels[e] = label;
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (!seen[e]) {
      throw InvalidInput("edge " + layout.address[e].to_string() +
                         " has no label");
    }
  }
  return EdgeLabeling(std::move(labels));
}

std::string export_dot(const SpiderTree& layout, const EdgeLabeling* labeling) {
  const Tree& g = layout.tree;
  if (labeling != nullptr && labeling->edge_count() != g.edge_count()) {
    throw InvalidInput("labeling does not match the instance");
  }
  std::ostringstream out;
  out << "graph double_spider {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.name(v) << "\";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  \"" << g.name(g.edge(e).u) << "\" -- \"" << g.name(g.edge(e).v)
        << '"';
    if (labeling != nullptr) out << " [label=" << (*labeling)[e] << ']';
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace antimagic
