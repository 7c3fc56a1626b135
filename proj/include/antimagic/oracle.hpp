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

#ifndef ANTIMAGIC_ORACLE_HPP_
#define ANTIMAGIC_ORACLE_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

#include "antimagic/labeling.hpp"
#include "antimagic/tree.hpp"

namespace antimagic {

struct SearchBudget {
  int max_edges = 10;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus { kFound, kNone, kBudgetExhausted };

std::string_view to_string(SearchStatus status);

struct SearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<EdgeLabeling> labeling;  // set iff status == kFound
  std::uint64_t nodes = 0;               // search nodes expanded
};

// Exhaustive backtracking search. Labels m, m-1, ..., 1 are placed in turn;
// the edge tried first is the one next to the vertex with the fewest
// unlabeled edges. kNone is only returned after the whole space was covered.
//
// Throws BudgetError if the tree has more than budget.max_edges edges.
SearchResult find_strongly_antimagic(const Tree& tree,
                                     const SearchBudget& budget = {});
SearchResult find_antimagic(const Tree& tree, const SearchBudget& budget = {});

}  // namespace antimagic

#endif  // ANTIMAGIC_ORACLE_HPP_
