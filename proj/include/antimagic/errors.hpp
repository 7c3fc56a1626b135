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

#ifndef ANTIMAGIC_ERRORS_HPP_
#define ANTIMAGIC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace antimagic {

// Malformed user input: bad instance shape, unparsable files, address out of
// range.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller handed an operation something outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A labeling is not a bijection onto 1..m.
class NotBijectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The tree exceeds the search budget before the search even starts.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something the verifier rejects. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace antimagic

#endif  // ANTIMAGIC_ERRORS_HPP_
