/*
 *  Copyright (C) 2026  The circenum authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#ifndef CIRCENUM_DIMACS_HPP
#define CIRCENUM_DIMACS_HPP

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "circenum/types.hpp"

namespace circenum {

enum class ParseMode { kCirc, kMcs };

// A parsed input file: DIMACS CNF plus the two partition extensions.
// Lines are, in any order after the single `p cnf <atoms> <clauses>`
// header:
//   c ...          comment
//   <ints> 0       clause
//   m <atoms> 0    atoms to minimize (union over all such lines)
//   z <atoms> 0    irrelevant atoms (union over all such lines)
// The minimized and irrelevant sets must stay disjoint, and in MCS mode the
// m/z extensions are rejected.
struct ProblemFile {
  std::uint32_t num_atoms = 0;
  std::vector<Clause> clauses;
  std::vector<Atom> minimized;   // ascending
  std::vector<Atom> irrelevant;  // ascending
  ParseMode mode = ParseMode::kCirc;

  bool operator==(const ProblemFile&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

ProblemFile parse(std::istream& in, ParseMode mode);

// Serializes back to the input syntax; parse(render(pf)) == pf.
std::string render(const ProblemFile& pf);

Theory to_theory(const ProblemFile& pf);

}  // namespace circenum

#endif  // CIRCENUM_DIMACS_HPP
