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

#ifndef CIRCENUM_MCS_HPP
#define CIRCENUM_MCS_HPP

#include <cstdint>
#include <vector>

#include "circenum/dimacs.hpp"
#include "circenum/types.hpp"

namespace circenum {

// Bijection between relaxation selectors and 1-based clause indices; the
// selector of clause i is atom num_original_atoms + i.
struct McsMap {
  std::uint32_t num_original_atoms = 0;
  std::uint32_t num_clauses = 0;

  bool is_selector(Atom a) const {
    return a.id() > num_original_atoms &&
           a.id() <= num_original_atoms + num_clauses;
  }
  std::uint32_t clause_index(Atom selector) const {
    return selector.id() - num_original_atoms;
  }
  Atom selector(std::uint32_t clause_index) const {
    return Atom(num_original_atoms + clause_index);
  }
};

// A CNF recast as a circumscription problem whose preferred models are the
// minimal correction subsets: every clause gets a fresh selector appended,
// the selectors are minimized and the original atoms are irrelevant.  A
// preferred model then makes exactly a minimal set of selectors true, one
// per clause whose removal is required.
struct McsProblem {
  Theory relaxed;
  std::vector<Atom> minimized;   // the selectors, ascending
  std::vector<Atom> irrelevant;  // the original atoms, ascending
  McsMap map;
};

McsProblem mcs_transform(const ProblemFile& pf);

}  // namespace circenum

#endif  // CIRCENUM_MCS_HPP
