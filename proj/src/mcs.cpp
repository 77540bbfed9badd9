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

#include "circenum/mcs.hpp"

namespace circenum {

McsProblem mcs_transform(const ProblemFile& pf) {
  McsProblem out;
  out.map.num_original_atoms = pf.num_atoms;
  out.map.num_clauses = static_cast<std::uint32_t>(pf.clauses.size());

  out.relaxed.num_atoms = pf.num_atoms + out.map.num_clauses;
  out.relaxed.clauses.reserve(pf.clauses.size());
  for (std::size_t i = 0; i < pf.clauses.size(); ++i) {
    Clause relaxed = pf.clauses[i];
    relaxed.push_back(
        Literal::positive(out.map.selector(static_cast<std::uint32_t>(i + 1))));
    out.relaxed.clauses.push_back(std::move(relaxed));
  }

  out.minimized.reserve(out.map.num_clauses);
  for (std::uint32_t i = 1; i <= out.map.num_clauses; ++i) {
    out.minimized.push_back(out.map.selector(i));
  }
  out.irrelevant.reserve(pf.num_atoms);
  for (std::uint32_t a = 1; a <= pf.num_atoms; ++a) {
    out.irrelevant.push_back(Atom(a));
  }
  return out;
}

}  // namespace circenum
