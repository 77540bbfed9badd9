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

#ifndef CIRCENUM_ENUMERATE_HPP
#define CIRCENUM_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "circenum/solver.hpp"
#include "circenum/types.hpp"

namespace circenum {

// Receives the projection of one model (its true atoms among the visible
// ones, ascending).  Returning false stops the enumeration.
using ProjectionSink = std::function<bool(const std::vector<Atom>&)>;

struct EnumerateStats {
  std::uint64_t solve_calls = 0;
  std::size_t peak_stack = 0;
};

// Enumerates every model of the solver's theory extending `assumptions`,
// delivering each model's projection onto `visible` to `sink`.  Uses an
// assumption stack with literal flipping instead of blocking clauses: after
// a model is found its branching literals are pushed, and exhausted branches
// are complemented in place, with unsatisfiable-core backjumping.  The
// theory is left unchanged and the stack height stays bounded by the atom
// count, so the walk runs in polynomial space.  The input assumptions sit
// below the stack guard and are never complemented.  Returns the number of
// models delivered; `limit` caps it.
std::uint64_t enumerate_models(Solver& solver,
                               const std::vector<Atom>& visible,
                               std::span<const Literal> assumptions,
                               std::optional<std::uint64_t> limit,
                               const ProjectionSink& sink,
                               EnumerateStats* stats = nullptr);

}  // namespace circenum

#endif  // CIRCENUM_ENUMERATE_HPP
