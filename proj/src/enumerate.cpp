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

#include "circenum/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace circenum {

std::uint64_t enumerate_models(Solver& solver,
                               const std::vector<Atom>& visible,
                               std::span<const Literal> assumptions,
                               std::optional<std::uint64_t> limit,
                               const ProjectionSink& sink,
                               EnumerateStats* stats) {
  if (limit && *limit == 0) return 0;

  std::vector<Atom> vis(visible);
  std::sort(vis.begin(), vis.end());
  vis.erase(std::unique(vis.begin(), vis.end()), vis.end());

  std::vector<Literal> stack(assumptions.begin(), assumptions.end());
  // Per-atom bookkeeping: which polarity (if any) of an atom is on the
  // stack, and whether the stack entry is the result of a flip.
  enum : std::uint8_t { kAbsent = 0, kPositive = 1, kNegative = 2 };
  std::vector<std::uint8_t> on_stack(solver.num_atoms() + 1, kAbsent);
  std::vector<std::uint8_t> flipped(solver.num_atoms() + 1, 0);
  auto polarity_of = [](Literal l) -> std::uint8_t {
    return l.is_negative() ? kNegative : kPositive;
  };
  for (Literal l : stack) on_stack[l.atom().id()] = polarity_of(l);
  stack.push_back(kNotBot);  // guard protecting the input assumptions
  on_stack[kBotAtom.id()] = kNegative;

  std::uint64_t emitted = 0;
  std::size_t peak = stack.size();
  std::uint64_t solves = 0;
  std::vector<Atom> projection;

  while (stack.back() != kBot) {
    ++solves;
    SolveResult res = solver.solve(stack);
    if (res.sat) {
      projection.clear();
      for (Atom a : vis) {
        if (res.model.value(a)) projection.push_back(a);
      }
      ++emitted;
      bool keep_going = sink(projection);
      if (!keep_going || (limit && emitted >= *limit)) break;
      for (Literal b : res.branching) {
        std::uint8_t mark = on_stack[b.atom().id()];
        if (mark != kAbsent) {
          // Already assumed; branching literals agree with the model, and
          // so does every stack literal, hence the polarities match.
          assert(mark == polarity_of(b));
          continue;
        }
        stack.push_back(b);
        on_stack[b.atom().id()] = polarity_of(b);
      }
      peak = std::max(peak, stack.size());
    } else {
      // Backjump: drop stack entries that the conflict does not mention.
      std::unordered_set<Literal> core(res.core.begin(), res.core.end());
      while (stack.back() != kNotBot && core.find(stack.back()) == core.end()) {
        Atom a = stack.back().atom();
        flipped[a.id()] = 0;
        on_stack[a.id()] = kAbsent;
        stack.pop_back();
      }
    }
    // Remove already-flipped entries, then flip the next one.
    while (flipped[stack.back().atom().id()]) {
      Atom a = stack.back().atom();
      flipped[a.id()] = 0;
      on_stack[a.id()] = kAbsent;
      stack.pop_back();
    }
    Literal top = stack.back();
    stack.pop_back();
    stack.push_back(~top);
    on_stack[top.atom().id()] = polarity_of(~top);
    flipped[top.atom().id()] = 1;
  }

  if (stats) {
    stats->solve_calls = solves;
    stats->peak_stack = peak;
  }
  return emitted;
}

}  // namespace circenum
