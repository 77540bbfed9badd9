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

#ifndef CIRCENUM_CIRC_HPP
#define CIRCENUM_CIRC_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "circenum/enumerate.hpp"
#include "circenum/solver.hpp"
#include "circenum/types.hpp"

namespace circenum {

// A theory together with the atom partition that defines the preference
// order: `p` holds the minimized atoms, `z` the irrelevant ones, `r` the
// remaining (fixed) atoms and `v` the visible atoms (everything but the
// reserved false atom).  All four are ascending; v and r are derived and
// frozen at construction.
struct CircInstance {
  Theory theory;
  std::vector<Atom> p;
  std::vector<Atom> z;
  std::vector<Atom> r;
  std::vector<Atom> v;
};

// Validates p and z (in range, disjoint) and derives r and v.  Throws
// std::invalid_argument on bad input.
CircInstance make_circ_instance(Theory theory, std::vector<Atom> p,
                                std::vector<Atom> z);

// One preferred model, projected to the visible atoms.
struct MinimalModel {
  std::vector<Atom> atoms_true;  // ascending
  std::uint32_t p_size = 0;      // number of minimized atoms among them
};

// Returning false stops the whole run.
using ModelSink = std::function<bool(const MinimalModel&)>;

struct EngineConfig {
  std::uint64_t max_models = 0;     // total emitted models; 0 = unbounded
  std::uint64_t max_witnesses = 0;  // models per cone; 0 = unbounded,
                                    // 1 = emit the candidate directly and
                                    // skip the witness enumeration
  std::uint64_t shrink_budget = 1000;  // conflicts per shrink attempt;
                                       // 0 disables core shrinking
};

struct EngineStats {
  std::uint64_t solve_calls = 0;    // top-level candidate solves
  std::uint64_t cores = 0;          // unsatisfiable cores analyzed
  std::uint64_t shrink_solves = 0;  // budgeted solves spent shrinking cores
  std::uint64_t models = 0;         // models delivered to the sink
  std::uint64_t witnesses = 0;      // of those, found by witness enumeration
};

struct EnumerationReport {
  // True iff the run ended with an empty unsatisfiable core, i.e. every
  // preferred model cone was visited.  Limits on witnesses per cone do not
  // clear the flag; stopping on max_models (or a sink refusal) does.
  bool complete = false;
  std::uint64_t models = 0;
  EngineStats stats;
};

// The clause excluding every model that extends I's footprint: the
// complements of I on the fixed atoms r plus the negations of the true
// minimized atoms.  May be empty (which makes the theory unsatisfiable —
// correctly so, since then every remaining model is dominated).
Clause blocking_clause(const Model& I, const std::vector<Atom>& p,
                       const std::vector<Atom>& r);

// Assumptions pinning I's cone for the witness enumeration: I restricted to
// p and r, plus the live relaxation objectives (objectives minus p) assumed
// true so the relaxation constraints go quiet.
std::vector<Literal> witness_assumptions(const Model& I,
                                         const std::vector<Atom>& p,
                                         const std::vector<Atom>& r,
                                         const std::set<Atom>& objectives);

// Enumerates all preferred models of a circumscribed theory by repeatedly
// asking an incremental solver for a model falsifying every objective,
// enumerating its cone and blocking it, and — when only unsatisfiable cores
// remain — relaxing one core at a time with fresh objective atoms and a
// cardinality constraint.  Models are emitted grouped by cone, with the
// number of true minimized atoms nondecreasing across cones.
class CircEngine {
 public:
  // The engine loads `instance` into `solver`, which must be fresh.
  CircEngine(Solver& solver, CircInstance instance, EngineConfig config = {});

  EnumerationReport run(const ModelSink& sink);

  // Replaces the objectives mentioned by `core` ({~x_0..~x_n}, all live)
  // with n fresh ones y_1..y_n, adding
  //   ~x_0 + ... + ~x_n + y_1 + ... + y_n >= n
  // and the ordering clauses y_i -> y_{i-1}.  A singleton core just drops
  // its objective.
  void analyze_core(std::span<const Literal> core);

  // Progression-based shrinking: re-solves prefixes of size 1, 2, 4, ...
  // (core sorted by atom id) under the configured conflict budget,
  // restarting from any strictly smaller core an attempt uncovers.
  std::vector<Literal> shrink_core(std::vector<Literal> core);

  const std::set<Atom>& objectives() const { return objectives_; }
  const CircInstance& instance() const { return instance_; }
  const EngineStats& stats() const { return stats_; }

 private:
  std::vector<Literal> objective_assumptions() const;

  Solver& solver_;
  CircInstance instance_;
  EngineConfig config_;
  std::set<Atom> objectives_;
  std::vector<std::uint8_t> in_p_;  // membership mask over input atoms
  EngineStats stats_;
};

}  // namespace circenum

#endif  // CIRCENUM_CIRC_HPP
