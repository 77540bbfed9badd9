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

#ifndef CIRCENUM_SOLVER_HPP
#define CIRCENUM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circenum/types.hpp"

namespace circenum {

// Result of a solve call.  When sat holds, `model` is total over the atom
// universe and `branching` lists the decision literals of the final trail in
// decision order (assumption decisions included); re-solving with
// `branching` as the assumptions reproduces `model`.  When sat is false,
// `core` is a subset of the assumptions that is jointly unsatisfiable with
// the theory; it may be empty when the theory alone is unsatisfiable.
struct SolveResult {
  bool sat = false;
  Model model;
  std::vector<Literal> branching;
  std::vector<Literal> core;
};

struct SolverStats {
  std::uint64_t solve_calls = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t restarts = 0;
  // Stored constraints only ever grow; nothing is deleted between calls.
  std::uint64_t num_clauses = 0;
  std::uint64_t num_learned = 0;
  std::uint64_t num_cardinalities = 0;
};

// Incremental CDCL solver with assumption-based solving and a counter-based
// cardinality propagator.  Atom 0 is reserved and permanently false; user
// atoms are allocated densely from 1 via add_atoms.  Constraints can be
// added between solve calls and are never removed, so learned clauses stay
// valid for the whole lifetime of the solver.  All heuristics break ties
// deterministically; identical call sequences give identical results.
class Solver {
 public:
  Solver();

  // Allocates `count` fresh atoms and returns them in ascending id order.
  std::vector<Atom> add_atoms(std::uint32_t count);
  Atom add_atom() { return add_atoms(1)[0]; }

  // Number of user atoms; valid ids are 1..num_atoms().
  std::uint32_t num_atoms() const { return num_atoms_; }

  // Adds a clause.  Duplicate literals are merged, tautologies dropped and
  // literals over permanently assigned atoms simplified away; adding an
  // empty (or empty-after-simplification) clause makes the solver
  // permanently unsatisfiable.
  void add_clause(std::span<const Literal> literals);
  void add_clause(std::initializer_list<Literal> literals) {
    add_clause(std::span<const Literal>(literals.begin(), literals.size()));
  }

  // Adds an at-least-`bound` constraint over `literals` (set semantics:
  // duplicates count once).  bound == 0 is a no-op; bound > |literals|
  // raises InfeasibleConstraintError.
  void add_cardinality(std::span<const Literal> literals,
                       std::uint32_t bound);
  void add_cardinality(std::initializer_list<Literal> literals,
                       std::uint32_t bound) {
    add_cardinality(std::span<const Literal>(literals.begin(),
                                             literals.size()),
                    bound);
  }

  SolveResult solve(std::span<const Literal> assumptions = {});
  SolveResult solve(std::initializer_list<Literal> assumptions) {
    return solve(
        std::span<const Literal>(assumptions.begin(), assumptions.size()));
  }

  // Like solve but gives up after `max_conflicts` conflicts, returning
  // nullopt.  Used for budgeted core shrinking.
  std::optional<SolveResult> solve_limited(
      std::span<const Literal> assumptions, std::uint64_t max_conflicts);

  // False once the theory is known unsatisfiable regardless of assumptions.
  bool ok() const { return ok_; }

  const SolverStats& stats() const { return stats_; }

 private:
  enum class LValue : std::uint8_t { kFalse = 0, kTrue = 1, kUndef = 2 };

  struct StoredClause {
    std::vector<Literal> literals;
    bool learned = false;
  };

  // Counter-based representation: num_false tracks currently falsified
  // literals; when it reaches slack (= size - bound) the remaining literals
  // are implied, and exceeding slack is a conflict.
  struct StoredCard {
    std::vector<Literal> literals;
    std::uint32_t bound = 0;
    std::uint32_t slack = 0;
    std::uint32_t num_false = 0;
  };

  struct Conflict {
    enum class Kind { kNone, kClause, kCard } kind = Kind::kNone;
    std::uint32_t index = 0;
    bool none() const { return kind == Kind::kNone; }
  };

  // Reason encoding: kNoReason for decisions/assumptions, otherwise a
  // clause index, or a cardinality index tagged with kCardFlag.
  static constexpr std::uint32_t kNoReason = 0xffffffffu;
  static constexpr std::uint32_t kCardFlag = 0x80000000u;

  // Max-heap over atoms keyed by activity, ties broken by lowest id.
  class ActivityHeap {
   public:
    explicit ActivityHeap(const std::vector<double>& activity)
        : activity_(activity) {}
    bool empty() const { return heap_.empty(); }
    bool contains(Atom a) const {
      return a.id() < pos_.size() && pos_[a.id()] != kAbsent;
    }
    void grow(std::uint32_t num_atoms) { pos_.resize(num_atoms + 1, kAbsent); }
    void insert(Atom a);
    Atom pop();
    void increased(Atom a);

   private:
    static constexpr std::uint32_t kAbsent = 0xffffffffu;
    bool before(Atom x, Atom y) const {
      double ax = activity_[x.id()], ay = activity_[y.id()];
      return ax != ay ? ax > ay : x.id() < y.id();
    }
    void sift_up(std::uint32_t i);
    void sift_down(std::uint32_t i);
    const std::vector<double>& activity_;
    std::vector<Atom> heap_;
    std::vector<std::uint32_t> pos_;
  };

  LValue value(Literal l) const {
    LValue v = assigns_[l.atom().id()];
    if (v == LValue::kUndef) return v;
    bool truth = (v == LValue::kTrue) != l.is_negative();
    return truth ? LValue::kTrue : LValue::kFalse;
  }
  std::uint32_t decision_level() const {
    return static_cast<std::uint32_t>(trail_lim_.size());
  }

  void enqueue(Literal l, std::uint32_t reason);
  void new_decision_level() {
    trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
  }
  void cancel_until(std::uint32_t level);
  Conflict propagate();
  Conflict propagate_card(std::uint32_t card_index);

  // Literals asserted together with `l`, i.e. the tail of its reason
  // constraint; all returned literals are false on the current trail.
  void reason_literals(Literal l, std::vector<Literal>& out) const;
  void conflict_literals(const Conflict& confl,
                         std::vector<Literal>& out) const;

  void analyze(const Conflict& confl, std::vector<Literal>& learnt,
               std::uint32_t& backtrack_level);
  std::vector<Literal> analyze_final(Literal failed);
  void record_learnt(const std::vector<Literal>& learnt,
                     std::uint32_t backtrack_level);

  void bump_activity(Atom a);
  void decay_activities();
  Literal pick_branch();

  void attach_clause(std::uint32_t index);
  void watch_card(std::uint32_t index);
  void mark_unsat() { ok_ = false; }

  enum class SearchStatus { kSat, kUnsat, kUnknown };
  SearchStatus search(std::optional<std::uint64_t> budget,
                      std::vector<Literal>& core_out);
  std::optional<SolveResult> solve_internal(
      std::span<const Literal> assumptions,
      std::optional<std::uint64_t> budget);

  std::uint32_t num_atoms_ = 0;
  bool ok_ = true;

  std::vector<LValue> assigns_;        // by atom id
  std::vector<std::uint8_t> phase_;    // saved polarity, by atom id
  std::vector<std::uint32_t> level_;   // by atom id
  std::vector<std::uint32_t> reason_;  // by atom id
  std::vector<std::uint32_t> trail_pos_;  // by atom id
  std::vector<double> activity_;       // by atom id
  std::vector<std::uint8_t> seen_;     // analysis scratch, by atom id

  std::vector<StoredClause> clauses_;
  std::vector<StoredCard> cards_;
  // clause_watches_[l.index()]: clauses currently watching literal l.
  std::vector<std::vector<std::uint32_t>> clause_watches_;
  // card_watches_[l.index()]: cardinalities containing ~l, i.e. the ones
  // whose counters move when l is asserted.
  std::vector<std::vector<std::uint32_t>> card_watches_;

  std::vector<Literal> trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::uint32_t qhead_ = 0;

  std::vector<Literal> assumptions_;
  ActivityHeap heap_;
  double activity_inc_ = 1.0;

  SolverStats stats_;
};

}  // namespace circenum

#endif  // CIRCENUM_SOLVER_HPP
