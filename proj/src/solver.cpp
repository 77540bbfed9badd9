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

#include "circenum/solver.hpp"

#include <algorithm>
#include <cassert>

namespace circenum {

namespace {
constexpr double kActivityRescale = 1e100;
constexpr double kActivityDecay = 0.95;
constexpr std::uint64_t kRestartFirst = 100;
}  // namespace

// ---------------------------------------------------------------- heap ----

void Solver::ActivityHeap::insert(Atom a) {
  assert(a.id() < pos_.size());
  if (contains(a)) return;
  pos_[a.id()] = static_cast<std::uint32_t>(heap_.size());
  heap_.push_back(a);
  sift_up(pos_[a.id()]);
}

Atom Solver::ActivityHeap::pop() {
  assert(!heap_.empty());
  Atom top = heap_[0];
  pos_[top.id()] = kAbsent;
  Atom last = heap_.back();
  heap_.pop_back();
  if (!heap_.empty()) {
    heap_[0] = last;
    pos_[last.id()] = 0;
    sift_down(0);
  }
  return top;
}

void Solver::ActivityHeap::increased(Atom a) {
  if (contains(a)) sift_up(pos_[a.id()]);
}

void Solver::ActivityHeap::sift_up(std::uint32_t i) {
  while (i > 0) {
    std::uint32_t parent = (i - 1) / 2;
    if (!before(heap_[i], heap_[parent])) break;
    std::swap(pos_[heap_[i].id()], pos_[heap_[parent].id()]);
    std::swap(heap_[i], heap_[parent]);
    i = parent;
  }
}

void Solver::ActivityHeap::sift_down(std::uint32_t i) {
  for (;;) {
    std::uint32_t left = 2 * i + 1, right = 2 * i + 2, best = i;
    if (left < heap_.size() && before(heap_[left], heap_[best])) best = left;
    if (right < heap_.size() && before(heap_[right], heap_[best])) {
      best = right;
    }
    if (best == i) break;
    std::swap(pos_[heap_[i].id()], pos_[heap_[best].id()]);
    std::swap(heap_[i], heap_[best]);
    i = best;
  }
}

// -------------------------------------------------------------- solver ----

Solver::Solver() : heap_(activity_) {
  assigns_.push_back(LValue::kUndef);
  phase_.push_back(0);
  level_.push_back(0);
  reason_.push_back(kNoReason);
  trail_pos_.push_back(0);
  activity_.push_back(0.0);
  seen_.push_back(0);
  clause_watches_.resize(2);
  card_watches_.resize(2);
  heap_.grow(0);
  // The reserved atom is false forever.
  enqueue(kNotBot, kNoReason);
}

std::vector<Atom> Solver::add_atoms(std::uint32_t count) {
  std::vector<Atom> fresh;
  fresh.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    ++num_atoms_;
    Atom a(num_atoms_);
    assigns_.push_back(LValue::kUndef);
    phase_.push_back(0);
    level_.push_back(0);
    reason_.push_back(kNoReason);
    trail_pos_.push_back(0);
    activity_.push_back(0.0);
    seen_.push_back(0);
    clause_watches_.emplace_back();
    clause_watches_.emplace_back();
    card_watches_.emplace_back();
    card_watches_.emplace_back();
    heap_.grow(num_atoms_);
    heap_.insert(a);
    fresh.push_back(a);
  }
  return fresh;
}

void Solver::attach_clause(std::uint32_t index) {
  const StoredClause& c = clauses_[index];
  assert(c.literals.size() >= 2);
  clause_watches_[c.literals[0].index()].push_back(index);
  clause_watches_[c.literals[1].index()].push_back(index);
}

void Solver::watch_card(std::uint32_t index) {
  for (Literal m : cards_[index].literals) {
    // The counter moves when ~m is asserted, falsifying m.
    card_watches_[(~m).index()].push_back(index);
  }
}

void Solver::add_clause(std::span<const Literal> literals) {
  assert(decision_level() == 0);
  if (!ok_) return;
  std::vector<Literal> lits(literals.begin(), literals.end());
  for ([[maybe_unused]] Literal l : lits) {
    assert(l.atom().id() <= num_atoms_);
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i] == ~lits[i - 1]) return;  // tautology
  }
  std::vector<Literal> kept;
  for (Literal l : lits) {
    LValue v = value(l);
    if (v == LValue::kTrue) return;  // satisfied by a permanent assignment
    if (v == LValue::kUndef) kept.push_back(l);
    // permanently false literals are dropped
  }
  if (kept.empty()) {
    mark_unsat();
    return;
  }
  if (kept.size() == 1) {
    enqueue(kept[0], kNoReason);
    if (!propagate().none()) mark_unsat();
    return;
  }
  clauses_.push_back(StoredClause{std::move(kept), false});
  ++stats_.num_clauses;
  attach_clause(static_cast<std::uint32_t>(clauses_.size()) - 1);
}

void Solver::add_cardinality(std::span<const Literal> literals,
                             std::uint32_t bound) {
  assert(decision_level() == 0);
  if (bound > literals.size()) {
    throw InfeasibleConstraintError(
        "cardinality bound exceeds number of literals");
  }
  if (!ok_ || bound == 0) return;
  std::vector<Literal> lits(literals.begin(), literals.end());
  for ([[maybe_unused]] Literal l : lits) {
    assert(l.atom().id() <= num_atoms_);
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  if (bound > lits.size()) {
    // Duplicates counted once left fewer literals than the bound demands.
    mark_unsat();
    return;
  }
  StoredCard card;
  card.bound = bound;
  card.slack = static_cast<std::uint32_t>(lits.size()) - bound;
  card.literals = std::move(lits);
  for (Literal m : card.literals) {
    if (value(m) == LValue::kFalse) ++card.num_false;
  }
  cards_.push_back(std::move(card));
  ++stats_.num_cardinalities;
  std::uint32_t index = static_cast<std::uint32_t>(cards_.size()) - 1;
  watch_card(index);
  if (!propagate_card(index).none() || !propagate().none()) mark_unsat();
}

void Solver::enqueue(Literal l, std::uint32_t reason) {
  Atom a = l.atom();
  assert(assigns_[a.id()] == LValue::kUndef);
  assigns_[a.id()] = l.is_negative() ? LValue::kFalse : LValue::kTrue;
  level_[a.id()] = decision_level();
  reason_[a.id()] = reason;
  trail_pos_[a.id()] = static_cast<std::uint32_t>(trail_.size());
  trail_.push_back(l);
  for (std::uint32_t cidx : card_watches_[l.index()]) {
    ++cards_[cidx].num_false;
  }
}

void Solver::cancel_until(std::uint32_t level) {
  if (decision_level() <= level) return;
  std::uint32_t bound = trail_lim_[level];
  for (std::size_t i = trail_.size(); i-- > bound;) {
    Literal l = trail_[i];
    Atom a = l.atom();
    phase_[a.id()] = l.is_negative() ? 0 : 1;
    assigns_[a.id()] = LValue::kUndef;
    reason_[a.id()] = kNoReason;
    for (std::uint32_t cidx : card_watches_[l.index()]) {
      --cards_[cidx].num_false;
    }
    if (!heap_.contains(a)) heap_.insert(a);
  }
  trail_.resize(bound);
  trail_lim_.resize(level);
  qhead_ = bound;
}

Solver::Conflict Solver::propagate_card(std::uint32_t card_index) {
  StoredCard& c = cards_[card_index];
  if (c.num_false > c.slack) {
    return Conflict{Conflict::Kind::kCard, card_index};
  }
  if (c.num_false == c.slack) {
    // Every remaining literal is implied; the falsified ones are the reason.
    for (Literal m : c.literals) {
      if (value(m) == LValue::kUndef) enqueue(m, kCardFlag | card_index);
    }
  }
  return Conflict{};
}

Solver::Conflict Solver::propagate() {
  while (qhead_ < trail_.size()) {
    Literal p = trail_[qhead_++];
    ++stats_.propagations;
    Literal false_lit = ~p;
    auto& watchers = clause_watches_[false_lit.index()];
    std::size_t i = 0, j = 0;
    while (i < watchers.size()) {
      std::uint32_t cref = watchers[i++];
      StoredClause& c = clauses_[cref];
      auto& lits = c.literals;
      if (lits[0] == false_lit) std::swap(lits[0], lits[1]);
      assert(lits[1] == false_lit);
      if (value(lits[0]) == LValue::kTrue) {
        watchers[j++] = cref;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < lits.size(); ++k) {
        if (value(lits[k]) != LValue::kFalse) {
          std::swap(lits[1], lits[k]);
          clause_watches_[lits[1].index()].push_back(cref);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      watchers[j++] = cref;
      if (value(lits[0]) == LValue::kFalse) {
        while (i < watchers.size()) watchers[j++] = watchers[i++];
        watchers.resize(j);
        qhead_ = static_cast<std::uint32_t>(trail_.size());
        return Conflict{Conflict::Kind::kClause, cref};
      }
      enqueue(lits[0], cref);
    }
    watchers.resize(j);
    for (std::uint32_t cidx : card_watches_[p.index()]) {
      Conflict confl = propagate_card(cidx);
      if (!confl.none()) {
        qhead_ = static_cast<std::uint32_t>(trail_.size());
        return confl;
      }
    }
  }
  return Conflict{};
}

void Solver::reason_literals(Literal l, std::vector<Literal>& out) const {
  std::uint32_t r = reason_[l.atom().id()];
  assert(r != kNoReason);
  if (r & kCardFlag) {
    const StoredCard& c = cards_[r & ~kCardFlag];
    std::uint32_t lpos = trail_pos_[l.atom().id()];
    for (Literal m : c.literals) {
      if (value(m) == LValue::kFalse && trail_pos_[m.atom().id()] < lpos) {
        out.push_back(m);
      }
    }
  } else {
    for (Literal q : clauses_[r].literals) {
      if (q != l) out.push_back(q);
    }
  }
}

void Solver::conflict_literals(const Conflict& confl,
                               std::vector<Literal>& out) const {
  if (confl.kind == Conflict::Kind::kClause) {
    const StoredClause& c = clauses_[confl.index];
    out.assign(c.literals.begin(), c.literals.end());
  } else {
    assert(confl.kind == Conflict::Kind::kCard);
    // All currently falsified literals; more than slack of them are false,
    // so the constraint entails their disjunction.
    for (Literal m : cards_[confl.index].literals) {
      if (value(m) == LValue::kFalse) out.push_back(m);
    }
  }
}

void Solver::analyze(const Conflict& confl, std::vector<Literal>& learnt,
                     std::uint32_t& backtrack_level) {
  learnt.clear();
  learnt.push_back(Literal());  // slot for the asserting literal
  std::vector<Literal> reason_buf;
  conflict_literals(confl, reason_buf);
  std::vector<Atom> to_clear;
  std::uint32_t counter = 0;
  Literal p;
  std::size_t index = trail_.size();
  for (;;) {
    for (Literal q : reason_buf) {
      Atom a = q.atom();
      if (!seen_[a.id()] && level_[a.id()] > 0) {
        seen_[a.id()] = 1;
        to_clear.push_back(a);
        bump_activity(a);
        if (level_[a.id()] >= decision_level()) {
          ++counter;
        } else {
          learnt.push_back(q);
        }
      }
    }
    assert(counter > 0);
    while (!seen_[trail_[index - 1].atom().id()]) --index;
    --index;
    p = trail_[index];
    seen_[p.atom().id()] = 0;
    --counter;
    if (counter == 0) break;
    reason_buf.clear();
    reason_literals(p, reason_buf);
  }
  learnt[0] = ~p;
  for (Atom a : to_clear) seen_[a.id()] = 0;

  if (learnt.size() == 1) {
    backtrack_level = 0;
  } else {
    // Move a literal of the highest remaining level to the second slot so
    // the learned clause watches stay sound after the backjump.
    std::size_t max_at = 1;
    for (std::size_t k = 2; k < learnt.size(); ++k) {
      if (level_[learnt[k].atom().id()] > level_[learnt[max_at].atom().id()]) {
        max_at = k;
      }
    }
    std::swap(learnt[1], learnt[max_at]);
    backtrack_level = level_[learnt[1].atom().id()];
  }
}

void Solver::record_learnt(const std::vector<Literal>& learnt,
                           std::uint32_t backtrack_level) {
  cancel_until(backtrack_level);
  if (learnt.size() == 1) {
    enqueue(learnt[0], kNoReason);
    return;
  }
  clauses_.push_back(StoredClause{learnt, true});
  ++stats_.num_clauses;
  ++stats_.num_learned;
  std::uint32_t index = static_cast<std::uint32_t>(clauses_.size()) - 1;
  attach_clause(index);
  enqueue(learnt[0], index);
}

std::vector<Literal> Solver::analyze_final(Literal failed) {
  std::vector<Literal> core{failed};
  if (decision_level() == 0) return core;
  std::vector<Atom> to_clear{failed.atom()};
  seen_[failed.atom().id()] = 1;
  std::vector<Literal> reason_buf;
  for (std::size_t i = trail_.size(); i-- > trail_lim_[0];) {
    Atom a = trail_[i].atom();
    if (!seen_[a.id()]) continue;
    if (reason_[a.id()] == kNoReason) {
      // A decision below the assumption levels is always an assumption.
      core.push_back(trail_[i]);
    } else {
      reason_buf.clear();
      reason_literals(trail_[i], reason_buf);
      for (Literal q : reason_buf) {
        Atom qa = q.atom();
        if (level_[qa.id()] > 0 && !seen_[qa.id()]) {
          seen_[qa.id()] = 1;
          to_clear.push_back(qa);
        }
      }
    }
    seen_[a.id()] = 0;
  }
  for (Atom a : to_clear) seen_[a.id()] = 0;
  return core;
}

void Solver::bump_activity(Atom a) {
  activity_[a.id()] += activity_inc_;
  if (activity_[a.id()] > kActivityRescale) {
    for (double& act : activity_) act *= 1.0 / kActivityRescale;
    activity_inc_ *= 1.0 / kActivityRescale;
  }
  heap_.increased(a);
}

void Solver::decay_activities() { activity_inc_ *= 1.0 / kActivityDecay; }

Literal Solver::pick_branch() {
  while (!heap_.empty()) {
    Atom a = heap_.pop();
    if (assigns_[a.id()] == LValue::kUndef) {
      return phase_[a.id()] ? Literal::positive(a) : Literal::negative(a);
    }
  }
  return Literal();  // sentinel: nothing left to decide
}

Solver::SearchStatus Solver::search(std::optional<std::uint64_t> budget,
                                    std::vector<Literal>& core_out) {
  std::uint64_t conflicts_here = 0;
  std::uint64_t conflicts_since_restart = 0;
  std::uint64_t restart_limit = kRestartFirst;
  std::vector<Literal> learnt;
  for (;;) {
    Conflict confl = propagate();
    if (!confl.none()) {
      ++stats_.conflicts;
      ++conflicts_here;
      ++conflicts_since_restart;
      if (decision_level() == 0) {
        // Conflict independent of any assumption: permanently unsat.
        mark_unsat();
        core_out.clear();
        return SearchStatus::kUnsat;
      }
      std::uint32_t backtrack_level = 0;
      analyze(confl, learnt, backtrack_level);
      record_learnt(learnt, backtrack_level);
      decay_activities();
      if (budget && conflicts_here >= *budget) return SearchStatus::kUnknown;
      if (conflicts_since_restart >= restart_limit) {
        conflicts_since_restart = 0;
        restart_limit *= 2;
        ++stats_.restarts;
        // Restarts keep the assumption levels in place.
        std::uint32_t keep = std::min(
            decision_level(), static_cast<std::uint32_t>(assumptions_.size()));
        cancel_until(keep);
      }
    } else if (decision_level() < assumptions_.size()) {
      Literal a = assumptions_[decision_level()];
      LValue v = value(a);
      if (v == LValue::kTrue) {
        new_decision_level();  // placeholder level, nothing to decide
      } else if (v == LValue::kFalse) {
        core_out = analyze_final(a);
        return SearchStatus::kUnsat;
      } else {
        new_decision_level();
        enqueue(a, kNoReason);
      }
    } else {
      Literal decision = pick_branch();
      if (decision == Literal()) return SearchStatus::kSat;
      ++stats_.decisions;
      new_decision_level();
      enqueue(decision, kNoReason);
    }
  }
}

std::optional<SolveResult> Solver::solve_internal(
    std::span<const Literal> assumptions,
    std::optional<std::uint64_t> budget) {
  ++stats_.solve_calls;
  SolveResult result;
  if (!ok_) return result;
  assert(decision_level() == 0);
  for ([[maybe_unused]] Literal a : assumptions) {
    assert(a.atom().id() <= num_atoms_);
  }
  if (!propagate().none()) {
    mark_unsat();
    return result;
  }
  assumptions_.assign(assumptions.begin(), assumptions.end());
  std::vector<Literal> core;
  SearchStatus status = search(budget, core);
  if (status == SearchStatus::kUnknown) {
    assumptions_.clear();
    cancel_until(0);
    return std::nullopt;
  }
  if (status == SearchStatus::kSat) {
    result.sat = true;
    std::vector<bool> truth(num_atoms_ + 1);
    for (std::uint32_t id = 0; id <= num_atoms_; ++id) {
      assert(assigns_[id] != LValue::kUndef);
      truth[id] = assigns_[id] == LValue::kTrue;
    }
    result.model = Model(std::move(truth));
    for (std::uint32_t lv = 0; lv < decision_level(); ++lv) {
      std::uint32_t start = trail_lim_[lv];
      std::uint32_t end = lv + 1 < trail_lim_.size()
                              ? trail_lim_[lv + 1]
                              : static_cast<std::uint32_t>(trail_.size());
      // Placeholder levels (assumptions already true) are empty.
      if (start < end) result.branching.push_back(trail_[start]);
    }
  } else {
    std::sort(core.begin(), core.end());
    core.erase(std::unique(core.begin(), core.end()), core.end());
    result.core = std::move(core);
  }
  assumptions_.clear();
  cancel_until(0);
  return result;
}

SolveResult Solver::solve(std::span<const Literal> assumptions) {
  return *solve_internal(assumptions, std::nullopt);
}

std::optional<SolveResult> Solver::solve_limited(
    std::span<const Literal> assumptions, std::uint64_t max_conflicts) {
  return solve_internal(assumptions, max_conflicts);
}

}  // namespace circenum
