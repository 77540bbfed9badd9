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

#include "circenum/circ.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace circenum {

namespace {

void normalize_atoms(std::vector<Atom>& atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

}  // namespace

CircInstance make_circ_instance(Theory theory, std::vector<Atom> p,
                                std::vector<Atom> z) {
  normalize_atoms(p);
  normalize_atoms(z);
  for (Atom a : p) {
    if (a.id() == 0 || a.id() > theory.num_atoms) {
      throw std::invalid_argument("minimized atom out of range");
    }
  }
  for (Atom a : z) {
    if (a.id() == 0 || a.id() > theory.num_atoms) {
      throw std::invalid_argument("irrelevant atom out of range");
    }
  }
  std::vector<Atom> overlap;
  std::set_intersection(p.begin(), p.end(), z.begin(), z.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw std::invalid_argument("minimized and irrelevant atoms overlap");
  }

  CircInstance instance;
  instance.v.reserve(theory.num_atoms);
  for (std::uint32_t id = 1; id <= theory.num_atoms; ++id) {
    instance.v.push_back(Atom(id));
  }
  std::vector<Atom> pz;
  std::merge(p.begin(), p.end(), z.begin(), z.end(), std::back_inserter(pz));
  std::set_difference(instance.v.begin(), instance.v.end(), pz.begin(),
                      pz.end(), std::back_inserter(instance.r));
  instance.theory = std::move(theory);
  instance.p = std::move(p);
  instance.z = std::move(z);
  return instance;
}

Clause blocking_clause(const Model& I, const std::vector<Atom>& p,
                       const std::vector<Atom>& r) {
  Clause clause;
  for (Atom a : r) {
    clause.push_back(I.value(a) ? Literal::negative(a)
                                : Literal::positive(a));
  }
  for (Atom a : p) {
    if (I.value(a)) clause.push_back(Literal::negative(a));
  }
  return clause;
}

std::vector<Literal> witness_assumptions(const Model& I,
                                         const std::vector<Atom>& p,
                                         const std::vector<Atom>& r,
                                         const std::set<Atom>& objectives) {
  std::vector<Atom> pr;
  std::merge(p.begin(), p.end(), r.begin(), r.end(), std::back_inserter(pr));
  std::vector<Literal> assumptions;
  assumptions.reserve(pr.size() + objectives.size());
  for (Atom a : pr) {
    assumptions.push_back(I.value(a) ? Literal::positive(a)
                                     : Literal::negative(a));
  }
  for (Atom y : objectives) {
    if (!std::binary_search(p.begin(), p.end(), y)) {
      assumptions.push_back(Literal::positive(y));
    }
  }
  return assumptions;
}

CircEngine::CircEngine(Solver& solver, CircInstance instance,
                       EngineConfig config)
    : solver_(solver), instance_(std::move(instance)), config_(config) {
  assert(solver_.num_atoms() == 0 && "engine expects a fresh solver");
  solver_.add_atoms(instance_.theory.num_atoms);
  for (const Clause& c : instance_.theory.clauses) solver_.add_clause(c);
  for (const CardinalityConstraint& card : instance_.theory.cardinalities) {
    solver_.add_cardinality(card.literals, card.bound);
  }
  objectives_.insert(instance_.p.begin(), instance_.p.end());
  in_p_.assign(instance_.theory.num_atoms + 1, 0);
  for (Atom a : instance_.p) in_p_[a.id()] = 1;
}

std::vector<Literal> CircEngine::objective_assumptions() const {
  std::vector<Literal> assumptions;
  assumptions.reserve(objectives_.size());
  for (Atom a : objectives_) assumptions.push_back(Literal::negative(a));
  return assumptions;
}

std::vector<Literal> CircEngine::shrink_core(std::vector<Literal> core) {
  std::sort(core.begin(), core.end());
  if (config_.shrink_budget == 0) return core;
  std::size_t size = 1;
  for (;;) {
    std::size_t sz = std::min(size, core.size());
    std::span<const Literal> prefix(core.data(), sz);
    ++stats_.shrink_solves;
    std::optional<SolveResult> res =
        solver_.solve_limited(prefix, config_.shrink_budget);
    if (res && !res->sat) {
      std::vector<Literal> smaller = std::move(res->core);
      std::sort(smaller.begin(), smaller.end());
      if (smaller.size() < core.size()) {
        core = std::move(smaller);
        if (core.empty()) return core;
        size = 1;
        continue;
      }
      break;  // resolved at full size without progress: core is kept
    }
    if (sz >= core.size()) break;  // satisfiable/unknown at full size
    size *= 2;
  }
  return core;
}

void CircEngine::analyze_core(std::span<const Literal> core) {
  assert(!core.empty());
  std::vector<Literal> sorted(core.begin(), core.end());
  std::sort(sorted.begin(), sorted.end());
  for (Literal l : sorted) {
    // The contract: cores only mention complements of live objectives.
    assert(l.is_negative());
    assert(objectives_.count(l.atom()) > 0);
    objectives_.erase(l.atom());
  }
  std::size_t n = sorted.size() - 1;
  if (n == 0) return;  // nothing to relax: the objective is simply dropped

  std::vector<Atom> ys = solver_.add_atoms(static_cast<std::uint32_t>(n));
  std::vector<Literal> lits(sorted);
  for (Atom y : ys) lits.push_back(Literal::positive(y));
  solver_.add_cardinality(lits, static_cast<std::uint32_t>(n));
  for (std::size_t i = 1; i < ys.size(); ++i) {
    // y_{i+1} -> y_i: the true relaxers always form a prefix.
    solver_.add_clause(
        {Literal::negative(ys[i]), Literal::positive(ys[i - 1])});
  }
  for (Atom y : ys) objectives_.insert(y);
}

EnumerationReport CircEngine::run(const ModelSink& sink) {
  bool stop = false;
  auto deliver = [&](const std::vector<Atom>& atoms_true,
                     bool witness) -> bool {
    MinimalModel m;
    m.atoms_true = atoms_true;
    for (Atom a : atoms_true) {
      if (a.id() < in_p_.size() && in_p_[a.id()]) ++m.p_size;
    }
    ++stats_.models;
    if (witness) ++stats_.witnesses;
    if (!sink(m)) {
      stop = true;
      return false;
    }
    if (config_.max_models && stats_.models >= config_.max_models) {
      stop = true;
      return false;
    }
    return true;
  };

  for (;;) {
    std::vector<Literal> assumptions = objective_assumptions();
    ++stats_.solve_calls;
    SolveResult res = solver_.solve(assumptions);
    if (res.sat) {
      const Model& I = res.model;
      if (config_.max_witnesses == 1) {
        std::vector<Atom> projection;
        for (Atom a : instance_.v) {
          if (I.value(a)) projection.push_back(a);
        }
        deliver(projection, false);
      } else {
        std::vector<Literal> cone =
            witness_assumptions(I, instance_.p, instance_.r, objectives_);
        // Free atoms invisible to the projection (relaxers dropped from the
        // objectives) can repeat a projection; emit each one once.
        std::set<std::vector<Atom>> seen;
        std::uint64_t distinct = 0;
        enumerate_models(
            solver_, instance_.v, cone, std::nullopt,
            [&](const std::vector<Atom>& projection) -> bool {
              if (!seen.insert(projection).second) return true;
              ++distinct;
              if (!deliver(projection, true)) return false;
              if (config_.max_witnesses &&
                  distinct >= config_.max_witnesses) {
                return false;  // cone capped; the run itself goes on
              }
              return true;
            });
      }
      // The cone is exhausted (or capped): exclude the whole footprint.
      solver_.add_clause(blocking_clause(I, instance_.p, instance_.r));
      if (stop) return EnumerationReport{false, stats_.models, stats_};
    } else if (!res.core.empty()) {
      std::vector<Literal> core = shrink_core(std::move(res.core));
      if (core.empty()) {
        // Shrinking exposed global unsatisfiability: nothing is left.
        return EnumerationReport{true, stats_.models, stats_};
      }
      ++stats_.cores;
      analyze_core(core);
    } else {
      return EnumerationReport{true, stats_.models, stats_};
    }
  }
}

}  // namespace circenum
