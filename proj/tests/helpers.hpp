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

#ifndef CIRCENUM_TESTS_HELPERS_HPP
#define CIRCENUM_TESTS_HELPERS_HPP

// Shared fixtures for the unit and acceptance suites: the three running
// example theories, deterministic random problem generators, and glue for
// comparing the solver and engine against the exhaustive reference
// implementations.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "circenum/circ.hpp"
#include "circenum/enumerate.hpp"
#include "circenum/oracle.hpp"
#include "circenum/solver.hpp"
#include "circenum/types.hpp"

namespace circenum::test {

inline Literal L(int v) { return literal_from_dimacs(v); }

inline Clause clause(std::initializer_list<int> lits) {
  Clause c;
  for (int v : lits) c.push_back(L(v));
  return c;
}

inline std::vector<Atom> atoms(std::initializer_list<std::uint32_t> ids) {
  std::vector<Atom> out;
  for (std::uint32_t id : ids) out.push_back(Atom(id));
  return out;
}

inline Theory make_theory(
    std::uint32_t num_atoms,
    std::initializer_list<std::initializer_list<int>> clauses) {
  Theory t;
  t.num_atoms = num_atoms;
  for (const auto& c : clauses) t.clauses.push_back(clause(c));
  return t;
}

// The running examples.  Atom numbering, used throughout the tests:
// 1 and 2 are the two relevant atoms, 3..5 the three minimized ones;
// atom 6 is the extra relevant atom of ring_theory(), while in
// relaxed_theory() atoms 6 and 7 are the two relaxation atoms.
inline Theory base_theory() {
  return make_theory(5, {{1, 3}, {-1, 2, 4}, {-1, -2, 5}});
}

inline Theory ring_theory() {
  Theory t = base_theory();
  t.num_atoms = 6;
  t.clauses.push_back(clause({-6, 3}));
  t.clauses.push_back(clause({-6, 4}));
  t.clauses.push_back(clause({-6, 5}));
  return t;
}

inline Theory relaxed_theory() {
  Theory t = base_theory();
  t.num_atoms = 7;
  t.cardinalities.push_back(
      CardinalityConstraint{{L(-3), L(-4), L(-5), L(6), L(7)}, 2});
  t.clauses.push_back(clause({-7, 6}));
  return t;
}

// The four preferred models of base_theory() under P = {3,4,5}, Z = {}.
inline std::vector<std::vector<Atom>> base_preferred() {
  return {atoms({3}), atoms({2, 3}), atoms({1, 4}), atoms({1, 2, 5})};
}

inline void load_theory(Solver& solver, const Theory& theory) {
  solver.add_atoms(theory.num_atoms);
  for (const Clause& c : theory.clauses) solver.add_clause(c);
  for (const CardinalityConstraint& card : theory.cardinalities) {
    solver.add_cardinality(card.literals, card.bound);
  }
}

inline std::vector<Atom> all_atoms(std::uint32_t num_atoms) {
  std::vector<Atom> out;
  for (std::uint32_t id = 1; id <= num_atoms; ++id) out.push_back(Atom(id));
  return out;
}

// Every model of the solver's current theory as a sorted list of true-atom
// sets over the full universe, collected with the flip-stack enumeration.
inline std::vector<std::vector<Atom>> solver_model_sets(Solver& solver) {
  std::vector<std::vector<Atom>> out;
  enumerate_models(solver, all_atoms(solver.num_atoms()), {}, std::nullopt,
                   [&](const std::vector<Atom>& projection) {
                     out.push_back(projection);
                     return true;
                   });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Atom>> to_atom_sets(
    const std::vector<oracle::Interpretation>& models,
    std::uint32_t num_atoms) {
  std::vector<std::vector<Atom>> out;
  for (oracle::Interpretation m : models) {
    out.push_back(oracle::interpretation_atoms(m, num_atoms));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<Atom>> oracle_model_sets(const Theory& theory) {
  return to_atom_sets(oracle::all_models(theory), theory.num_atoms);
}

inline std::vector<std::vector<Atom>> oracle_circ_sets(
    const Theory& theory, const std::vector<Atom>& p,
    const std::vector<Atom>& z) {
  std::vector<oracle::Interpretation> preferred = oracle::circ_filter(
      oracle::all_models(theory), oracle::atom_mask(p), oracle::atom_mask(z));
  return to_atom_sets(preferred, theory.num_atoms);
}

// One engine run: the report plus every emission in delivery order.
struct EngineRun {
  EnumerationReport report;
  std::vector<std::pair<std::vector<Atom>, std::uint32_t>> emissions;
};

inline EngineRun run_engine_on(Solver& solver, const Theory& theory,
                               std::vector<Atom> p, std::vector<Atom> z,
                               EngineConfig config = {}) {
  CircEngine engine(
      solver, make_circ_instance(theory, std::move(p), std::move(z)), config);
  EngineRun run;
  run.report = engine.run([&](const MinimalModel& model) {
    run.emissions.emplace_back(model.atoms_true, model.p_size);
    return true;
  });
  return run;
}

inline EngineRun run_engine(const Theory& theory, std::vector<Atom> p,
                            std::vector<Atom> z, EngineConfig config = {}) {
  Solver solver;
  return run_engine_on(solver, theory, std::move(p), std::move(z), config);
}

inline std::vector<std::vector<Atom>> emission_sets(const EngineRun& run) {
  std::vector<std::vector<Atom>> out;
  for (const auto& [atoms_true, p_size] : run.emissions) {
    out.push_back(atoms_true);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool p_sizes_nondecreasing(const EngineRun& run) {
  for (std::size_t i = 1; i < run.emissions.size(); ++i) {
    if (run.emissions[i].second < run.emissions[i - 1].second) return false;
  }
  return true;
}

// Deterministic random problems.  Clauses are short (length 1..3) so that
// unsatisfiable kernels and nontrivial minimal models show up often.
inline Theory random_theory(std::mt19937& rng, std::uint32_t max_atoms,
                            std::uint32_t max_clauses) {
  Theory t;
  t.num_atoms = std::uniform_int_distribution<std::uint32_t>(1, max_atoms)(rng);
  std::uint32_t num_clauses =
      std::uniform_int_distribution<std::uint32_t>(0, max_clauses)(rng);
  std::uniform_int_distribution<std::uint32_t> length(1, 3);
  std::uniform_int_distribution<std::uint32_t> pick_atom(1, t.num_atoms);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::uint32_t i = 0; i < num_clauses; ++i) {
    Clause c;
    std::uint32_t n = length(rng);
    for (std::uint32_t j = 0; j < n; ++j) {
      int v = static_cast<int>(pick_atom(rng));
      c.push_back(L(coin(rng) != 0 ? v : -v));
    }
    t.clauses.push_back(std::move(c));
  }
  return t;
}

// Random minimized/irrelevant split; atoms in neither set stay relevant.
inline void random_partition(std::mt19937& rng, std::uint32_t num_atoms,
                             std::vector<Atom>& p, std::vector<Atom>& z) {
  p.clear();
  z.clear();
  std::uniform_int_distribution<int> pick(0, 2);
  for (std::uint32_t id = 1; id <= num_atoms; ++id) {
    switch (pick(rng)) {
      case 0:
        p.push_back(Atom(id));
        break;
      case 1:
        z.push_back(Atom(id));
        break;
      default:
        break;
    }
  }
}

// A random assignment over a random subset of the atoms, usable as
// assumptions (distinct atoms, so never self-contradictory).
inline std::vector<Literal> random_assumptions(std::mt19937& rng,
                                               std::uint32_t num_atoms) {
  std::vector<Literal> out;
  std::uniform_int_distribution<int> pick(0, 2);
  for (std::uint32_t id = 1; id <= num_atoms; ++id) {
    switch (pick(rng)) {
      case 0:
        out.push_back(Literal::positive(Atom(id)));
        break;
      case 1:
        out.push_back(Literal::negative(Atom(id)));
        break;
      default:
        break;
    }
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

// The clausal form of an at-least-k constraint over the distinct literals of
// `lits`: one clause per (n-k+1)-subset.  Requires k <= n after dedup.
inline std::vector<Clause> cardinality_cnf(std::vector<Literal> lits,
                                           std::uint32_t bound) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::vector<Clause> out;
  if (bound == 0) return out;
  std::uint32_t n = static_cast<std::uint32_t>(lits.size());
  std::uint32_t size = n - bound + 1;
  std::vector<std::uint32_t> index(size);
  for (std::uint32_t i = 0; i < size; ++i) index[i] = i;
  while (true) {
    Clause c;
    for (std::uint32_t i : index) c.push_back(lits[i]);
    out.push_back(std::move(c));
    std::uint32_t k = size;
    while (k > 0 && index[k - 1] == n - size + k - 1) --k;
    if (k == 0) break;
    ++index[k - 1];
    for (std::uint32_t i = k; i < size; ++i) index[i] = index[i - 1] + 1;
  }
  return out;
}

// Checks one claimed minimal correction subset with the incremental solver:
// dropping the indexed clauses restores satisfiability, and restoring any
// single one of them breaks it again.
inline bool verify_mcs(const std::vector<Clause>& clauses,
                       std::uint32_t num_atoms,
                       const std::vector<std::uint32_t>& subset) {
  Solver base;
  base.add_atoms(num_atoms);
  for (std::uint32_t i = 0; i < clauses.size(); ++i) {
    if (std::find(subset.begin(), subset.end(), i + 1) == subset.end()) {
      base.add_clause(clauses[i]);
    }
  }
  if (!base.solve().sat) return false;
  for (std::uint32_t restored : subset) {
    Solver again;
    again.add_atoms(num_atoms);
    for (std::uint32_t i = 0; i < clauses.size(); ++i) {
      bool dropped =
          std::find(subset.begin(), subset.end(), i + 1) != subset.end() &&
          i + 1 != restored;
      if (!dropped) again.add_clause(clauses[i]);
    }
    if (again.solve().sat) return false;
  }
  return true;
}

}  // namespace circenum::test

#endif  // CIRCENUM_TESTS_HELPERS_HPP
