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

#include "circenum/oracle.hpp"

#include <algorithm>
#include <bit>

namespace circenum::oracle {

namespace {

bool literal_holds(Literal l, Interpretation m) {
  bool atom_true = (m >> l.atom().id()) & 1u;
  return atom_true != l.is_negative();
}

}  // namespace

std::uint32_t atom_mask(const std::vector<Atom>& atoms) {
  std::uint32_t mask = 0;
  for (Atom a : atoms) mask |= 1u << a.id();
  return mask;
}

std::vector<Atom> interpretation_atoms(Interpretation m,
                                       std::uint32_t num_atoms) {
  std::vector<Atom> atoms;
  for (std::uint32_t id = 1; id <= num_atoms; ++id) {
    if ((m >> id) & 1u) atoms.push_back(Atom(id));
  }
  return atoms;
}

Interpretation interpretation_from_atoms(const std::vector<Atom>& atoms) {
  return atom_mask(atoms);
}

bool eval_clause(const Clause& clause, Interpretation m) {
  for (Literal l : clause) {
    if (literal_holds(l, m)) return true;
  }
  return false;
}

bool eval_cardinality(const CardinalityConstraint& card, Interpretation m) {
  // Set semantics: duplicated literals count once.
  std::vector<Literal> lits = card.literals;
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  std::uint32_t satisfied = 0;
  for (Literal l : lits) {
    if (literal_holds(l, m)) ++satisfied;
  }
  return satisfied >= card.bound;
}

bool eval_theory(const Theory& theory, Interpretation m) {
  for (const Clause& c : theory.clauses) {
    if (!eval_clause(c, m)) return false;
  }
  for (const CardinalityConstraint& card : theory.cardinalities) {
    if (!eval_cardinality(card, m)) return false;
  }
  return true;
}

std::vector<Interpretation> all_models(const Theory& theory) {
  if (theory.num_atoms > kMaxAtoms) {
    throw TooLargeError("all_models: too many atoms for exhaustive search");
  }
  std::vector<Interpretation> models;
  std::uint64_t count = std::uint64_t(1) << theory.num_atoms;
  for (std::uint64_t k = 0; k < count; ++k) {
    // Atom a corresponds to bit a; bit 0 (the false atom) stays clear.
    Interpretation m = static_cast<Interpretation>(k) << 1;
    if (eval_theory(theory, m)) models.push_back(m);
  }
  return models;
}

std::vector<Interpretation> circ_filter(
    const std::vector<Interpretation>& models, std::uint32_t p_mask,
    std::uint32_t z_mask) {
  std::uint32_t fixed_mask = ~(p_mask | z_mask);
  auto leq = [&](Interpretation i, Interpretation j) {
    return ((i ^ j) & fixed_mask) == 0 && (i & p_mask & ~j) == 0;
  };
  std::vector<Interpretation> preferred;
  for (Interpretation i : models) {
    bool beaten = false;
    for (Interpretation j : models) {
      if (leq(j, i) && !leq(i, j)) {
        beaten = true;
        break;
      }
    }
    if (!beaten) preferred.push_back(i);
  }
  return preferred;
}

std::vector<std::vector<std::uint32_t>> all_mcs_unchecked(
    const std::vector<Clause>& clauses, std::uint32_t num_atoms) {
  if (num_atoms > 31 || clauses.size() > 31) {
    throw TooLargeError("all_mcs: input beyond bitmask width");
  }
  // Collect every achievable set of simultaneously falsified clauses.
  std::vector<std::uint32_t> falsified;
  std::uint64_t count = std::uint64_t(1) << num_atoms;
  for (std::uint64_t k = 0; k < count; ++k) {
    Interpretation m = static_cast<Interpretation>(k) << 1;
    std::uint32_t f = 0;
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      if (!eval_clause(clauses[c], m)) f |= 1u << c;
    }
    falsified.push_back(f);
  }
  std::sort(falsified.begin(), falsified.end());
  falsified.erase(std::unique(falsified.begin(), falsified.end()),
                  falsified.end());

  // A clause set S is a correction subset iff it contains some achievable
  // falsified set; the property is upward closed, so the minimal correction
  // subsets are exactly the minimal achievable falsified sets.
  std::stable_sort(falsified.begin(), falsified.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     int pa = std::popcount(a), pb = std::popcount(b);
                     return pa != pb ? pa < pb : a < b;
                   });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t f : falsified) {
    bool dominated = false;
    for (std::uint32_t m : minimal) {
      if ((m & ~f) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(f);
  }

  std::vector<std::vector<std::uint32_t>> result;
  for (std::uint32_t f : minimal) {
    std::vector<std::uint32_t> indices;
    for (std::uint32_t c = 0; c < clauses.size(); ++c) {
      if ((f >> c) & 1u) indices.push_back(c + 1);
    }
    result.push_back(std::move(indices));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<std::uint32_t>> all_mcs(
    const std::vector<Clause>& clauses, std::uint32_t num_atoms) {
  if (num_atoms > kMaxAtoms) {
    throw TooLargeError("all_mcs: too many atoms for exhaustive search");
  }
  if (clauses.size() > kMaxMcsClauses) {
    throw TooLargeError("all_mcs: too many clauses for exhaustive search");
  }
  return all_mcs_unchecked(clauses, num_atoms);
}

}  // namespace circenum::oracle
