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

#ifndef CIRCENUM_ORACLE_HPP
#define CIRCENUM_ORACLE_HPP

// Exhaustive reference implementations for small inputs.  Everything here
// enumerates full truth tables and is deliberately independent of the
// incremental solver machinery; the test suite uses it as ground truth.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "circenum/types.hpp"

namespace circenum::oracle {

// Raised when an input exceeds the exhaustive-search limits below.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kMaxAtoms = 20;
inline constexpr std::uint32_t kMaxMcsClauses = 12;

// An interpretation packed as a bitmask: bit a holds the value of atom a.
// Bit 0 (the reserved false atom) is always clear.
using Interpretation = std::uint32_t;

// Bitmask with bit a set for every atom a in `atoms`.
std::uint32_t atom_mask(const std::vector<Atom>& atoms);

// Conversions between interpretations and explicit atom sets.
std::vector<Atom> interpretation_atoms(Interpretation m,
                                       std::uint32_t num_atoms);
Interpretation interpretation_from_atoms(const std::vector<Atom>& atoms);

bool eval_clause(const Clause& clause, Interpretation m);
bool eval_cardinality(const CardinalityConstraint& card, Interpretation m);
bool eval_theory(const Theory& theory, Interpretation m);

// All models of `theory`, ascending as bitmasks.  Throws TooLargeError when
// the theory has more than kMaxAtoms atoms.
std::vector<Interpretation> all_models(const Theory& theory);

// Keeps exactly the preferred models: I survives iff no J in `models`
// satisfies J <= I and not I <= J, where I <= J holds iff I and J agree
// outside p_mask and z_mask and the p-part of I is a subset of the p-part
// of J.
std::vector<Interpretation> circ_filter(
    const std::vector<Interpretation>& models, std::uint32_t p_mask,
    std::uint32_t z_mask);

// All minimal correction subsets of `clauses`: minimal sets of 1-based
// clause indices whose removal leaves the rest satisfiable.  Each result is
// sorted ascending; the list of results is sorted lexicographically.
// Throws TooLargeError beyond kMaxMcsClauses clauses or kMaxAtoms atoms.
std::vector<std::vector<std::uint32_t>> all_mcs(
    const std::vector<Clause>& clauses, std::uint32_t num_atoms);

// The scan behind all_mcs without the size guard, for crafted instances
// whose structure keeps the exhaustive pass affordable.  `num_atoms` is
// still capped by the Interpretation width.
std::vector<std::vector<std::uint32_t>> all_mcs_unchecked(
    const std::vector<Clause>& clauses, std::uint32_t num_atoms);

}  // namespace circenum::oracle

#endif  // CIRCENUM_ORACLE_HPP
