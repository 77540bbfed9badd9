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

#ifndef CIRCENUM_TYPES_HPP
#define CIRCENUM_TYPES_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace circenum {

// Propositional atom, identified by a dense non-negative id.  Atom 0 is
// reserved for the always-false atom (written "bot" below); user atoms are
// numbered from 1.
class Atom {
 public:
  constexpr Atom() : id_(0) {}
  constexpr explicit Atom(std::uint32_t id) : id_(id) {}

  constexpr std::uint32_t id() const { return id_; }
  constexpr auto operator<=>(const Atom&) const = default;

 private:
  std::uint32_t id_;
};

// The reserved always-false atom.
inline constexpr Atom kBotAtom{0};

// A literal is an atom or its negation, packed MiniSat-style: the dense
// index of atom a is 2*a for the positive and 2*a+1 for the negative
// literal.  The index is used to key watch lists and lookup tables.
class Literal {
 public:
  constexpr Literal() : code_(0) {}

  static constexpr Literal positive(Atom a) { return Literal(a.id() << 1); }
  static constexpr Literal negative(Atom a) {
    return Literal((a.id() << 1) | 1u);
  }
  static constexpr Literal from_index(std::uint32_t index) {
    return Literal(index);
  }

  constexpr Atom atom() const { return Atom(code_ >> 1); }
  constexpr bool is_negative() const { return (code_ & 1u) != 0; }
  constexpr Literal complement() const { return Literal(code_ ^ 1u); }
  constexpr std::uint32_t index() const { return code_; }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  constexpr explicit Literal(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

inline constexpr Literal operator~(Literal l) { return l.complement(); }

// The always-true literal (negation of the reserved false atom).
inline constexpr Literal kNotBot = Literal::negative(kBotAtom);
// The always-false literal.
inline constexpr Literal kBot = Literal::positive(kBotAtom);

// DIMACS-style conversion: +v maps to the positive literal of atom v, -v to
// the negative one.  v must be nonzero.
Literal literal_from_dimacs(int v);
int literal_to_dimacs(Literal l);

std::ostream& operator<<(std::ostream& out, Atom a);
std::ostream& operator<<(std::ostream& out, Literal l);

using Clause = std::vector<Literal>;

// At-least-k constraint: at least `bound` of `literals` are true.
struct CardinalityConstraint {
  std::vector<Literal> literals;
  std::uint32_t bound = 0;
};

// A plain bag of constraints over atoms 1..num_atoms, used to ferry problems
// between the frontend, the solver and the reference implementations.
struct Theory {
  std::uint32_t num_atoms = 0;
  std::vector<Clause> clauses;
  std::vector<CardinalityConstraint> cardinalities;
};

// Total truth assignment over atoms 0..num_atoms; atom 0 is always false.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<bool> truth) : truth_(std::move(truth)) {}

  // Number of atoms in the universe, excluding the reserved atom 0.
  std::uint32_t num_atoms() const {
    return truth_.empty() ? 0 : static_cast<std::uint32_t>(truth_.size()) - 1;
  }

  bool value(Atom a) const { return truth_.at(a.id()); }
  bool contains(Literal l) const {
    return value(l.atom()) != l.is_negative();
  }

  // Atoms assigned true, in ascending id order.
  std::vector<Atom> true_atoms() const;

  bool operator==(const Model&) const = default;

 private:
  std::vector<bool> truth_;
};

// Convenience accessor mirroring Model::value.
inline bool value(const Model& model, Atom a) { return model.value(a); }

// Raised when a cardinality constraint demands more literals than it has.
class InfeasibleConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace circenum

template <>
struct std::hash<circenum::Atom> {
  std::size_t operator()(circenum::Atom a) const noexcept {
    return std::hash<std::uint32_t>()(a.id());
  }
};

template <>
struct std::hash<circenum::Literal> {
  std::size_t operator()(circenum::Literal l) const noexcept {
    return std::hash<std::uint32_t>()(l.index());
  }
};

#endif  // CIRCENUM_TYPES_HPP
