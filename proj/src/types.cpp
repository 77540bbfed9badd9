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

#include "circenum/types.hpp"

#include <cassert>
#include <cstdlib>

namespace circenum {

Literal literal_from_dimacs(int v) {
  assert(v != 0);
  Atom a(static_cast<std::uint32_t>(std::abs(v)));
  return v > 0 ? Literal::positive(a) : Literal::negative(a);
}

int literal_to_dimacs(Literal l) {
  int v = static_cast<int>(l.atom().id());
  return l.is_negative() ? -v : v;
}

std::ostream& operator<<(std::ostream& out, Atom a) {
  return out << 'a' << a.id();
}

std::ostream& operator<<(std::ostream& out, Literal l) {
  if (l.is_negative()) out << '~';
  return out << l.atom();
}

std::vector<Atom> Model::true_atoms() const {
  std::vector<Atom> result;
  for (std::uint32_t id = 1; id < truth_.size(); ++id) {
    if (truth_[id]) result.push_back(Atom(id));
  }
  return result;
}

}  // namespace circenum
