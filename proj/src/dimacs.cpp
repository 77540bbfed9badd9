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

#include "circenum/dimacs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace circenum {

namespace {

bool parse_int(const std::string& token, long& out) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stol(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

// Reads "<ints> 0" from `stream`, already positioned after the line tag.
std::vector<long> read_terminated_ints(std::istringstream& stream,
                                       std::size_t line_no,
                                       const char* what) {
  std::vector<long> values;
  std::string token;
  bool terminated = false;
  while (stream >> token) {
    long v = 0;
    if (!parse_int(token, v)) {
      throw ParseError(line_no, std::string("bad token '") + token + "' in " +
                                    what);
    }
    if (v == 0) {
      terminated = true;
      break;
    }
    values.push_back(v);
  }
  if (!terminated) {
    throw ParseError(line_no, std::string("unterminated ") + what +
                                  " (missing trailing 0)");
  }
  if (stream >> token) {
    throw ParseError(line_no, std::string("trailing tokens after ") + what);
  }
  return values;
}

}  // namespace

ProblemFile parse(std::istream& in, ParseMode mode) {
  ProblemFile pf;
  pf.mode = mode;
  bool have_header = false;
  std::set<Atom> minimized;
  std::set<Atom> irrelevant;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream stream(line);
    std::string head;
    if (!(stream >> head)) continue;  // blank line
    if (head[0] == 'c') continue;  // comment line
    if (head == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      std::string format;
      long atoms = -1, clauses = -1;
      std::string atoms_tok, clauses_tok, extra;
      if (!(stream >> format >> atoms_tok >> clauses_tok) || format != "cnf" ||
          !parse_int(atoms_tok, atoms) || !parse_int(clauses_tok, clauses) ||
          atoms < 0 || clauses < 0 || (stream >> extra)) {
        throw ParseError(line_no, "malformed header");
      }
      pf.num_atoms = static_cast<std::uint32_t>(atoms);
      have_header = true;
      continue;
    }
    if (head == "m" || head == "z") {
      if (!have_header) {
        throw ParseError(line_no, "'" + head + "' line before header");
      }
      if (mode == ParseMode::kMcs) {
        throw ParseError(line_no,
                         "'" + head + "' line not allowed in MCS mode");
      }
      std::vector<long> values =
          read_terminated_ints(stream, line_no, "atom list");
      for (long v : values) {
        if (v < 1 || v > static_cast<long>(pf.num_atoms)) {
          throw ParseError(line_no, "atom " + std::to_string(v) +
                                        " out of range");
        }
        Atom a(static_cast<std::uint32_t>(v));
        auto& mine = head == "m" ? minimized : irrelevant;
        const auto& other = head == "m" ? irrelevant : minimized;
        if (other.count(a)) {
          throw ParseError(line_no,
                           "atom " + std::to_string(v) +
                               " both minimized and irrelevant");
        }
        mine.insert(a);
      }
      continue;
    }
    // Anything else must be a clause line.
    if (!have_header) throw ParseError(line_no, "clause before header");
    std::istringstream clause_stream(line);
    std::vector<long> values =
        read_terminated_ints(clause_stream, line_no, "clause");
    Clause clause;
    for (long v : values) {
      if (v < -static_cast<long>(pf.num_atoms) ||
          v > static_cast<long>(pf.num_atoms) || v == 0) {
        throw ParseError(line_no,
                         "literal " + std::to_string(v) + " out of range");
      }
      clause.push_back(literal_from_dimacs(static_cast<int>(v)));
    }
    pf.clauses.push_back(std::move(clause));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'p cnf' header");
  pf.minimized.assign(minimized.begin(), minimized.end());
  pf.irrelevant.assign(irrelevant.begin(), irrelevant.end());
  return pf;
}

std::string render(const ProblemFile& pf) {
  std::ostringstream out;
  out << "p cnf " << pf.num_atoms << ' ' << pf.clauses.size() << '\n';
  if (!pf.minimized.empty()) {
    out << 'm';
    for (Atom a : pf.minimized) out << ' ' << a.id();
    out << " 0\n";
  }
  if (!pf.irrelevant.empty()) {
    out << 'z';
    for (Atom a : pf.irrelevant) out << ' ' << a.id();
    out << " 0\n";
  }
  for (const Clause& clause : pf.clauses) {
    for (Literal l : clause) out << literal_to_dimacs(l) << ' ';
    out << "0\n";
  }
  return out.str();
}

Theory to_theory(const ProblemFile& pf) {
  Theory theory;
  theory.num_atoms = pf.num_atoms;
  theory.clauses = pf.clauses;
  return theory;
}

}  // namespace circenum
