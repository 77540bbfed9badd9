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

#include "circenum/cli.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>

#include "CLI11.hpp"
#include "circenum/circ.hpp"
#include "circenum/dimacs.hpp"
#include "circenum/mcs.hpp"
#include "circenum/solver.hpp"
#include "circenum/types.hpp"

namespace circenum {

namespace {

void print_stats(std::ostream& err, const EngineStats& stats) {
  err << "c stat solve_calls " << stats.solve_calls << '\n';
  err << "c stat cores " << stats.cores << '\n';
  err << "c stat shrink_solves " << stats.shrink_solves << '\n';
  err << "c stat models " << stats.models << '\n';
  err << "c stat witnesses " << stats.witnesses << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate the preferred models of a circumscribed CNF theory"};

  std::string input_path = "-";
  std::uint64_t max_models = 0;
  std::uint64_t max_witnesses = 0;
  std::uint64_t shrink_budget = 1000;
  bool mcs_mode = false;
  bool want_stats = false;

  app.add_option("input", input_path,
                 "input file, or '-' for standard input (default)");
  app.add_option("-n,--models", max_models,
                 "stop after emitting this many models (0 = no limit)");
  app.add_option("--circ-wit", max_witnesses,
                 "models reported per witness cone (0 = no limit, 1 = report "
                 "only the candidate found for the cone)");
  app.add_option("--shrink-budget", shrink_budget,
                 "conflict budget per core-shrinking solve (0 = no shrinking)");
  app.add_flag("--mcs", mcs_mode,
               "treat the input as plain CNF and enumerate its minimal "
               "correction subsets");
  app.add_flag("--stats", want_stats, "print statistics on standard error");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("circenum");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const ParseMode parse_mode = mcs_mode ? ParseMode::kMcs : ParseMode::kCirc;
  ProblemFile pf;
  try {
    if (input_path == "-") {
      pf = parse(in, parse_mode);
    } else {
      std::ifstream file(input_path);
      if (!file) {
        err << "error: cannot open '" << input_path << "'\n";
        return 1;
      }
      pf = parse(file, parse_mode);
    }
  } catch (const ParseError& e) {
    err << "error: " << (input_path == "-" ? "<stdin>" : input_path) << ": "
        << e.what() << '\n';
    return 1;
  }

  EngineConfig config;
  config.max_models = max_models;
  config.max_witnesses = max_witnesses;
  config.shrink_budget = shrink_budget;

  EnumerationReport report;
  Solver solver;
  if (mcs_mode) {
    // A correction subset is a set of clauses whose removal restores
    // satisfiability; relaxing every clause with a selector and minimizing
    // the selectors makes the preferred models correspond exactly to the
    // minimal ones.  Witness cones would only vary the original atoms, so
    // one model per cone is enough.
    config.max_witnesses = 1;
    McsProblem problem = mcs_transform(pf);
    CircEngine engine(
        solver,
        make_circ_instance(problem.relaxed, problem.minimized,
                           problem.irrelevant),
        config);
    report = engine.run([&](const MinimalModel& model) {
      out << 'm';
      for (Atom a : model.atoms_true) {
        if (problem.map.is_selector(a)) out << ' ' << problem.map.clause_index(a);
      }
      out << " 0\n";
      out.flush();
      return true;
    });
  } else {
    CircEngine engine(
        solver,
        make_circ_instance(to_theory(pf), pf.minimized, pf.irrelevant), config);
    report = engine.run([&](const MinimalModel& model) {
      out << 'v';
      for (Atom a : model.atoms_true) out << ' ' << a.id();
      out << " 0\n";
      out.flush();
      return true;
    });
  }

  out << "c models " << report.models << " complete "
      << (report.complete ? "yes" : "no") << '\n';
  out.flush();
  if (want_stats) print_stats(err, report.stats);
  return report.complete ? 0 : 10;
}

}  // namespace circenum
