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

#ifndef CIRCENUM_CLI_HPP
#define CIRCENUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace circenum {

// The whole command-line tool behind an injectable interface so tests can
// drive it without spawning processes.  `args` excludes the program name;
// `in` backs the '-' input path.  Returns the process exit code:
//   0   every preferred model was emitted
//   10  the run was cut short by a model limit
//   1   bad usage, unreadable input, or a parse error
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace circenum

#endif  // CIRCENUM_CLI_HPP
