/* Copyright 2026 prymsym contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PRYMSYM_CLI_HPP
#define PRYMSYM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace prymsym::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

// Runs one command line (args excludes the program name). JSON goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prymsym::cli

#endif
