// Copyright 2026 The loccsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOCCSIM_CLI_HPP
#define LOCCSIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace loccsim {

enum ExitCode : int { kExitOk = 0, kExitFailed = 1, kExitBadInput = 2 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Writes fig1.csv ... fig5.csv into `dir` (created if missing) and returns
/// their paths.
std::vector<std::string> write_figures(const std::string &dir, int steps);

}  // namespace loccsim

#endif
