// Copyright 2026 The imprecise-q Authors
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

#ifndef IMPQ_TOOLS_CLI_H
#define IMPQ_TOOLS_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace impq::cli {

struct CliHooks {
    /// Forwarded to VerifyConfig::corrupt_right_factor.
    bool corrupt_right_factor = false;
    /// Stands in for the IMPRECISEQ_JOBS environment variable when set.
    std::optional<std::string> jobs_env;
};

/// Parses `args` (without the program name) and runs one subcommand.
/// Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const CliHooks &hooks = {});

/// Reads IMPRECISEQ_JOBS from the environment.
CliHooks hooks_from_environment();

}  // namespace impq::cli

#endif
