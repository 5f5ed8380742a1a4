// Copyright 2026 The braidkit Authors
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

#ifndef BRAIDKIT_TOOLS_CLI_H
#define BRAIDKIT_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace braidkit::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kSynthesisInputError = 3,
};

/// Runs one `braidkit` invocation. argv[0] is the program name.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Convenience for tests: `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Suite names accepted by `verify --suite`, excluding "all".
const std::vector<std::string> &verify_suite_names();

}  // namespace braidkit::cli

#endif  // BRAIDKIT_TOOLS_CLI_H
