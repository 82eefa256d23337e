// Copyright 2026 The tgate Authors
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


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgate::cli {

/// Parses the arguments (without the program name), runs one subcommand and
/// writes its output to `out` or to the --out file. Diagnostics go to `err`.
/// Returns 0 on success, 2 for configuration errors, 3 for domain errors and
/// 4 when verification fails.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace tgate::cli
