// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The framework-forge command line: verbs over a matroid or graph read
// from a file, standard input or the built-in corpus.

#ifndef FORGE_CLI_H_
#define FORGE_CLI_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "forge/serialize.h"

namespace forge {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitInputError = 2;

enum class OutputFormat { kJson, kDot, kText };

struct Command {
  std::string verb;
  std::string input_path;  // "-" reads standard input
  std::optional<std::string> corpus;
  InputFormat input_format = InputFormat::kAuto;
  OutputFormat format = OutputFormat::kJson;
  int cap = kDefaultGroundCap;
  std::optional<std::string> seed_element;
  std::optional<std::string> circuit;  // comma-separated labels
  std::optional<std::string> contract;
  std::optional<std::string> remove;
  int k = 2;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

std::vector<std::string> Verbs();

// Runs one verb. `in` serves the input path "-".
CommandResult RunCommand(const Command& command, std::istream* in = nullptr);

// Parses arguments (without the program name) and runs the verb.
// `env_cap` is the value of FRAMEWORK_FORGE_CAP, if set; --cap wins.
CommandResult RunCli(const std::vector<std::string>& args,
                     const std::optional<std::string>& env_cap,
                     std::istream* in = nullptr);

}  // namespace forge

#endif  // FORGE_CLI_H_
