/* Copyright 2026 The sigwind Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// The subcommands of the sigwind tool, callable in-process. Each returns the
// JSON report together with the process exit code.

#ifndef SIGWIND_TOOLS_COMMANDS_HPP
#define SIGWIND_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "sigwind/signature.hpp"

namespace sigwind::cli {

enum ExitCode : int {
  kCertified = 0,
  kInputError = 1,
  kUncertified = 2,
  kCertificateFailure = 3,
};

enum class ScalarMode { float_mode, rational };

struct Config {
  ScalarMode scalar = ScalarMode::float_mode;
  SignatureBudget budget{};
};

// SIGWIND_SCALAR=float|rational, SIGWIND_MAX_COEFFS=<coefficient cap>.
Config config_from_env();

struct CommandResult {
  int exit_code = kCertified;
  std::string json;   // report on success, empty otherwise
  std::string error;  // message for stderr
};

struct SignatureArgs {
  std::string input;
  std::optional<std::size_t> level;
  std::optional<std::string> words;  // "1,2;2,1"
};

struct MomentArgs {
  std::string input;
  std::string alpha;  // "1,0"
  std::string beta;   // "0,1"
};

struct WindingArgs {
  std::string input;
  std::string x1;  // empty: first coordinate functional
  std::string x2;  // empty: second coordinate functional
  std::string xi1 = "0";
  std::string xi2 = "0";
  std::optional<std::size_t> n;
  std::optional<double> r;
  bool force = false;
};

struct InterpolateArgs {
  std::string input;
  std::string f = "1";
  std::string g;
  std::string h;
  bool antisymmetric = false;  // int f^s (g dh - h dg)
  std::string s = "-1";
  std::optional<std::size_t> terms;  // otherwise chosen from --tol
  double tol = 1e-10;                // absolute, for the automatic choice
  std::size_t max_terms = 200;
  std::optional<double> r;
  bool force = false;
};

CommandResult run_signature(const SignatureArgs& args, const Config& config);
CommandResult run_moment(const MomentArgs& args, const Config& config);
CommandResult run_winding(const WindingArgs& args, const Config& config);
CommandResult run_interpolate(const InterpolateArgs& args, const Config& config);

}  // namespace sigwind::cli

#endif  // SIGWIND_TOOLS_COMMANDS_HPP
