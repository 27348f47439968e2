// Copyright 2026 The sdom Authors
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

#ifndef SDOM_TOOLS_COMMANDS_H_
#define SDOM_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sdom/errors.h"

namespace sdom::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

enum class Format { kJson, kText };

struct GlobalFlags {
  int guard_n = 24;
  Format format = Format::kJson;
  std::uint64_t seed = 0;
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// Each command returns a process exit code. Library errors are not caught
// here; RunGuarded maps them onto exit codes.
int CmdGen(const GlobalFlags& flags, const std::string& family,
           const std::vector<std::string>& params,
           const std::optional<std::string>& out_path, Streams io);
int CmdGammaSp(const GlobalFlags& flags, const std::string& in_path,
               Streams io);
int CmdGamma(const GlobalFlags& flags, const std::string& in_path, Streams io);
int CmdCheck(const GlobalFlags& flags, const std::string& in_path,
             const std::string& set, Streams io);
int CmdOp(const GlobalFlags& flags, const std::string& operation,
          const std::vector<std::string>& args,
          const std::optional<std::string>& out_path, Streams io);
int CmdVerify(const GlobalFlags& flags, const std::string& config,
              const std::optional<std::string>& out_path, Streams io);

// Runs `fn`, mapping GuardExceededError to kExitGuard and every other library
// error to kExitUsage.
template <typename Fn>
int RunGuarded(Fn&& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const GuardExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sdom::cli

#endif  // SDOM_TOOLS_COMMANDS_H_
