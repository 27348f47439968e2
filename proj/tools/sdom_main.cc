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

// sdom: generate graphs, apply graph operations, compute super domination
// numbers, check candidate sets and run the theorem harness.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  using namespace sdom::cli;

  CLI::App app{"Exact super domination toolkit"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--guard-n", flags.guard_n,
                 "Largest graph order accepted by the exact solvers")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", flags.format, "Output format: json or text")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::kJson},
                                        {"text", Format::kText}}));
  app.add_option("--seed", flags.seed, "Default seed for random generators");

  std::string family;
  std::vector<std::string> params;
  std::optional<std::string> out_path;
  std::string in_path;
  std::string set;
  std::string operation;
  std::vector<std::string> op_args;
  std::string config;

  auto* gen = app.add_subcommand("gen", "Generate a family graph");
  gen->add_option("family", family,
                  "path | cycle | complete | complete_bipartite | star | "
                  "friendship | gnp")
      ->required();
  gen->add_option("params", params, "Family parameters (gnp: n p [seed])");
  gen->add_option("-o,--out", out_path, "Edge-list output path");

  auto* gamma_sp = app.add_subcommand("gamma-sp", "Minimum super dominating set");
  gamma_sp->add_option("file", in_path, "Edge-list file")->required();

  auto* gamma = app.add_subcommand("gamma", "Minimum dominating set");
  gamma->add_option("file", in_path, "Edge-list file")->required();

  auto* check = app.add_subcommand("check", "Check a super dominating set");
  check->add_option("file", in_path, "Edge-list file")->required();
  check->add_option("--set", set, "Comma-separated vertex list")->required();

  auto* op = app.add_subcommand("op", "Apply a graph operation");
  op->add_option("operation", operation,
                 "odot | contract | union | chain | bouquet")
      ->required();
  op->add_option("args", op_args,
                 "odot/contract: file v; union: file file; "
                 "chain: file:x:y ...; bouquet: file:x ...");
  op->add_option("-o,--out", out_path, "Edge-list output path");

  auto* verify = app.add_subcommand("verify", "Run the theorem harness");
  verify->add_option("--config", config, "Config JSON path or \"default\"")
      ->required();
  verify->add_option("--out", out_path, "Report JSON output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Streams io{std::cout, std::cerr};
  return RunGuarded(
      [&]() -> int {
        if (*gen) return CmdGen(flags, family, params, out_path, io);
        if (*gamma_sp) return CmdGammaSp(flags, in_path, io);
        if (*gamma) return CmdGamma(flags, in_path, io);
        if (*check) return CmdCheck(flags, in_path, set, io);
        if (*op) return CmdOp(flags, operation, op_args, out_path, io);
        return CmdVerify(flags, config, out_path, io);
      },
      std::cerr);
}
