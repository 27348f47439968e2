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

#include "commands.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sdom/edge_list.h"
#include "sdom/families.h"
#include "sdom/harness.h"
#include "sdom/operations.h"
#include "sdom/solver.h"
#include "sdom/verifier.h"

namespace sdom::cli {
namespace {

using nlohmann::json;

int ParseIndex(std::string_view text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgumentError(what + ": not an integer: \"" +
                               std::string(text) + "\"");
  }
  return value;
}

std::uint64_t ParseSeed(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgumentError("seed: not an unsigned integer: \"" +
                               std::string(text) + "\"");
  }
  return value;
}

SolverOptions Solver(const GlobalFlags& flags) {
  return SolverOptions{.max_order = flags.guard_n};
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  out << text;
}

// Graph goes to `out_path` (metadata to stdout and a .json sidecar) or to
// stdout (metadata to stderr).
void EmitGraph(const Graph& g, json metadata,
               const std::optional<std::string>& out_path, Streams io) {
  metadata["order"] = g.order();
  metadata["size"] = g.size();
  if (out_path) {
    WriteEdgeListFile(g, *out_path);
    WriteText(*out_path + ".json", metadata.dump() + "\n");
    io.out << metadata.dump() << "\n";
  } else {
    io.out << WriteEdgeList(g);
    io.err << metadata.dump() << "\n";
  }
}

json WitnessJson(const WitnessMap& witnesses) {
  json out = json::object();
  for (const auto& [u, v] : witnesses) out[std::to_string(u)] = v;
  return out;
}

std::string Join(const std::vector<Vertex>& vs) {
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(vs[i]);
  }
  return out;
}

// "path:x:y" / "path:x", split from the right so paths may contain ':'.
AttachPart ParseAttachArg(const std::string& arg, bool with_y) {
  std::string rest = arg;
  std::vector<int> indices;
  for (int k = 0; k < (with_y ? 2 : 1); ++k) {
    const size_t colon = rest.rfind(':');
    if (colon == std::string::npos) {
      throw InvalidArgumentError(
          "expected " + std::string(with_y ? "file:x:y" : "file:x") +
          ", got \"" + arg + "\"");
    }
    indices.insert(indices.begin(),
                   ParseIndex(rest.substr(colon + 1), "attach vertex"));
    rest.resize(colon);
  }
  AttachPart part{ReadEdgeListFile(rest), indices[0],
                  with_y ? indices[1] : indices[0]};
  return part;
}

json MapsJson(const CompositionResult& result, const std::string& op) {
  return {{"operation", op},
          {"vertex_maps", result.vertex_maps},
          {"merged", result.merged}};
}

}  // namespace

int CmdGen(const GlobalFlags& flags, const std::string& family,
           const std::vector<std::string>& params,
           const std::optional<std::string>& out_path, Streams io) {
  const FamilyKind kind = ParseFamilyKind(family);
  GraphFamily request;
  request.kind = kind;
  const size_t arity = kind == FamilyKind::kCompleteBipartite ? 2 : 1;
  if (kind == FamilyKind::kGnp) {
    if (params.size() != 2 && params.size() != 3) {
      throw InvalidArgumentError("gen gnp takes: n p [seed]");
    }
    request.params = {ParseIndex(params[0], "n")};
    try {
      request.p = Rational::Parse(params[1]);
    } catch (const ParseError& e) {
      throw InvalidArgumentError(e.what());
    }
    request.seed = params.size() == 3 ? ParseSeed(params[2]) : flags.seed;
  } else {
    if (params.size() != arity) {
      throw InvalidArgumentError("gen " + family + " takes " +
                                 std::to_string(arity) + " parameter(s)");
    }
    for (const auto& p : params) request.params.push_back(ParseIndex(p, "param"));
  }
  const FamilyGraph generated = Generate(request);
  json metadata = request.ToJson();
  metadata["distinguished"] = generated.distinguished;
  EmitGraph(generated.graph, std::move(metadata), out_path, io);
  return kExitOk;
}

int CmdGammaSp(const GlobalFlags& flags, const std::string& in_path,
               Streams io) {
  const Graph g = ReadEdgeListFile(in_path);
  const SuperDomCertificate cert = GammaSp(g, Solver(flags));
  if (flags.format == Format::kText) {
    io.out << "gamma_sp = " << cert.value << "\n"
           << "S = " << cert.set.ToString() << "\n";
    for (const auto& [u, v] : cert.witnesses) {
      io.out << "witness " << u << " <- " << v << "\n";
    }
  } else {
    io.out << CertificateJson(cert).dump() << "\n";
  }
  return kExitOk;
}

int CmdGamma(const GlobalFlags& flags, const std::string& in_path,
             Streams io) {
  const Graph g = ReadEdgeListFile(in_path);
  const DomCertificate cert = Gamma(g, Solver(flags));
  if (flags.format == Format::kText) {
    io.out << "gamma = " << cert.value << "\n"
           << "S = " << cert.set.ToString() << "\n";
  } else {
    io.out << CertificateJson(cert).dump() << "\n";
  }
  return kExitOk;
}

int CmdCheck(const GlobalFlags& flags, const std::string& in_path,
             const std::string& set, Streams io) {
  const Graph g = ReadEdgeListFile(in_path);
  std::vector<Vertex> members;
  std::stringstream tokens(set);
  for (std::string item; std::getline(tokens, item, ',');) {
    if (item.empty()) continue;
    const int v = ParseIndex(item, "--set");
    if (v < 0 || v >= g.order()) {
      throw InvalidArgumentError("--set: vertex " + item +
                                 " out of range for order " +
                                 std::to_string(g.order()));
    }
    members.push_back(v);
  }
  const SuperDomCheck check =
      CheckSuperDominating(g, VertexSet::Of(g.order(), members));
  if (flags.format == Format::kText) {
    if (check.holds) {
      io.out << "super dominating\n";
      for (const auto& [u, v] : check.witnesses) {
        io.out << "witness " << u << " <- " << v << "\n";
      }
    } else {
      io.out << check.violation->ToString() << "\n";
    }
  } else {
    json out = {{"super_dominating", check.holds}};
    if (check.holds) {
      out["witnesses"] = WitnessJson(check.witnesses);
    } else {
      out["violation"] = {
          {"vertex", check.violation->vertex},
          {"reason", check.violation->kind == Violation::Kind::kNotDominated
                         ? "not dominated"
                         : "no witness"},
          {"message", check.violation->ToString()}};
    }
    io.out << out.dump() << "\n";
  }
  return check.holds ? kExitOk : kExitViolated;
}

int CmdOp(const GlobalFlags& /*flags*/, const std::string& operation,
          const std::vector<std::string>& args,
          const std::optional<std::string>& out_path, Streams io) {
  if (operation == "odot" || operation == "contract") {
    if (args.size() != 2) {
      throw InvalidArgumentError("op " + operation + " takes: <file> <v>");
    }
    const Graph g = ReadEdgeListFile(args[0]);
    const Vertex v = ParseIndex(args[1], "vertex");
    if (operation == "odot") {
      EmitGraph(Odot(g, v), {{"operation", "odot"}, {"v", v}}, out_path, io);
    } else {
      const RelabeledGraph result = ContractClique(g, v);
      EmitGraph(result.graph,
                {{"operation", "contract"},
                 {"v", v},
                 {"vertex_map", result.vertex_map}},
                out_path, io);
    }
    return kExitOk;
  }
  if (operation == "union") {
    if (args.size() != 2) {
      throw InvalidArgumentError("op union takes: <file> <file>");
    }
    const CompositionResult result =
        DisjointUnion(ReadEdgeListFile(args[0]), ReadEdgeListFile(args[1]));
    EmitGraph(result.graph, MapsJson(result, "union"), out_path, io);
    return kExitOk;
  }
  if (operation == "chain" || operation == "bouquet") {
    if (args.empty()) {
      throw InvalidArgumentError("op " + operation + " needs at least one part");
    }
    const bool chain = operation == "chain";
    std::vector<AttachPart> parts;
    for (const auto& arg : args) parts.push_back(ParseAttachArg(arg, chain));
    const CompositionResult result = chain ? Chain(parts) : Bouquet(parts);
    EmitGraph(result.graph, MapsJson(result, operation), out_path, io);
    return kExitOk;
  }
  throw InvalidArgumentError("unknown operation \"" + operation +
                             "\" (odot, contract, union, chain, bouquet)");
}

int CmdVerify(const GlobalFlags& flags, const std::string& config,
              const std::optional<std::string>& out_path, Streams io) {
  HarnessConfig harness;
  if (config == "default") {
    harness = HarnessConfig::Default();
    harness.guard_n = flags.guard_n;
  } else {
    std::ifstream in(config, std::ios::binary);
    if (!in) throw ParseError("cannot open config " + config);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError("config " + config + ": " + e.what());
    }
    harness = HarnessConfig::FromJson(j);
  }
  const HarnessResult result = RunHarness(harness);
  const json report = result.ToJson();
  if (out_path) WriteText(*out_path, report.dump(2) + "\n");
  if (flags.format == Format::kText) {
    for (const auto& [id, counts] : result.summary) {
      io.out << id << ": " << counts.holds << " hold, " << counts.violated
             << " violated, " << counts.skipped << " skipped\n";
    }
    io.out << (result.all_hold ? "all hold" : "VIOLATIONS FOUND") << "\n";
  } else {
    io.out << report["summary"].dump() << "\n";
  }
  return result.all_hold ? kExitOk : kExitViolated;
}

}  // namespace sdom::cli
