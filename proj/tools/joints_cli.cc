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

// joints_cli: behrend | construct | sweep | grid3d | verify
//
// Exit codes: 0 ok, 2 usage or domain error, 3 verification failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "joints/affine.h"
#include "joints/analysis.h"
#include "joints/behrend.h"
#include "joints/checks.h"
#include "joints/construction.h"
#include "joints/errors.h"
#include "joints/matroid.h"
#include "joints/planar.h"
#include "joints/serialize.h"

namespace {

using joints::Json;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kVerification = 3;

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw joints::DomainError("cannot write " + path);
  out << text;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

struct BehrendArgs {
  std::uint64_t n = 0;
  bool oracle = false;
  bool verify = false;
  std::string format = "json";
};

int RunBehrend(const BehrendArgs& a) {
  const joints::BehrendSet b = joints::MakeBehrendSet(a.n);
  Json j = joints::ToJson(b);
  int code = kOk;
  if (a.verify) {
    const bool ap = joints::HasThreeTermAp(b.members);
    j["has_3ap"] = ap;
    if (ap) code = kVerification;
  }
  if (a.oracle) {
    if (a.n <= joints::kMaxOptimalN) {
      const auto opt = joints::OptimalThreeApFree(a.n);
      j["oracle"] = {{"size", opt.size()}, {"members", opt}};
    } else {
      j["oracle"] = nullptr;
    }
  }
  if (a.format == "text") {
    std::cout << "N " << b.params.N << "\nsize " << b.members.size()
              << "\nmembers";
    for (auto x : b.members) std::cout << ' ' << x;
    std::cout << '\n';
    if (j.contains("oracle") && !j["oracle"].is_null()) {
      std::cout << "oracle_size " << j["oracle"]["size"] << '\n';
    }
  } else {
    std::cout << Dump(j);
  }
  return code;
}

struct VerifyArgs {
  bool verify = false;
  bool exhaustive = false;
  bool allow_inconclusive = false;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 0;
};

// Runs the requested checks on a built construction; returns the exit code.
int VerifyConstruction(const joints::Construction& c, const VerifyArgs& a,
                       Json& report) {
  const auto mode = a.exhaustive ? joints::CheckMode::kExhaustive
                                 : joints::CheckMode::kSampled;
  const joints::AxiomsReport axioms =
      joints::CheckAxioms(*c.matroid, mode, a.budget, a.seed);
  const joints::PropertiesReport props =
      joints::VerifyConstructionProperties(*c.tf, *c.matroid, a.budget);
  const bool triangle_free = joints::IsTriangleFree(c.config());
  report["axioms"] = joints::ToJson(axioms);
  report["properties"] = joints::ToJson(props);
  report["triangle_free"] = triangle_free;

  if (!triangle_free) return kVerification;
  for (auto status : {axioms.overall(), props.overall()}) {
    if (status == joints::CheckStatus::kFail) return kVerification;
    if (status == joints::CheckStatus::kInconclusive && !a.allow_inconclusive) {
      return kVerification;
    }
  }
  return kOk;
}

Json Summary(const joints::Construction& c) {
  Json j;
  j["N"] = c.N;
  j["B_size"] = c.B.size();
  j["points"] = c.config().points().size();
  j["L0"] = c.grid.lines.size();
  j["pruned_lines"] = c.lines.size();
  j["triple_points"] = joints::TriplePoints(c.config()).size();
  j["joints"] = joints::CountJoints(*c.matroid, c.lines);
  j["triangle_check"] = c.triangle_check_exhaustive ? "exhaustive" : "sampled";
  j["warnings"] = c.warnings;
  return j;
}

struct ConstructArgs {
  std::uint64_t n = 0;
  std::string out;
  VerifyArgs v;
};

int RunConstruct(const ConstructArgs& a) {
  joints::ConstructionOptions opts;
  opts.seed = a.v.seed;
  const joints::Construction c = joints::BuildConstruction(a.n, opts);
  Json report = Summary(c);
  int code = kOk;
  if (a.v.verify) {
    Json checks;
    code = VerifyConstruction(c, a.v, checks);
    report["verification"] = checks;
  }
  const Json dump = joints::ConstructionDump(c);
  if (a.out.empty()) {
    report["dump"] = dump;
  } else {
    WriteFile(a.out, Dump(dump));
  }
  std::cout << Dump(report);
  return code;
}

struct LoadArgs {
  std::string in;
  VerifyArgs v;
};

int RunVerify(const LoadArgs& a) {
  std::ifstream in(a.in, std::ios::binary);
  if (!in) throw joints::DomainError("cannot read " + a.in);
  Json raw;
  try {
    raw = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw joints::DomainError(std::string("invalid JSON: ") + e.what());
  }
  joints::LoadedDump d = joints::LoadDump(raw);
  joints::ConstructionOptions opts;
  opts.seed = a.v.seed;
  const std::uint64_t stored_lines = d.pruned_lines;
  const std::uint64_t stored_triples = d.triple_points;
  const joints::Construction c = joints::BuildFromConfiguration(
      d.N, std::move(d.B), std::move(d.config), opts);
  Json report = Summary(c);
  const bool consistent = c.lines.size() == stored_lines &&
                          joints::TriplePoints(c.config()).size() == stored_triples;
  report["dump_consistent"] = consistent;
  VerifyArgs v = a.v;
  v.verify = true;
  Json checks;
  int code = VerifyConstruction(c, v, checks);
  report["verification"] = checks;
  if (!consistent) code = kVerification;
  std::cout << Dump(report);
  return code;
}

struct SweepArgs {
  std::vector<std::uint64_t> ns;
  std::string epsilon = "1/2";
  std::string out;
  std::string format = "csv";
  bool strict = false;
  std::uint64_t seed = 0;
};

int RunSweep(const SweepArgs& a) {
  const mpq_class eps = joints::ParseEpsilon(a.epsilon);
  const auto rows = joints::JointsSweep(a.ns, eps);
  int code = kOk;
  for (const auto& r : rows) {
    if (r.error) {
      std::cerr << "N=" << r.N << ": " << *r.error << '\n';
      if (a.strict) code = kVerification;
      continue;
    }
    if (r.warning) std::cerr << "N=" << r.N << ": " << *r.warning << '\n';
    const bool ok = r.joints <= r.L * r.L && r.joints == r.triple_points &&
                    r.triangle_free;
    if (!ok) {
      std::cerr << "N=" << r.N << ": structural invariant violated\n";
      code = kVerification;
    }
  }
  const std::string csv = joints::SweepCsv(rows);
  const std::string json = Dump(joints::SweepJson(rows, eps));
  if (a.out.empty()) {
    std::cout << (a.format == "json" ? json : csv);
  } else {
    std::filesystem::path path(a.out);
    WriteFile(path.string(), a.format == "json" ? json : csv);
    path.replace_extension(a.format == "json" ? ".csv" : ".json");
    WriteFile(path.string(), a.format == "json" ? csv : json);
  }
  return code;
}

struct GridArgs {
  std::size_t k = 0;
  bool verify = false;
  bool full = false;
};

int RunGrid3d(const GridArgs& a) {
  const joints::Grid3d grid = joints::MakeGrid3d(a.k);
  const joints::Matroid m = joints::MakeAffineMatroid(grid.ground);
  const auto lines = joints::GridMatroidLines(m, grid);
  const std::size_t joints_count = joints::CountJoints(m, lines);
  std::cout << Dump(joints::Grid3dJson(grid, joints_count, a.full));
  if (a.verify && joints_count != a.k * a.k * a.k) return kVerification;
  return kOk;
}

void AddVerifyFlags(CLI::App* cmd, VerifyArgs& v) {
  cmd->add_flag("--exhaustive", v.exhaustive,
                "exhaustive axiom check instead of sampling");
  cmd->add_flag("--allow-inconclusive", v.allow_inconclusive,
                "treat budget exhaustion as success");
  cmd->add_option("--budget", v.budget, "check budget (oracle calls)");
  cmd->add_option("--seed", v.seed, "sampling seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joints in matroids: constructions and experiments"};
  app.require_subcommand(1);

  BehrendArgs behrend;
  auto* b = app.add_subcommand("behrend", "3-AP-free set in 1..N");
  b->add_option("--n", behrend.n, "N")->required();
  b->add_flag("--oracle", behrend.oracle, "compare with the exact optimum");
  b->add_flag("--verify", behrend.verify, "rescan for 3-term progressions");
  b->add_option("--format", behrend.format)
      ->check(CLI::IsMember({"json", "text"}));

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "build the matroid for N");
  c->add_option("--n", construct.n, "N")->required();
  c->add_option("--out", construct.out, "dump path");
  c->add_flag("--verify", construct.v.verify, "run the checks");
  AddVerifyFlags(c, construct.v);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "joints sweep over several N");
  s->add_option("--ns", sweep.ns, "comma separated N list")
      ->required()
      ->delimiter(',');
  s->add_option("--epsilon", sweep.epsilon, "rational p/q");
  s->add_option("--out", sweep.out, "output path; the other format goes next "
                                    "to it");
  s->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
  s->add_flag("--strict", sweep.strict, "fail on error rows");
  s->add_option("--seed", sweep.seed, "accepted for uniformity; the sweep "
                                      "is seed-independent");

  GridArgs grid;
  auto* g = app.add_subcommand("grid3d", "joints of the k x k x k grid");
  g->add_option("--k", grid.k, "k")->required();
  g->add_flag("--verify", grid.verify, "assert k^3 joints");
  g->add_flag("--full", grid.full, "list points and lines");

  LoadArgs load;
  auto* v = app.add_subcommand("verify", "reload a dump and re-run checks");
  v->add_option("--in", load.in, "dump path")->required();
  AddVerifyFlags(v, load.v);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (b->parsed()) return RunBehrend(behrend);
    if (c->parsed()) return RunConstruct(construct);
    if (s->parsed()) return RunSweep(sweep);
    if (g->parsed()) return RunGrid3d(grid);
    if (v->parsed()) return RunVerify(load);
  } catch (const joints::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const joints::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerification;
  }
  return kUsage;
}
