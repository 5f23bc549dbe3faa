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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "joints/affine.h"
#include "joints/checks.h"
#include "joints/construction.h"
#include "support.h"

namespace joints {
namespace {

Matroid FromPredicate(std::size_t m, IndependenceOracle f) {
  return Matroid(GroundSet::Indexed(m), std::move(f));
}

Matroid RandomAffine(std::uint64_t seed, std::size_t count, std::size_t d,
                     std::int64_t hi) {
  std::mt19937_64 rng(seed);
  return MakeAffineMatroid(
      AffineGround(testing::RandomLatticePoints(rng, count, d, 0, hi)));
}

TEST_CASE("free matroid passes every axiom") {
  const Matroid m = FromPredicate(5, [](std::span<const Element>) { return true; });
  const AxiomsReport r = CheckAxioms(m, CheckMode::kExhaustive, 1'000'000);
  CHECK(r.overall() == CheckStatus::kPass);
  CHECK(r.independent_sets == 32);
}

TEST_CASE("|X| != 2 breaks downward closure") {
  const Matroid m = FromPredicate(
      5, [](std::span<const Element> x) { return x.size() != 2; });
  const AxiomsReport r = CheckAxioms(m, CheckMode::kExhaustive, 1'000'000);
  CHECK(r.overall() == CheckStatus::kFail);
  const CheckResult& a2 = r.axioms[1];
  CHECK(a2.status == CheckStatus::kFail);
  REQUIRE(a2.counterexample.has_value());
  CHECK(a2.counterexample->first == Subset{0, 1});
  CHECK(a2.counterexample->second == Subset{0, 1, 2});
}

TEST_CASE("empty set dependent breaks axiom 1") {
  const Matroid m = FromPredicate(
      3, [](std::span<const Element> x) { return !x.empty(); });
  const AxiomsReport r = CheckAxioms(m, CheckMode::kExhaustive, 1'000);
  CHECK(r.axioms[0].status == CheckStatus::kFail);
}

TEST_CASE("exchange failure is reported") {
  // independent: singletons and {0,1}; {2} cannot be extended from {0,1}
  const Matroid m = FromPredicate(3, [](std::span<const Element> x) {
    if (x.size() <= 1) return true;
    return x.size() == 2 && x[0] == 0 && x[1] == 1;
  });
  const AxiomsReport r = CheckAxioms(m, CheckMode::kExhaustive, 1'000);
  CHECK(r.axioms[1].passed());
  CHECK(r.axioms[2].status == CheckStatus::kFail);
  REQUIRE(r.axioms[2].counterexample.has_value());
  CHECK(r.axioms[2].counterexample->first == Subset{2});
  CHECK(r.axioms[2].counterexample->second == Subset{0, 1});
}

TEST_CASE("tiny budget is inconclusive, never a pass") {
  const Matroid m = RandomAffine(1, 10, 2, 4);
  const AxiomsReport r = CheckAxioms(m, CheckMode::kExhaustive, 50);
  CHECK(r.overall() == CheckStatus::kInconclusive);
}

TEST_CASE("affine matroids in the plane pass exhaustively") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Matroid m = RandomAffine(seed, 6, 2, 3);
    CHECK(CheckAxioms(m, CheckMode::kExhaustive, 10'000'000).overall() ==
          CheckStatus::kPass);
  }
}

TEST_CASE("sampled axioms on an affine matroid in space") {
  const Matroid m = RandomAffine(11, 12, 3, 3);
  const AxiomsReport r = CheckAxioms(m, CheckMode::kSampled, 500, 3);
  CHECK(r.mode == CheckMode::kSampled);
  CHECK(r.overall() == CheckStatus::kPass);
  const AxiomsReport again = CheckAxioms(m, CheckMode::kSampled, 500, 3);
  CHECK(again.axioms[2].checked == r.axioms[2].checked);
}

TEST_CASE("submodularity, closure laws and flat intersection") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Matroid m = RandomAffine(seed, 12, 3, 2);
    CHECK(CheckSubmodularity(m, 300, seed).violations == 0);
    CHECK(CheckClosureLaws(m, 200, seed).violations == 0);
    CHECK(CheckFlatIntersection(m, 200, seed).violations == 0);
  }
}

TEST_CASE("submodularity catches a non-submodular rank") {
  // not a matroid: {0,1} and {2,3} independent, every other pair dependent
  const Matroid m = FromPredicate(4, [](std::span<const Element> x) {
    if (x.size() <= 1) return true;
    if (x.size() != 2) return false;
    return (x[0] == 0 && x[1] == 1) || (x[0] == 2 && x[1] == 3);
  });
  CHECK(CheckSubmodularity(m, 2000, 1).violations > 0);
}

TEST_CASE("incidence properties on affine matroids") {
  const Matroid m = RandomAffine(4, 10, 3, 2);
  const IncidenceReport r = CheckIncidenceProperties(m, 0, 200);
  CHECK(r.exhaustive);
  CHECK(r.passed());
  const Matroid big = RandomAffine(5, 20, 3, 2);
  const IncidenceReport s = CheckIncidenceProperties(big, 0, 300);
  CHECK_FALSE(s.exhaustive);
  CHECK(s.passed());
}

TEST_CASE("incidence properties on the N = 5 construction") {
  const Construction c = BuildConstruction(5);
  const IncidenceReport r = CheckIncidenceProperties(*c.matroid, 0, 100);
  CHECK(r.exhaustive);
  CHECK(r.passed());
  CHECK(r.properties[2].checked > 0);
}

TEST_CASE("non-simple input is a precondition error") {
  const Matroid m = FromPredicate(3, [](std::span<const Element> x) {
    if (x.size() <= 1) return true;
    return x.size() == 2 && !(x[0] == 0 && x[1] == 1);
  });
  const auto w = FindNonSimpleWitness(m);
  REQUIRE(w.has_value());
  CHECK(*w == Subset{0, 1});
  CHECK_THROWS_AS(CheckIncidenceProperties(m, 0, 10), DomainError);
}

// Partition matroids with random blocks and capacities.
TEST_CASE("property: random partition matroids pass the axioms") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 4 + rng() % 6;
    std::vector<int> block(m);
    std::vector<std::size_t> cap(3);
    for (auto& b : block) b = static_cast<int>(rng() % 3);
    for (auto& c : cap) c = rng() % 3;
    const Matroid pm = FromPredicate(m, [block, cap](std::span<const Element> x) {
      std::vector<std::size_t> used(3, 0);
      for (Element e : x) {
        if (++used[block[e]] > cap[block[e]]) return false;
      }
      return true;
    });
    CHECK(CheckAxioms(pm, CheckMode::kExhaustive, 10'000'000).overall() ==
          CheckStatus::kPass);
    CHECK(CheckSubmodularity(pm, 100, trial).violations == 0);
  }
}

}  // namespace
}  // namespace joints
