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

// Axiom and theorem checkers over an arbitrary independence oracle. Nothing
// here assumes the oracle is a matroid; every check reports what it saw.

#ifndef JOINTS_CHECKS_H_
#define JOINTS_CHECKS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "joints/matroid.h"

namespace joints {

enum class CheckStatus { kPass, kFail, kInconclusive };

std::string ToString(CheckStatus s);

// A check fails with a pair of subsets (for instance the dependent subset
// and its independent superset for Axiom 2).
struct Counterexample {
  Subset first;
  Subset second;
  std::string note;
};

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> counterexample;
  std::string detail;

  bool passed() const { return status == CheckStatus::kPass; }
  // Records one violation; keeps the first counterexample seen.
  void Violate(Counterexample c);
};

enum class CheckMode { kExhaustive, kSampled };

struct AxiomsReport {
  CheckMode mode = CheckMode::kExhaustive;
  std::array<CheckResult, 3> axioms;
  std::uint64_t independent_sets = 0;  // enumerated (exhaustive mode)

  CheckStatus overall() const;
};

// Exhaustive mode enumerates every independent set level by level and tests
// Axiom 3 on all pairs with |X1| < |X2|; it needs |ground| <= 64 and spends at
// most `budget` oracle calls plus pair tests before reporting inconclusive.
// The counterexample is the smallest violating pair in (size, lex) order.
// Sampled mode draws `budget` random subset pairs from `seed`.
AxiomsReport CheckAxioms(const Matroid& m, CheckMode mode,
                         std::uint64_t budget, std::uint64_t seed = 0);

// rank(X u Y) + rank(X n Y) <= rank(X) + rank(Y) on random pairs.
CheckResult CheckSubmodularity(const Matroid& m, std::uint64_t pairs,
                               std::uint64_t seed = 0);

// For random X <= Y: X <= Cl(X), rank(Cl X) = rank X, Cl(Cl X) = Cl X,
// Cl(X) <= Cl(Y), and rank(Y) = rank(X) implies Y <= Cl(X). Also samples the
// union corollary: X <= Y1, Y2 of equal rank gives rank(Y1 u Y2) = rank(X).
CheckResult CheckClosureLaws(const Matroid& m, std::uint64_t samples,
                             std::uint64_t seed = 0);

// Closures of random sets: their intersection is a flat, and flats of equal
// rank are equal or incomparable.
CheckResult CheckFlatIntersection(const Matroid& m, std::uint64_t samples,
                                  std::uint64_t seed = 0);

// Returns a non-simple witness (a dependent 1- or 2-subset) if one exists.
std::optional<Subset> FindNonSimpleWitness(const Matroid& m);

struct IncidenceReport {
  // unique line through two points; unique plane through three non-collinear
  // points; a line meeting a plane twice lies in it; two meeting lines span
  // a unique plane; distinct lines share at most one point.
  std::array<CheckResult, 5> properties;
  bool exhaustive = false;

  bool passed() const;
};

// Throws DomainError naming the violating subset when m is not simple.
// Exhaustive when |ground| <= kExhaustiveIncidenceLimit, sampled otherwise.
inline constexpr std::size_t kExhaustiveIncidenceLimit = 12;
IncidenceReport CheckIncidenceProperties(const Matroid& m, std::uint64_t seed,
                                         std::uint64_t samples);

}  // namespace joints

#endif  // JOINTS_CHECKS_H_
