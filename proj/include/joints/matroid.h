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

#ifndef JOINTS_MATROID_H_
#define JOINTS_MATROID_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "joints/errors.h"

namespace joints {

// Elements are indices into the ground set. A Subset is always kept sorted
// and duplicate-free; every public entry point canonicalizes or validates.
using Element = std::size_t;
using Subset = std::vector<Element>;

// Sorts and deduplicates.
Subset Canonical(Subset s);
Subset Union(const Subset& a, const Subset& b);
Subset Intersection(const Subset& a, const Subset& b);
Subset Difference(const Subset& a, const Subset& b);
bool Includes(const Subset& super, const Subset& sub);
bool Contains(const Subset& s, Element e);
std::string ToString(const Subset& s);

// Ordered list of distinct element labels; the element with index i has
// label labels()[i] and the ground order is index order.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);
  // Labels "0", "1", ..., "m-1".
  static GroundSet Indexed(std::size_t m);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  Subset All() const;

 private:
  std::vector<std::string> labels_;
};

// Receives a canonical subset. Must be deterministic and safe to call
// concurrently.
using IndependenceOracle = std::function<bool(std::span<const Element>)>;

class Matroid {
 public:
  Matroid(GroundSet ground, IndependenceOracle oracle);

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  bool IsIndependent(std::span<const Element> subset) const {
    return oracle_(subset);
  }
  const IndependenceOracle& oracle() const { return oracle_; }

  // rank(ground), computed on first use.
  std::size_t FullRank() const;

  // Throws DomainError unless s is canonical and inside the ground set.
  void Validate(const Subset& s) const;

 private:
  GroundSet ground_;
  IndependenceOracle oracle_;
  mutable std::optional<std::size_t> cached_full_rank_;
};

struct Flat {
  Subset members;
  std::size_t rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
  friend auto operator<=>(const Flat& a, const Flat& b) {
    return a.members <=> b.members;
  }
};

// Greedy maximal independent subset of x, scanning in ground order.
Subset Basis(const Matroid& m, const Subset& x);
std::size_t Rank(const Matroid& m, const Subset& x);
// True iff rank(x) >= target; stops scanning once the target is reached.
bool RankAtLeast(const Matroid& m, const Subset& x, std::size_t target);

Subset Closure(const Matroid& m, const Subset& x);
bool IsFlat(const Matroid& m, const Subset& x);
Flat MakeFlat(const Matroid& m, const Subset& x);  // closure(x) with its rank

// All flats of rank k, as closures of independent k-subsets, sorted by member
// list. k > kMaxEnumeratedFlatRank needs allow_high_rank.
inline constexpr std::size_t kMaxEnumeratedFlatRank = 3;
std::vector<Flat> FlatsOfRank(const Matroid& m, std::size_t k,
                              bool allow_high_rank = false);

// Throws DomainError unless every entry is a rank-2 flat of m.
void ValidateLines(const Matroid& m, std::span<const Flat> lines);

bool Coplanar(const Matroid& m, std::span<const Flat> lines);
bool IsJoint(const Matroid& m, Element x, std::span<const Flat> lines);
std::size_t CountJoints(const Matroid& m, std::span<const Flat> lines);
bool IsNJoint(const Matroid& m, Element x, std::span<const Flat> lines,
              std::size_t n);

// A witnessing triple of line indices for a joint at x, if any.
std::optional<std::vector<std::size_t>> JointWitness(
    const Matroid& m, Element x, std::span<const Flat> lines);

}  // namespace joints

#endif  // JOINTS_MATROID_H_
