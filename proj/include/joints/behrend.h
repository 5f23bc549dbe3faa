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

// Behrend's 3-AP-free sets.
//
// The digit lattice G = {0..s-1}^n is cut into shells S_k of constant squared
// norm k. A shell has no three collinear points, and encoding its points in
// radix 2s never carries when two of them are added, so the encoded shell is
// free of three-term progressions.
//
// Some write-ups of the argument switch to radix 2s+1 halfway through. Radix
// 2s is used everywhere here: digits are at most s-1, a digit sum is at most
// 2s-2 < 2s, and that is all the argument needs.

#ifndef JOINTS_BEHREND_H_
#define JOINTS_BEHREND_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace joints {

using Digits = std::vector<std::uint32_t>;

struct BehrendParams {
  std::uint64_t N = 0;
  std::uint32_t n = 0;  // lattice dimension, floor(sqrt(log2 N))
  std::uint32_t s = 0;  // digit bound: largest s with (2s)^n <= N
  std::uint64_t k = 0;  // chosen shell (squared norm)
  std::uint64_t shell_size = 0;
  bool n_clamped = false;
  bool s_clamped = false;

  std::uint64_t radix() const { return 2 * std::uint64_t{s}; }
};

// Throws DomainError for N < 4. `n_override` replaces the default dimension.
BehrendParams MakeBehrendParams(std::uint64_t N,
                                std::optional<std::uint32_t> n_override = {});

// |S_k| for k = 0 .. n(s-1)^2.
std::vector<std::uint64_t> ShellSizes(std::uint32_t n, std::uint32_t s);

// Every shell of {0..s-1}^n, keyed by squared norm, points in lexicographic
// order. Throws DomainError when s^n exceeds `max_points`.
inline constexpr std::uint64_t kDefaultShellBudget = 10'000'000;
std::map<std::uint64_t, std::vector<Digits>> SphereShells(
    std::uint32_t n, std::uint32_t s,
    std::uint64_t max_points = kDefaultShellBudget);

// The points of a single shell, lexicographic.
std::vector<Digits> Shell(std::uint32_t n, std::uint32_t s, std::uint64_t k);

// sum_i digits[i] * radix^i (digits[0] is least significant).
std::uint64_t EncodeDigits(const Digits& digits, std::uint64_t radix);
Digits DecodeDigits(std::uint64_t value, std::uint32_t n, std::uint64_t radix);

struct BehrendSet {
  std::vector<std::uint64_t> members;  // sorted
  BehrendParams params;
  // Small N (N < 4, or n <= 1) uses the exact optimum instead.
  bool oracle_fallback = false;
};

// Throws DomainError for N = 0 and VerificationError if the result fails the
// 3-AP check.
BehrendSet MakeBehrendSet(std::uint64_t N);

// True iff some x < y < z in the set satisfy x + z = 2y.
bool HasThreeTermAp(std::span<const std::uint64_t> values);

// Lexicographically smallest maximum 3-AP-free subset of {1..N}; N <= 30.
inline constexpr std::uint64_t kMaxOptimalN = 30;
std::vector<std::uint64_t> OptimalThreeApFree(std::uint64_t N);

}  // namespace joints

#endif  // JOINTS_BEHREND_H_
