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

#include "joints/behrend.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_set>

#include "joints/errors.h"

namespace joints {

namespace {

// base^exp, or nullopt past `cap`.
std::optional<std::uint64_t> PowCapped(std::uint64_t base, std::uint32_t exp,
                                       std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
    if (r > cap) return std::nullopt;
  }
  return r;
}

std::uint32_t FloorLog2(std::uint64_t v) {
  return 63 - static_cast<std::uint32_t>(std::countl_zero(v));
}

}  // namespace

std::vector<std::uint64_t> ShellSizes(std::uint32_t n, std::uint32_t s) {
  if (s == 0) return {};
  const std::uint64_t max_digit = s - 1;
  std::vector<std::uint64_t> counts{1};
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next(counts.size() + max_digit * max_digit, 0);
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (!counts[k]) continue;
      for (std::uint64_t d = 0; d <= max_digit; ++d) next[k + d * d] += counts[k];
    }
    counts = std::move(next);
  }
  return counts;
}

BehrendParams MakeBehrendParams(std::uint64_t N,
                                std::optional<std::uint32_t> n_override) {
  if (N < 4) {
    throw DomainError("behrend parameters need N >= 4 (use the exact optimum "
                      "for smaller N)");
  }
  BehrendParams p;
  p.N = N;
  if (n_override) {
    p.n = *n_override;
  } else {
    // n^2 <= log2 N  <=>  n^2 <= floor(log2 N) for integer n
    const std::uint32_t lg = FloorLog2(N);
    while ((p.n + 1) * (p.n + 1) <= lg) ++p.n;
  }
  if (p.n < 1) {
    p.n = 1;
    p.n_clamped = true;
  }
  while (true) {
    auto v = PowCapped(2 * (std::uint64_t{p.s} + 1), p.n, N);
    if (!v) break;
    ++p.s;
  }
  if (p.s < 1) {
    p.s = 1;
    p.s_clamped = true;
  }
  const auto sizes = ShellSizes(p.n, p.s);
  // k = 0 is the lone zero vector, which encodes to 0 and is excluded.
  for (std::uint64_t k = 1; k < sizes.size(); ++k) {
    if (sizes[k] > p.shell_size) {
      p.shell_size = sizes[k];
      p.k = k;
    }
  }
  return p;
}

std::map<std::uint64_t, std::vector<Digits>> SphereShells(
    std::uint32_t n, std::uint32_t s, std::uint64_t max_points) {
  if (!PowCapped(s, n, max_points)) {
    throw DomainError("sphere_shells: s^n exceeds the enumeration budget of " +
                      std::to_string(max_points));
  }
  std::map<std::uint64_t, std::vector<Digits>> shells;
  if (s == 0) return shells;
  Digits x(n, 0);
  while (true) {
    std::uint64_t norm = 0;
    for (auto d : x) norm += std::uint64_t{d} * d;
    shells[norm].push_back(x);
    // lexicographic increment, last coordinate fastest
    std::int64_t i = static_cast<std::int64_t>(n) - 1;
    while (i >= 0 && x[i] == s - 1) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  return shells;
}

std::vector<Digits> Shell(std::uint32_t n, std::uint32_t s, std::uint64_t k) {
  std::vector<Digits> out;
  if (s == 0) return out;
  Digits x(n, 0);
  const std::uint64_t max_sq = std::uint64_t{s - 1} * (s - 1);
  // depth-first over coordinates, pruning on the remaining norm budget
  auto rec = [&](auto&& self, std::uint32_t i, std::uint64_t remaining) -> void {
    if (i == n) {
      if (remaining == 0) out.push_back(x);
      return;
    }
    if (remaining > max_sq * (n - i)) return;
    for (std::uint32_t d = 0; d < s; ++d) {
      const std::uint64_t sq = std::uint64_t{d} * d;
      if (sq > remaining) break;
      x[i] = d;
      self(self, i + 1, remaining - sq);
    }
    x[i] = 0;
  };
  rec(rec, 0, k);
  return out;
}

std::uint64_t EncodeDigits(const Digits& digits, std::uint64_t radix) {
  std::uint64_t value = 0;
  std::uint64_t place = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    value += digits[i] * place;
    if (i + 1 < digits.size()) place *= radix;
  }
  return value;
}

Digits DecodeDigits(std::uint64_t value, std::uint32_t n, std::uint64_t radix) {
  Digits d(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(value % radix);
    value /= radix;
  }
  return d;
}

bool HasThreeTermAp(std::span<const std::uint64_t> values) {
  std::vector<std::uint64_t> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  const std::unordered_set<std::uint64_t> members(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 2; j < v.size(); ++j) {
      const std::uint64_t sum = v[i] + v[j];
      if (sum % 2 == 0 && members.count(sum / 2)) return true;
    }
  }
  return false;
}

namespace {

// Exact branch and bound over {1..N} with the classical bound
// |chosen| + r3(N - x + 1), r3 being the optimum for shorter intervals.
class OptimalSearch {
 public:
  explicit OptimalSearch(std::uint32_t n) : n_(n), r3_(n + 1, 0) {}

  std::vector<std::uint64_t> Run() {
    for (std::uint32_t len = 1; len <= n_; ++len) {
      limit_ = len;
      best_size_ = 0;
      best_mask_ = 0;
      Search(1, 0, 0);
      r3_[len] = best_size_;
    }
    std::vector<std::uint64_t> out;
    for (std::uint32_t x = 1; x <= n_; ++x) {
      if (best_mask_ >> x & 1) out.push_back(x);
    }
    return out;
  }

 private:
  bool Extends(std::uint64_t mask, std::uint32_t x) const {
    // x is the largest element; look for y with 2y - x chosen
    for (std::uint32_t y = (x + 2) / 2; y < x; ++y) {
      if ((mask >> y & 1) && (mask >> (2 * y - x) & 1)) return false;
    }
    return true;
  }

  // Include-first order reaches max-size sets in lexicographic order, and only
  // strictly larger sets replace the incumbent.
  void Search(std::uint32_t x, std::uint64_t mask, std::uint32_t size) {
    if (x > limit_) {
      if (size > best_size_) {
        best_size_ = size;
        best_mask_ = mask;
      }
      return;
    }
    // r3_ of the full interval is still 0 (unknown) while it is being solved
    const std::uint32_t rest = r3_[limit_ - x + 1];
    if (rest > 0 && size + rest <= best_size_) return;
    if (Extends(mask, x)) Search(x + 1, mask | (std::uint64_t{1} << x), size + 1);
    Search(x + 1, mask, size);
  }

  std::uint32_t n_;
  std::vector<std::uint32_t> r3_;
  std::uint32_t limit_ = 0;
  std::uint32_t best_size_ = 0;
  std::uint64_t best_mask_ = 0;
};

}  // namespace

std::vector<std::uint64_t> OptimalThreeApFree(std::uint64_t N) {
  if (N > kMaxOptimalN) {
    throw DomainError("optimal_3ap_free is limited to N <= 30");
  }
  return OptimalSearch(static_cast<std::uint32_t>(N)).Run();
}

BehrendSet MakeBehrendSet(std::uint64_t N) {
  if (N == 0) throw DomainError("behrend_set needs N >= 1");
  BehrendSet out;
  if (N < 4) {
    out.params.N = N;
    out.oracle_fallback = true;
    out.members = OptimalThreeApFree(N);
    return out;
  }
  out.params = MakeBehrendParams(N);
  if (out.params.n <= 1) {
    out.oracle_fallback = true;
    out.members = OptimalThreeApFree(N);
    return out;
  }
  const auto& p = out.params;
  for (const Digits& x : Shell(p.n, p.s, p.k)) {
    out.members.push_back(EncodeDigits(x, p.radix()));
  }
  std::sort(out.members.begin(), out.members.end());
  if (std::adjacent_find(out.members.begin(), out.members.end()) !=
          out.members.end() ||
      out.members.size() != p.shell_size) {
    throw VerificationError("behrend encoding is not injective");
  }
  if (!out.members.empty() && (out.members.front() < 1 || out.members.back() > N)) {
    throw VerificationError("behrend member outside 1..N");
  }
  if (HasThreeTermAp(out.members)) {
    throw VerificationError("behrend set contains a 3-term progression");
  }
  return out;
}

}  // namespace joints
