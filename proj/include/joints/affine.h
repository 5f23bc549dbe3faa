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

#ifndef JOINTS_AFFINE_H_
#define JOINTS_AFFINE_H_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "joints/matroid.h"

namespace joints {

// A point of Q^d. Coordinates are kept in canonical reduced form.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<mpq_class> coords);
  static RationalPoint FromIntegers(std::span<const std::int64_t> coords);
  static RationalPoint FromIntegers(std::initializer_list<std::int64_t> coords);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<mpq_class>& coords() const { return coords_; }
  std::string ToString() const;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<mpq_class> coords_;
};

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
std::size_t IntegerMatrixRank(std::vector<std::vector<mpz_class>> rows);

// True iff the k-1 difference vectors p_i - p_0 are linearly independent.
// Throws DomainError on mixed dimensions.
bool AffineIndependent(std::span<const RationalPoint> points);

// Distinct points of equal dimension.
class AffineGround {
 public:
  AffineGround() = default;
  explicit AffineGround(std::vector<RationalPoint> points);

  std::size_t size() const { return points_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<RationalPoint>& points() const { return points_; }

 private:
  std::vector<RationalPoint> points_;
  std::size_t dim_ = 0;
};

Matroid MakeAffineMatroid(const AffineGround& ground);

struct GridLine {
  int axis = 0;  // 0 = x varies, 1 = y varies, 2 = z varies
  std::vector<Element> members;
};

struct Grid3d {
  std::size_t k = 0;
  AffineGround ground;            // {1..k}^3 in lexicographic (x, y, z) order
  std::vector<GridLine> lines;    // 3k^2 axis-parallel lines
};

Grid3d MakeGrid3d(std::size_t k);

// Matroid lines of the grid: closure of the first two members of each line.
std::vector<Flat> GridMatroidLines(const Matroid& m, const Grid3d& grid);

}  // namespace joints

#endif  // JOINTS_AFFINE_H_
