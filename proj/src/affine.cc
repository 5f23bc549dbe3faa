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

#include "joints/affine.h"

#include <memory>
#include <utility>

namespace joints {

RationalPoint::RationalPoint(std::vector<mpq_class> coords)
    : coords_(std::move(coords)) {
  for (auto& c : coords_) {
    if (c.get_den() == 0) throw DomainError("zero denominator");
    c.canonicalize();
  }
}

RationalPoint RationalPoint::FromIntegers(
    std::span<const std::int64_t> coords) {
  std::vector<mpq_class> q;
  q.reserve(coords.size());
  for (std::int64_t c : coords) q.emplace_back(static_cast<long>(c));
  return RationalPoint(std::move(q));
}

RationalPoint RationalPoint::FromIntegers(
    std::initializer_list<std::int64_t> coords) {
  return FromIntegers(std::span<const std::int64_t>(coords.begin(),
                                                    coords.size()));
}

std::string RationalPoint::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += coords_[i].get_str();
  }
  return out + ")";
}

std::size_t IntegerMatrixRank(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  mpz_class prev_pivot = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const mpz_class p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const mpz_class f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        // Bareiss step: the division is exact.
        mpz_class v = p * rows[r][c] - f * rows[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        rows[r][c] = std::move(v);
      }
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

bool AffineIndependent(std::span<const RationalPoint> points) {
  if (points.empty()) return true;
  const std::size_t d = points[0].dim();
  for (const auto& p : points) {
    if (p.dim() != d) throw DomainError("points of mixed dimension");
  }
  if (points.size() == 1) return true;
  if (points.size() - 1 > d) return false;

  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<mpq_class> diff(d);
    mpz_class scale = 1;
    for (std::size_t j = 0; j < d; ++j) {
      diff[j] = points[i].coords()[j] - points[0].coords()[j];
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              diff[j].get_den_mpz_t());
    }
    std::vector<mpz_class> row(d);
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = diff[j].get_num() * (scale / diff[j].get_den());
    }
    rows.push_back(std::move(row));
  }
  return IntegerMatrixRank(std::move(rows)) == points.size() - 1;
}

AffineGround::AffineGround(std::vector<RationalPoint> points)
    : points_(std::move(points)) {
  if (!points_.empty()) dim_ = points_[0].dim();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != dim_) throw DomainError("points of mixed dimension");
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[i] == points_[j]) {
        throw DomainError("duplicate point " + points_[i].ToString());
      }
    }
  }
}

Matroid MakeAffineMatroid(const AffineGround& ground) {
  auto points = std::make_shared<const std::vector<RationalPoint>>(
      ground.points());
  std::vector<std::string> labels;
  labels.reserve(points->size());
  for (const auto& p : *points) labels.push_back(p.ToString());
  return Matroid(GroundSet(std::move(labels)),
                 [points](std::span<const Element> subset) {
                   std::vector<RationalPoint> chosen;
                   chosen.reserve(subset.size());
                   for (Element e : subset) chosen.push_back((*points)[e]);
                   return AffineIndependent(chosen);
                 });
}

Grid3d MakeGrid3d(std::size_t k) {
  if (k < 2) throw DomainError("grid3d needs k >= 2");
  Grid3d g;
  g.k = k;
  std::vector<RationalPoint> pts;
  pts.reserve(k * k * k);
  const auto index = [k](std::size_t x, std::size_t y, std::size_t z) {
    return (x * k + y) * k + z;
  };
  for (std::size_t x = 1; x <= k; ++x) {
    for (std::size_t y = 1; y <= k; ++y) {
      for (std::size_t z = 1; z <= k; ++z) {
        pts.push_back(RationalPoint::FromIntegers(
            {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y),
             static_cast<std::int64_t>(z)}));
      }
    }
  }
  g.ground = AffineGround(std::move(pts));
  for (int axis = 0; axis < 3; ++axis) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        GridLine line{axis, {}};
        for (std::size_t t = 0; t < k; ++t) {
          switch (axis) {
            case 0:
              line.members.push_back(index(t, i, j));
              break;
            case 1:
              line.members.push_back(index(i, t, j));
              break;
            default:
              line.members.push_back(index(i, j, t));
              break;
          }
        }
        line.members = Canonical(std::move(line.members));
        g.lines.push_back(std::move(line));
      }
    }
  }
  return g;
}

std::vector<Flat> GridMatroidLines(const Matroid& m, const Grid3d& grid) {
  std::vector<Flat> out;
  out.reserve(grid.lines.size());
  for (const auto& l : grid.lines) {
    out.push_back(MakeFlat(m, Subset{l.members[0], l.members[1]}));
  }
  return out;
}

}  // namespace joints
