// Copyright 2026 The boadd Authors
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

#pragma once

#include <vector>

#include "boadd/boa.hpp"
#include "boadd/cayley.hpp"
#include "boadd/codes.hpp"

namespace fixtures {

// Hand-listed Eulerian cycle on Z_2^3 for the [7,3]_2 example code,
// vertices written as (x, y, z).
inline boadd::Cycle listed_cycle() {
  static const int v[24][3] = {
      {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0},
      {0, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 1}, {1, 1, 0}, {1, 1, 1},
      {0, 1, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 0, 1}, {0, 0, 1}};
  boadd::Cycle c;
  c.field = boadd::FiniteField::create(2, 1);
  c.arity = 3;
  for (const auto& row : v) {
    c.vertices.push_back({static_cast<boadd::Elem>(row[0]), static_cast<boadd::Elem>(row[1]),
                          static_cast<boadd::Elem>(row[2])});
  }
  return c;
}

inline boadd::BoaArray listed_boa() {
  return boadd::build_boa(boadd::builtin_code("example1"), listed_cycle());
}

// Restriction of an array to some rows, as a vertex list.
inline std::vector<boadd::Vec> rows_of(const boadd::BoaArray& a, const std::vector<std::size_t>& rows) {
  std::vector<boadd::Vec> out;
  for (std::size_t j = 0; j < a.cols; ++j) {
    boadd::Vec v;
    for (auto r : rows) v.push_back(a.at(r, j));
    out.push_back(v);
  }
  return out;
}

inline boadd::BoaArray from_columns(boadd::FieldPtr f, const std::vector<boadd::Vec>& cols,
                                    std::size_t strength) {
  boadd::BoaArray a;
  a.field = std::move(f);
  a.rows = cols.front().size();
  a.cols = cols.size();
  a.entries.resize(a.rows * a.cols);
  for (std::size_t j = 0; j < a.cols; ++j) {
    for (std::size_t i = 0; i < a.rows; ++i) a.entries[i * a.cols + j] = cols[j][i];
  }
  a.strength = strength;
  return a;
}

}  // namespace fixtures
