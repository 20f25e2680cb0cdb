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

#include <cstdint>
#include <map>
#include <vector>

#include "boadd/gf.hpp"

namespace boadd {

using Vec = std::vector<Elem>;

/// Index of v in F_q^k: sum_i v_i q^i.
std::uint64_t vec_index(const Vec& v, Elem q);
Vec vec_from_index(std::uint64_t idx, std::size_t k, Elem q);
Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b);
Vec vec_sub(const FiniteField& f, const Vec& a, const Vec& b);

struct GeneratingSet {
  FieldPtr field;
  std::size_t arity = 0;
  std::vector<Vec> elements;
};

/// x e_i for x in the power basis {1, x, ..., x^{e-1}} of GF(q), position
/// major. |S| = k e.
GeneratingSet standard_generators(FieldPtr field, std::size_t k);

/// Whether the vectors generate F_q^k as an additive group (rank k e over
/// GF(p) after flattening coordinates).
bool generates(const FiniteField& f, std::size_t k, const std::vector<Vec>& elements);

struct Cycle {
  FieldPtr field;
  std::size_t arity = 0;
  std::vector<Vec> vertices;  // g_0 = 0, ..., g_{N-1}; g_N = g_0 implied

  std::size_t length() const { return vertices.size(); }
  /// s_j = g_j - g_{j-1} for j = 1..N.
  std::vector<Vec> transitions() const;
};

/// Hierholzer walk from zero, generators tried in listed order.
Cycle eulerian_cycle(const GeneratingSet& s);

struct Violation {
  Vec vertex;
  Vec label;
  std::size_t count = 0;
  std::size_t expected = 0;
};

struct BalanceReport {
  bool balanced = false;
  bool starts_at_zero = false;
  bool generating = false;
  bool covers_all = false;
  std::map<Vec, std::size_t> mu;
  std::vector<Violation> violations;  // first kMaxViolations only
  std::size_t violation_count = 0;

  static constexpr std::size_t kMaxViolations = 32;
};

/// Departure counts of the closed walk given by `vertices` over F_q^arity.
BalanceReport check_balanced(const FiniteField& f, std::size_t arity,
                             const std::vector<Vec>& vertices);
/// Same check with vertices given by their indices.
BalanceReport check_balanced_indexed(const FiniteField& f, std::size_t arity,
                                     const std::vector<std::uint64_t>& vertices);

}  // namespace boadd
