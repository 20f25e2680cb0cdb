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
#include <iosfwd>
#include <string>
#include <vector>

#include "boadd/cayley.hpp"
#include "boadd/codes.hpp"

namespace boadd {

/** n x N array over GF(q); rows are qudits, columns are time slots. */
struct BoaArray {
  FieldPtr field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> entries;  // row-major
  std::size_t strength = 0;
  std::uint64_t lambda = 0;
  std::string provenance;

  Elem q() const { return field->order(); }
  Elem at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  Vec column(std::size_t j) const;
};

/// Columns G m_j for the cycle vertices m_j, claimed strength dual_distance - 1.
BoaArray build_boa(const LinearCode& code, const Cycle& cycle);
/// Same with the Eulerian cycle over the standard generators.
BoaArray build_boa(const LinearCode& code);

/// All q^k codewords as columns, message index order sum_i m_i q^i.
BoaArray oa_from_code(const LinearCode& code);

struct OaResult {
  bool ok = false;
  std::uint64_t lambda = 0;
};

/// Every l-row subarray contains each l-tuple exactly N / q^l times.
/// Throws Error(Budget) when C(n, l) q^l > 1e8.
OaResult verify_oa(const BoaArray& a, std::size_t strength);

struct SubsetResult {
  std::vector<std::size_t> rows;  // 0-based
  BalanceReport balance;
  std::vector<Vec> generating_set;
};

struct VerificationReport {
  std::size_t strength = 0;
  bool oa_ok = false;
  std::uint64_t lambda = 0;
  bool boa_ok = false;
  bool first_column_zero = false;
  std::vector<SubsetResult> per_subset;  // lexicographic subset order
  std::vector<std::string> failures;
};

/// Runs check_balanced on every l-row restriction. Parallel over subsets,
/// capped by the BOA_THREADS environment variable.
VerificationReport verify_boa(const BoaArray& a, std::size_t strength);

/// First n_target rows; strength becomes min(l, n_target).
BoaArray pad_rows(const BoaArray& a, std::size_t n_target);

/// Header "q n N l lambda" then n rows of N integers.
std::string format_boa(const BoaArray& a);
BoaArray parse_boa(std::istream& in);
BoaArray load_boa(const std::string& path);
std::string boa_csv(const BoaArray& a);

/// Number of worker threads for `jobs` independent tasks.
unsigned worker_count(std::size_t jobs);

}  // namespace boadd
