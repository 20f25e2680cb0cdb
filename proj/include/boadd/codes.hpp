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

#include "boadd/gf.hpp"

namespace boadd {

/** Dense row-major matrix over a finite field. */
struct GfMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Elem> data;

  GfMatrix() = default;
  GfMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  GfMatrix transpose() const;
  bool operator==(const GfMatrix&) const = default;
};

std::size_t rank(const FiniteField& f, GfMatrix m);
/// Basis of {x : m x = 0}, returned as the columns of a cols x nullity matrix.
GfMatrix null_space(const FiniteField& f, GfMatrix m);

/**
 * Linear [n, k]_q code. The generator G is n x k and codewords are the
 * column vectors G m for m in GF(q)^k.
 */
struct LinearCode {
  FieldPtr field;
  std::size_t n = 0;
  std::size_t k = 0;
  GfMatrix generator;
  std::string label;

  Elem q() const { return field->order(); }
};

/// Validates shape and full column rank.
LinearCode make_code(FieldPtr field, GfMatrix generator, std::string label);

std::vector<Elem> encode(const LinearCode& code, const std::vector<Elem>& m);
LinearCode dual_code(const LinearCode& code);

/// Exhaustive minimum weight. Throws Error(Budget) when q^k > 2^24.
/// Returns n + 1 for the zero code.
std::size_t min_distance(const LinearCode& code);
/// Minimum weight of the dual code.
std::size_t dual_distance(const LinearCode& code);
/// Minimum distance via the smallest linearly dependent set of rows of a
/// parity-check matrix; independent of codeword enumeration.
std::size_t min_distance_by_dependence(const LinearCode& code);

struct CodeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Elem q = 0;
  std::size_t distance = 0;
  std::size_t dual_distance = 0;
  std::size_t strength = 0;
};

CodeReport describe(const LinearCode& code);

/// Dual of the q-ary Hamming code of length n = (q^r - 1)/(q - 1).
LinearCode hamming_dual_code(Elem q, std::size_t n);

/// Extended primitive narrow-sense BCH code over GF(q) of length q^m.
LinearCode bch_ext_code(Elem q, int m, int designed);
/// Generator polynomial lcm(M_1, ..., M_{D-2}) of the unextended code.
Polynomial bch_generator_polynomial(Elem q, int m, int designed);

struct BoundCheck {
  bool applicable = false;
  bool holds = false;
  long long bound = 0;
  long long slack = 0;
};

BoundCheck bch_dimension_bound_check(const LinearCode& code, int designed, int m, Elem q);

/// "example1" [7,3]_2, "example2" [5,2]_4, "example3" [16,9]_2.
LinearCode builtin_code(const std::string& name);

/// Text format: "q n k" then n rows of k integers.
LinearCode parse_code(std::istream& in);
LinearCode load_code(const std::string& path);
std::string format_code(const LinearCode& code);

/// Calls fn(m, codeword) for every message in index order sum_i m_i q^i.
template <typename Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn);

}  // namespace boadd

#include "boadd/detail/codes_impl.hpp"
