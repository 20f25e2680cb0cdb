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
#include <string>

namespace boadd {

/// N = q^k 2 k e with q = d^2 and d = p^e.
std::uint64_t boa_length(int d, int k);

struct HammingRange {
  std::uint64_t n_min = 0;
  std::uint64_t n_max = 0;
};

/// Qudit counts served at locality 2 by the Hamming-dual BOA of dimension k
/// and not by the one of dimension k - 1.
HammingRange hamming_range(int d, int k);

/// Length table for d in {2, 3}: one column per k, one row per locality.
/// Only the Hamming rows are computed; other cells are marked as coming
/// from an external code database.
std::string table_text(int d, int l_min, int l_max, int k_min, int k_max);

}  // namespace boadd
