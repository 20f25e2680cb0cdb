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

#include "boadd/table.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include "boadd/error.hpp"
#include "boadd/gf.hpp"

namespace boadd {
namespace {

int max_k(int d) { return d == 2 ? 8 : 7; }

void check_d(int d) {
  if (d != 2 && d != 3) fail(ErrorKind::InvalidArgument, "table is available for d = 2 or 3");
}

void check_k(int d, int k) {
  if (k < 2 || k > max_k(d)) {
    fail(ErrorKind::InvalidArgument,
         "k must be in 2.." + std::to_string(max_k(d)) + " for d = " + std::to_string(d));
  }
}

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

std::uint64_t boa_length(int d, int k) {
  const auto pe = prime_power(static_cast<std::uint64_t>(d));
  if (!pe || d > 16) fail(ErrorKind::InvalidArgument, "d must be a prime power up to 16");
  if (k < 1 || k > 12) fail(ErrorKind::InvalidArgument, "k must be in 1..12");
  const std::uint64_t q = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d);
  return upow(q, k) * 2 * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(pe->second);
}

HammingRange hamming_range(int d, int k) {
  check_d(d);
  check_k(d, k);
  const std::uint64_t q = static_cast<std::uint64_t>(d * d);
  return {(upow(q, k - 1) - 1) / (q - 1) + 1, (upow(q, k) - 1) / (q - 1)};
}

std::string table_text(int d, int l_min, int l_max, int k_min, int k_max) {
  check_d(d);
  check_k(d, k_min);
  check_k(d, k_max);
  if (k_min > k_max) fail(ErrorKind::InvalidArgument, "empty k range");
  if (l_min < 2 || l_max > max_k(d) || l_min > l_max) {
    fail(ErrorKind::InvalidArgument, "locality range must lie in 2.." + std::to_string(max_k(d)));
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"l \\ N"};
  for (int k = k_min; k <= k_max; ++k) header.push_back(std::to_string(boa_length(d, k)));
  cells.push_back(header);
  bool any_external = false;
  for (int l = l_min; l <= l_max; ++l) {
    std::vector<std::string> row{std::to_string(l)};
    for (int k = k_min; k <= k_max; ++k) {
      if (l > k) {
        row.push_back("-");
      } else if (l == 2) {
        const auto r = hamming_range(d, k);
        row.push_back(std::to_string(r.n_min) + "-" + std::to_string(r.n_max) + " H");
      } else {
        row.push_back("ext");
        any_external = true;
      }
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << "d = " << d << ", q = " << d * d << ", N = q^k * 2k e\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  }
  os << "H   = Hamming-dual construction, computed\n";
  if (any_external) os << "ext = external database - not reproduced\n";
  return os.str();
}

}  // namespace boadd
