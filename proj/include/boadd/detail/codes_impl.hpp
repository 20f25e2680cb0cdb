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

namespace boadd {

template <typename Fn>
void for_each_codeword(const LinearCode& code, Fn&& fn) {
  const auto& f = *code.field;
  const Elem q = f.order();
  std::vector<Elem> m(code.k, 0);
  std::vector<Elem> c(code.n, 0);
  for (;;) {
    fn(static_cast<const std::vector<Elem>&>(m),
       static_cast<const std::vector<Elem>&>(c));
    // increment m as a base-q counter and update c incrementally
    std::size_t i = 0;
    for (; i < code.k; ++i) {
      if (m[i] + 1 < q) {
        const Elem next = m[i] + 1;
        const Elem diff = f.sub(next, m[i]);
        for (std::size_t r = 0; r < code.n; ++r) {
          c[r] = f.add(c[r], f.mul(code.generator.at(r, i), diff));
        }
        m[i] = next;
        break;
      }
      const Elem diff = f.neg(m[i]);
      for (std::size_t r = 0; r < code.n; ++r) {
        c[r] = f.add(c[r], f.mul(code.generator.at(r, i), diff));
      }
      m[i] = 0;
    }
    if (i == code.k) return;
  }
}

}  // namespace boadd
