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
#include <vector>

#include "boadd/pauli_rep.hpp"

namespace boadd::detail {

inline std::size_t ipow_size(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// M <- (I (x) u (x) I) M with u on `qudit` of n (qudit 0 most significant).
inline void apply_left(DenseMatrix& m, const DenseMatrix& u, std::size_t qudit,
                       std::size_t n, std::size_t d) {
  const std::size_t stride = ipow_size(d, n - 1 - qudit);
  const std::size_t dim = static_cast<std::size_t>(m.rows());
  std::vector<std::complex<double>> buf(d);
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (std::size_t hi = 0; hi < dim; hi += stride * d) {
      for (std::size_t lo = 0; lo < stride; ++lo) {
        for (std::size_t j = 0; j < d; ++j) buf[j] = m(hi + j * stride + lo, c);
        for (std::size_t i = 0; i < d; ++i) {
          std::complex<double> s = 0;
          for (std::size_t j = 0; j < d; ++j) s += u(i, j) * buf[j];
          m(hi + i * stride + lo, c) = s;
        }
      }
    }
  }
}

// M <- M (I (x) u (x) I).
inline void apply_right(DenseMatrix& m, const DenseMatrix& u, std::size_t qudit,
                        std::size_t n, std::size_t d) {
  const std::size_t stride = ipow_size(d, n - 1 - qudit);
  const std::size_t dim = static_cast<std::size_t>(m.cols());
  std::vector<std::complex<double>> buf(d);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (std::size_t hi = 0; hi < dim; hi += stride * d) {
      for (std::size_t lo = 0; lo < stride; ++lo) {
        for (std::size_t j = 0; j < d; ++j) buf[j] = m(r, hi + j * stride + lo);
        for (std::size_t i = 0; i < d; ++i) {
          std::complex<double> s = 0;
          for (std::size_t j = 0; j < d; ++j) s += buf[j] * u(j, i);
          m(r, hi + i * stride + lo) = s;
        }
      }
    }
  }
}

// M <- W^dag M W with W = (x)_i w_i.
inline void conjugate(DenseMatrix& m, const std::vector<DenseMatrix>& w, std::size_t d) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    apply_left(m, w[i].adjoint(), i, n, d);
    apply_right(m, w[i], i, n, d);
  }
}

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return r;
}

}  // namespace boadd::detail
