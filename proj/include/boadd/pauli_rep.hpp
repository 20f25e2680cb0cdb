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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "boadd/cayley.hpp"
#include "boadd/gf.hpp"

namespace boadd {

using DenseMatrix = Eigen::MatrixXcd;

enum class RepMode { weyl, x_only };

std::string to_string(RepMode mode);
RepMode rep_mode_from_string(const std::string& s);

struct RepSpec {
  int d = 2;
  RepMode mode = RepMode::weyl;

  bool operator==(const RepSpec&) const = default;
};

/**
 * Projective representation of the additive group of GF(q) on C^d.
 *
 * weyl: q = d^2. The first e coordinates of a label are X exponents and
 * the last e are Z exponents; the label maps to the tensor product of
 * X^a_i Z^b_i over the e prime-dimensional factors.
 * x_only: d prime, q = d, a maps to X^a.
 */
class Representation {
 public:
  static Representation build(int d, RepMode mode);
  static Representation build(const RepSpec& spec) { return build(spec.d, spec.mode); }

  int d() const { return d_; }
  int p() const { return p_; }
  int e() const { return e_; }
  Elem q() const { return field_->order(); }
  RepMode mode() const { return mode_; }
  RepSpec spec() const { return {d_, mode_}; }
  const FieldPtr& field() const { return field_; }

  const DenseMatrix& unitary(Elem g) const;
  const DenseMatrix& unitary(const FieldElement& g) const;
  /// Kronecker product in label order. Throws Error(Budget) when d^r > 2^14.
  DenseMatrix tensor_unitary(const Vec& labels) const;
  /// (1/q^r) sum over g in GF(q)^r of U_g^dag A U_g.
  DenseMatrix group_average(std::size_t r, const DenseMatrix& a) const;

 private:
  Representation() = default;

  int d_ = 0;
  int p_ = 0;
  int e_ = 0;
  RepMode mode_ = RepMode::weyl;
  FieldPtr field_;
  std::vector<DenseMatrix> table_;
};

/// min over phases of the Frobenius distance between a and e^{i t} b.
double phase_distance(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace boadd
