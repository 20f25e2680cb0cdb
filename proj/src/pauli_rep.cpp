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

#include "boadd/pauli_rep.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "boadd/error.hpp"
#include "local_ops.hpp"

namespace boadd {
namespace {

DenseMatrix shift(int p, int a) {
  DenseMatrix x = DenseMatrix::Zero(p, p);
  for (int j = 0; j < p; ++j) x((j + a) % p, j) = 1.0;
  return x;
}

DenseMatrix clock(int p, int b) {
  DenseMatrix z = DenseMatrix::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * ((j * b) % p) / p);
  }
  return z;
}

}  // namespace

std::string to_string(RepMode mode) { return mode == RepMode::weyl ? "weyl" : "x_only"; }

RepMode rep_mode_from_string(const std::string& s) {
  if (s == "weyl") return RepMode::weyl;
  if (s == "x_only") return RepMode::x_only;
  fail(ErrorKind::InvalidArgument, "unknown representation mode '" + s + "'");
}

Representation Representation::build(int d, RepMode mode) {
  if (d < 2 || d > 16) fail(ErrorKind::InvalidArgument, "qudit dimension must be 2..16");
  const auto pe = prime_power(static_cast<std::uint64_t>(d));
  if (!pe) fail(ErrorKind::InvalidArgument, "qudit dimension is not a prime power");
  Representation rep;
  rep.d_ = d;
  rep.p_ = pe->first;
  rep.e_ = pe->second;
  rep.mode_ = mode;
  if (mode == RepMode::x_only) {
    if (rep.e_ != 1) fail(ErrorKind::InvalidArgument, "x_only mode requires prime d");
    rep.field_ = FiniteField::create(rep.p_, 1);
    for (int a = 0; a < d; ++a) rep.table_.push_back(shift(d, a));
    return rep;
  }
  rep.field_ = FiniteField::create(rep.p_, 2 * rep.e_);
  for (Elem g = 0; g < rep.field_->order(); ++g) {
    const auto c = rep.field_->coords(g);
    DenseMatrix u = DenseMatrix::Identity(1, 1);
    for (int i = 0; i < rep.e_; ++i) {
      u = detail::kron(u, shift(rep.p_, c[i]) * clock(rep.p_, c[rep.e_ + i]));
    }
    rep.table_.push_back(std::move(u));
  }
  return rep;
}

const DenseMatrix& Representation::unitary(Elem g) const {
  if (!field_->contains(g)) {
    fail(ErrorKind::Mismatch, "label " + std::to_string(g) + " is not in " + field_->name());
  }
  return table_[g];
}

const DenseMatrix& Representation::unitary(const FieldElement& g) const {
  if (!g.field()->same_as(*field_)) {
    fail(ErrorKind::Mismatch, "label from " + g.field()->name() + ", representation over " +
                                  field_->name());
  }
  return table_[g.value()];
}

DenseMatrix Representation::tensor_unitary(const Vec& labels) const {
  require(!labels.empty(), "tensor_unitary needs at least one label");
  double dim = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) dim *= d_;
  if (dim > 16384) fail(ErrorKind::Budget, "d^r exceeds 2^14");
  DenseMatrix u = unitary(labels[0]);
  for (std::size_t i = 1; i < labels.size(); ++i) u = detail::kron(u, unitary(labels[i]));
  return u;
}

DenseMatrix Representation::group_average(std::size_t r, const DenseMatrix& a) const {
  require(r >= 1, "arity must be positive");
  const std::size_t dim = detail::ipow_size(static_cast<std::size_t>(d_), r);
  if (a.rows() != static_cast<Eigen::Index>(dim) || a.cols() != a.rows()) {
    fail(ErrorKind::InvalidArgument, "operator dimension does not match d^r");
  }
  double terms = 1;
  for (std::size_t i = 0; i < r; ++i) terms *= q();
  if (terms > (1 << 20)) fail(ErrorKind::Budget, "group average exceeds 2^20 terms");
  const std::uint64_t count = static_cast<std::uint64_t>(terms);
  DenseMatrix acc = DenseMatrix::Zero(a.rows(), a.cols());
  std::vector<DenseMatrix> w(r);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const Vec g = vec_from_index(idx, r, q());
    for (std::size_t i = 0; i < r; ++i) w[i] = table_[g[i]];
    DenseMatrix m = a;
    detail::conjugate(m, w, static_cast<std::size_t>(d_));
    acc += m;
  }
  return acc / static_cast<double>(count);
}

double phase_distance(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch");
  const std::complex<double> overlap = (b.adjoint() * a).trace();
  const std::complex<double> phase =
      std::abs(overlap) > 0 ? overlap / std::abs(overlap) : std::complex<double>(1.0);
  return (a - phase * b).norm();
}

}  // namespace boadd
