// Copyright 2026 The gjcluster Authors
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

#include "gj/rational.hpp"

namespace gj {

/// Truncated power series in one designated variable; coefficients are
/// exact polynomials in the remaining (marking) variables. Arithmetic never
/// consults terms beyond the truncation order.
class Series {
 public:
  Series(VarId var, int order)
      : var_(var), coeffs_(static_cast<std::size_t>(order) + 1) {}
  Series(VarId var, std::vector<Polynomial> coeffs)
      : var_(var), coeffs_(std::move(coeffs)) {}

  /// Maclaurin expansion of f in `var` through order N, via the linear
  /// recurrence induced by the denominator. The denominator must have a
  /// nonzero constant term in `var` (PoleAtZero otherwise); each recurrence
  /// step divides exactly by that constant term.
  static Series from_rational(const RationalFunction& f, VarId var, int N);

  VarId var() const { return var_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& coeff(int i) const {
    return coeffs_[static_cast<std::size_t>(i)];
  }
  Polynomial& coeff(int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Polynomial>& coeffs() const { return coeffs_; }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  /// Requires an invertible (+-1) constant term; NonInvertibleConstantTerm.
  Series reciprocal() const;

  bool operator==(const Series& o) const {
    return var_ == o.var_ && coeffs_ == o.coeffs_;
  }

  /// Comma-separated decimal coefficients; only valid when every
  /// coefficient is constant.
  std::string to_csv() const;

 private:
  VarId var_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace gj
