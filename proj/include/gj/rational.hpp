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

#include "gj/polynomial.hpp"

namespace gj {

/// Quotient of two polynomials in normalized form:
///   - denominator nonzero, with a positive coefficient on its lowest term,
///   - the integer content of the (num, den) pair is 1,
///   - when both parts involve at most one common variable the pair is
///     fully reduced by the univariate gcd.
/// Multivariate pairs are NOT gcd-reduced; equality is therefore defined by
/// cross-multiplication, not structurally.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(BigInt(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num)
      : RationalFunction(std::move(num), Polynomial(BigInt(1))) {}
  RationalFunction(long value)  // NOLINT: implicit for arithmetic comfort
      : RationalFunction(Polynomial(BigInt(value))) {}

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction reciprocal() const;

  /// num_a*den_b == num_b*den_a, exactly.
  bool equals(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const { return equals(o); }
  bool operator!=(const RationalFunction& o) const { return !equals(o); }

  RationalFunction substitute(VarId v, const Polynomial& value) const;

  /// `(num)/(den)`; a side with a single term is left bare, and a
  /// denominator of 1 is omitted.
  std::string to_string(const VarTable& vars) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace gj
