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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gj/bigint.hpp"
#include "gj/vartable.hpp"

namespace gj {

/// Sparse exponent vector: (variable index, exponent) pairs, sorted by
/// variable index, exponents strictly positive.
struct Monomial {
  std::vector<std::pair<std::int32_t, std::int32_t>> exps;

  int total_degree() const {
    int d = 0;
    for (const auto& [v, e] : exps) d += e;
    return d;
  }

  int degree_in(VarId v) const {
    for (const auto& [var, e] : exps)
      if (var == v.index) return e;
    return 0;
  }

  bool is_constant() const { return exps.empty(); }

  static Monomial one() { return Monomial{}; }
  static Monomial var(VarId v, std::int32_t e = 1);
  static Monomial mul(const Monomial& a, const Monomial& b);
  /// True iff b | a componentwise.
  static bool divides(const Monomial& b, const Monomial& a);
  /// a / b; caller guarantees divisibility.
  static Monomial div(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return exps == o.exps; }

  /// Graded lexicographic order over variable indices: lower total degree
  /// first; at equal degree the monomial with the larger exponent on the
  /// earliest differing variable is the larger one.
  struct Less {
    bool operator()(const Monomial& a, const Monomial& b) const;
  };
};

/// Exact sparse multivariate polynomial over BigInt. Canonical form: no
/// zero coefficients stored, terms kept in graded lex order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, Monomial::Less>;

  Polynomial() = default;
  explicit Polynomial(BigInt c);
  Polynomial(long c) : Polynomial(BigInt(c)) {}

  static Polynomial variable(VarId v);
  static Polynomial term(Monomial m, BigInt c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  const BigInt& constant_term() const;
  /// Value of a constant polynomial; throws if non-constant.
  BigInt constant_value() const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  BigInt coeff(const Monomial& m) const;

  int total_degree() const;
  int degree_in(VarId v) const;
  /// Smallest exponent of v across all terms (0 for the zero polynomial).
  int valuation_in(VarId v) const;
  /// Exact division by v^k (every term must have exponent >= k).
  Polynomial div_var_pow(VarId v, int k) const;
  std::vector<std::int32_t> vars_used() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial mul_int(const BigInt& k) const;
  /// Exact division by an integer; throws NonExactDivision.
  Polynomial div_int(const BigInt& k) const;

  /// Exact polynomial division: returns q with q*b == *this, or throws
  /// NonExactDivision when no such q exists in the polynomial ring.
  Polynomial exact_div(const Polynomial& b) const;

  Polynomial pow(unsigned e) const;

  /// GCD of all coefficients (non-negative; 0 for the zero polynomial).
  BigInt content() const;

  /// Leading term in graded lex order.
  const Monomial& leading_monomial() const;
  const BigInt& leading_coeff() const;

  /// Replace every occurrence of v by the given polynomial.
  Polynomial substitute(VarId v, const Polynomial& value) const;

  Polynomial derivative(VarId v) const;

  /// Coefficients c_0..c_d of *this viewed as a polynomial in v whose
  /// coefficients are polynomials in the remaining variables.
  std::vector<Polynomial> coeffs_in(VarId v) const;
  static Polynomial from_coeffs_in(VarId v, const std::vector<Polynomial>& c);

  /// Canonical text form: terms ascending in graded lex order, decimal
  /// coefficients, '^' for powers, explicit '*'.
  std::string to_string(const VarTable& vars) const;

 private:
  void insert_term(const Monomial& m, const BigInt& c);

  TermMap terms_;
};

/// True iff every monomial of p involves no variable other than v.
bool is_univariate_in(const Polynomial& p, VarId v);
/// The single variable used by p, if p uses at most one.
std::optional<VarId> sole_variable(const Polynomial& p);

/// GCD in Z[x] of two polynomials that are univariate in the same variable
/// (constants allowed). Primitive pseudo-remainder sequence; the result has
/// a positive leading coefficient.
Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b);

}  // namespace gj
