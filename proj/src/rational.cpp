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

#include "gj/rational.hpp"

#include <set>

#include "gj/error.hpp"

namespace gj {

namespace {

// Both parts together use at most one variable.
bool pair_univariate(const Polynomial& a, const Polynomial& b) {
  std::set<std::int32_t> vs;
  for (std::int32_t v : a.vars_used()) vs.insert(v);
  for (std::int32_t v : b.vars_used()) vs.insert(v);
  return vs.size() <= 1;
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw Error("ZeroDenominator", "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(BigInt(1));
    return;
  }
  if (pair_univariate(num_, den_)) {
    Polynomial g = gcd_univariate(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  } else {
    BigInt c = BigInt::gcd(num_.content(), den_.content());
    if (!c.is_one()) {
      num_ = num_.div_int(c);
      den_ = den_.div_int(c);
    }
  }
  // Canonical sign: the denominator's first term in the rendering order
  // (its lowest monomial) is positive.
  if (den_.terms().begin()->second.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero())
    throw Error("ZeroDenominator", "division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::reciprocal() const {
  if (num_.is_zero())
    throw Error("ZeroDenominator", "reciprocal of the zero rational function");
  return RationalFunction(den_, num_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::substitute(VarId v,
                                              const Polynomial& value) const {
  return RationalFunction(num_.substitute(v, value),
                          den_.substitute(v, value));
}

std::string RationalFunction::to_string(const VarTable& vars) const {
  std::string n = num_.to_string(vars);
  if (den_.is_one()) return n;
  if (num_.term_count() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(vars);
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace gj
