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

#include "gj/series.hpp"

#include <algorithm>
#include <sstream>

#include "gj/error.hpp"

namespace gj {

Series Series::from_rational(const RationalFunction& f, VarId var, int N) {
  if (f.num().is_zero()) return Series(var, N);
  // Unreduced pairs can share a power of var; strip it before expanding.
  int k = std::min(f.num().valuation_in(var), f.den().valuation_in(var));
  Polynomial num = f.num().div_var_pow(var, k);
  Polynomial den = f.den().div_var_pow(var, k);
  std::vector<Polynomial> p = num.coeffs_in(var);
  std::vector<Polynomial> q = den.coeffs_in(var);
  if (q[0].is_zero())
    throw Error("PoleAtZero",
                "denominator constant term vanishes in the expansion variable");
  const Polynomial& q0 = q[0];
  bool unit = q0.is_constant() && q0.constant_term().abs().is_one();
  Series out(var, N);
  for (int n = 0; n <= N; ++n) {
    Polynomial acc = n < static_cast<int>(p.size())
                         ? p[static_cast<std::size_t>(n)]
                         : Polynomial();
    int kmax = std::min<int>(n, static_cast<int>(q.size()) - 1);
    for (int k = 1; k <= kmax; ++k)
      acc -= q[static_cast<std::size_t>(k)] * out.coeff(n - k);
    if (unit) {
      out.coeff(n) = q0.constant_term().sign() < 0 ? -acc : acc;
    } else {
      out.coeff(n) = acc.exact_div(q0);
    }
  }
  return out;
}

Series Series::operator+(const Series& o) const {
  if (var_ != o.var_)
    throw Error("VariableMismatch", "series in different variables");
  int N = std::min(order(), o.order());
  Series r(var_, N);
  for (int i = 0; i <= N; ++i) r.coeff(i) = coeff(i) + o.coeff(i);
  return r;
}

Series Series::operator-(const Series& o) const {
  if (var_ != o.var_)
    throw Error("VariableMismatch", "series in different variables");
  int N = std::min(order(), o.order());
  Series r(var_, N);
  for (int i = 0; i <= N; ++i) r.coeff(i) = coeff(i) - o.coeff(i);
  return r;
}

Series Series::operator*(const Series& o) const {
  if (var_ != o.var_)
    throw Error("VariableMismatch", "series in different variables");
  int N = std::min(order(), o.order());
  Series r(var_, N);
  for (int i = 0; i <= N; ++i) {
    if (coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (o.coeff(j).is_zero()) continue;
      r.coeff(i + j) += coeff(i) * o.coeff(j);
    }
  }
  return r;
}

Series Series::reciprocal() const {
  const Polynomial& c0 = coeff(0);
  if (!c0.is_constant() || !c0.constant_term().abs().is_one())
    throw Error("NonInvertibleConstantTerm",
                "series reciprocal needs constant term +-1");
  bool neg = c0.constant_term().sign() < 0;
  Series r(var_, order());
  r.coeff(0) = Polynomial(BigInt(neg ? -1 : 1));
  for (int n = 1; n <= order(); ++n) {
    Polynomial acc;
    for (int k = 1; k <= n; ++k) acc += coeff(k) * r.coeff(n - k);
    r.coeff(n) = neg ? acc : -acc;
  }
  return r;
}

std::string Series::to_csv() const {
  std::ostringstream os;
  for (int i = 0; i <= order(); ++i) {
    if (i > 0) os << ", ";
    os << coeff(i).constant_value().to_string();
  }
  return os.str();
}

}  // namespace gj
