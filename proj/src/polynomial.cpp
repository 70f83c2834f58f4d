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

#include "gj/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gj/error.hpp"

namespace gj {

Monomial Monomial::var(VarId v, std::int32_t e) {
  if (v.index < 0) throw Error("UnknownVariable", "unregistered variable");
  Monomial m;
  if (e > 0) m.exps.emplace_back(v.index, e);
  return m;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps.reserve(a.exps.size() + b.exps.size());
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() && j < b.exps.size()) {
    if (a.exps[i].first < b.exps[j].first) {
      r.exps.push_back(a.exps[i++]);
    } else if (a.exps[i].first > b.exps[j].first) {
      r.exps.push_back(b.exps[j++]);
    } else {
      r.exps.emplace_back(a.exps[i].first, a.exps[i].second + b.exps[j].second);
      ++i;
      ++j;
    }
  }
  for (; i < a.exps.size(); ++i) r.exps.push_back(a.exps[i]);
  for (; j < b.exps.size(); ++j) r.exps.push_back(b.exps[j]);
  return r;
}

bool Monomial::divides(const Monomial& b, const Monomial& a) {
  std::size_t i = 0;
  for (const auto& [v, e] : b.exps) {
    while (i < a.exps.size() && a.exps[i].first < v) ++i;
    if (i == a.exps.size() || a.exps[i].first != v || a.exps[i].second < e)
      return false;
  }
  return true;
}

Monomial Monomial::div(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t j = 0;
  for (const auto& [v, e] : a.exps) {
    std::int32_t sub = 0;
    while (j < b.exps.size() && b.exps[j].first < v) ++j;
    if (j < b.exps.size() && b.exps[j].first == v) sub = b.exps[j].second;
    if (e - sub > 0) r.exps.emplace_back(v, e - sub);
  }
  return r;
}

bool Monomial::Less::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Equal degree: lexicographic by variable index, higher exponent on the
  // earliest variable wins.
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() && j < b.exps.size()) {
    if (a.exps[i].first != b.exps[j].first)
      // The monomial owning the smaller index has positive exponent there,
      // the other has zero: the owner is lex-greater.
      return a.exps[i].first > b.exps[j].first;
    if (a.exps[i].second != b.exps[j].second)
      return a.exps[i].second < b.exps[j].second;
    ++i;
    ++j;
  }
  return i == a.exps.size() && j < b.exps.size();
}

Polynomial::Polynomial(BigInt c) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), std::move(c));
}

Polynomial Polynomial::variable(VarId v) {
  Polynomial p;
  p.terms_.emplace(Monomial::var(v), BigInt(1));
  return p;
}

Polynomial Polynomial::term(Monomial m, BigInt c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_constant() &&
         terms_.begin()->second.is_one();
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

const BigInt& Polynomial::constant_term() const {
  static const BigInt zero(0);
  if (terms_.empty()) return zero;
  const auto& first = *terms_.begin();
  return first.first.is_constant() ? first.second : zero;
}

BigInt Polynomial::constant_value() const {
  if (!is_constant())
    throw Error("NotConstant", "polynomial is not a constant");
  return constant_term();
}

BigInt Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

int Polynomial::degree_in(VarId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

int Polynomial::valuation_in(VarId v) const {
  if (terms_.empty()) return 0;
  int val = -1;
  for (const auto& [m, c] : terms_) {
    int e = m.degree_in(v);
    if (val < 0 || e < val) val = e;
    if (val == 0) break;
  }
  return val;
}

Polynomial Polynomial::div_var_pow(VarId v, int k) const {
  if (k == 0) return *this;
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial dm;
    bool seen = false;
    for (const auto& [var, e] : m.exps) {
      if (var == v.index) {
        seen = true;
        if (e < k)
          throw Error("NonExactDivision", "valuation too small");
        if (e > k) dm.exps.emplace_back(var, e - k);
      } else {
        dm.exps.emplace_back(var, e);
      }
    }
    if (!seen) throw Error("NonExactDivision", "valuation too small");
    r.terms_.emplace(std::move(dm), c);
  }
  return r;
}

std::vector<std::int32_t> Polynomial::vars_used() const {
  std::set<std::int32_t> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exps) vs.insert(v);
  return std::vector<std::int32_t>(vs.begin(), vs.end());
}

void Polynomial::insert_term(const Monomial& m, const BigInt& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) insert_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) insert_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.insert_term(Monomial::mul(ma, mb), ca * cb);
  return r;
}

Polynomial Polynomial::mul_int(const BigInt& k) const {
  if (k.is_zero()) return Polynomial();
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

Polynomial Polynomial::div_int(const BigInt& k) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.exact_div(k));
  return r;
}

Polynomial Polynomial::exact_div(const Polynomial& b) const {
  if (b.is_zero())
    throw Error("NonExactDivision", "division by the zero polynomial");
  Polynomial rem(*this);
  Polynomial q;
  const Monomial& lmb = b.leading_monomial();
  const BigInt& lcb = b.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& lma = rem.leading_monomial();
    const BigInt& lca = rem.leading_coeff();
    if (!Monomial::divides(lmb, lma) || !lca.divisible_by(lcb))
      throw Error("NonExactDivision", "polynomial division leaves a remainder");
    Monomial qm = Monomial::div(lma, lmb);
    BigInt qc = lca.exact_div(lcb);
    Polynomial t = Polynomial::term(qm, qc);
    q += t;
    rem -= t * b;
  }
  return q;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(BigInt(1));
  Polynomial base(*this);
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

BigInt Polynomial::content() const {
  BigInt g(0);
  for (const auto& [m, c] : terms_) {
    g = BigInt::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty())
    throw Error("NotConstant", "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const BigInt& Polynomial::leading_coeff() const {
  if (terms_.empty())
    throw Error("NotConstant", "zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Polynomial Polynomial::substitute(VarId v, const Polynomial& value) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    int e = m.degree_in(v);
    if (e == 0) {
      r.insert_term(m, c);
      continue;
    }
    Monomial rest;
    for (const auto& [var, exp] : m.exps)
      if (var != v.index) rest.exps.emplace_back(var, exp);
    Polynomial piece =
        Polynomial::term(rest, c) * value.pow(static_cast<unsigned>(e));
    r += piece;
  }
  return r;
}

Polynomial Polynomial::derivative(VarId v) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    int e = m.degree_in(v);
    if (e == 0) continue;
    Monomial dm;
    for (const auto& [var, exp] : m.exps) {
      if (var == v.index) {
        if (exp > 1) dm.exps.emplace_back(var, exp - 1);
      } else {
        dm.exps.emplace_back(var, exp);
      }
    }
    r.insert_term(dm, c * BigInt(e));
  }
  return r;
}

std::vector<Polynomial> Polynomial::coeffs_in(VarId v) const {
  std::vector<Polynomial> out(static_cast<std::size_t>(degree_in(v)) + 1);
  for (const auto& [m, c] : terms_) {
    int e = m.degree_in(v);
    Monomial rest;
    for (const auto& [var, exp] : m.exps)
      if (var != v.index) rest.exps.emplace_back(var, exp);
    out[static_cast<std::size_t>(e)] += Polynomial::term(rest, c);
  }
  return out;
}

Polynomial Polynomial::from_coeffs_in(VarId v,
                                      const std::vector<Polynomial>& c) {
  Polynomial r;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e].is_zero()) continue;
    r += c[e] * Polynomial::term(Monomial::var(v, static_cast<int>(e)),
                                 BigInt(1));
  }
  return r;
}

std::string Polynomial::to_string(const VarTable& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? "-" : "+");
    }
    bool coeff_shown = !(a.is_one() && !m.is_constant());
    if (coeff_shown) os << a.to_string();
    bool need_star = coeff_shown;
    for (const auto& [v, e] : m.exps) {
      if (need_star) os << "*";
      os << vars.name(VarId{v});
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

bool is_univariate_in(const Polynomial& p, VarId v) {
  for (const auto& [m, c] : p.terms())
    for (const auto& [var, e] : m.exps)
      if (var != v.index) return false;
  return true;
}

std::optional<VarId> sole_variable(const Polynomial& p) {
  std::optional<VarId> found;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [var, e] : m.exps) {
      if (!found) {
        found = VarId{var};
      } else if (found->index != var) {
        return std::nullopt;
      }
    }
  }
  return found ? found : std::optional<VarId>(VarId{-1});
}

namespace {

// Pseudo-remainder of primitive univariate a by b (deg a >= deg b), with
// the content stripped from the result.
Polynomial primitive_prem(const Polynomial& a, const Polynomial& b, VarId v) {
  std::vector<Polynomial> ra = a.coeffs_in(v);
  std::vector<Polynomial> rb = b.coeffs_in(v);
  int da = static_cast<int>(ra.size()) - 1;
  int db = static_cast<int>(rb.size()) - 1;
  BigInt lb = rb[static_cast<std::size_t>(db)].constant_value();
  Polynomial rem = a;
  for (int k = da; k >= db; --k) {
    std::vector<Polynomial> rc = rem.coeffs_in(v);
    if (static_cast<int>(rc.size()) - 1 < k) continue;
    BigInt lead = rc[static_cast<std::size_t>(k)].constant_value();
    if (lead.is_zero()) continue;
    // rem = lb*rem - lead*x^(k-db)*b
    rem = rem.mul_int(lb) -
          b * Polynomial::term(Monomial::var(v, k - db), lead);
  }
  BigInt cont = rem.content();
  if (!cont.is_zero() && !cont.is_one()) rem = rem.div_int(cont);
  return rem;
}

}  // namespace

Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return Polynomial();
  if (a.is_zero()) return b.leading_coeff().sign() < 0 ? -b : b;
  if (b.is_zero()) return a.leading_coeff().sign() < 0 ? -a : a;

  std::optional<VarId> va = sole_variable(a);
  std::optional<VarId> vb = sole_variable(b);
  if (!va || !vb)
    throw Error("NotUnivariate", "gcd_univariate needs univariate operands");
  VarId v = va->index >= 0 ? *va : *vb;
  if (va->index >= 0 && vb->index >= 0 && va->index != vb->index)
    throw Error("NotUnivariate", "gcd_univariate operands mix variables");

  BigInt ca = a.content(), cb = b.content();
  BigInt cg = BigInt::gcd(ca, cb);
  if (v.index < 0) return Polynomial(cg);  // both constants

  Polynomial pa = a.div_int(ca), pb = b.div_int(cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = primitive_prem(pa, pb, v);
    pa = pb;
    pb = r;
    if (!pb.is_zero() && pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  }
  if (pa.leading_coeff().sign() < 0) pa = -pa;
  return pa.mul_int(cg);
}

}  // namespace gj
