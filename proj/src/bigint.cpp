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

#include "gj/bigint.hpp"

#include <vector>

#include "gj/error.hpp"

namespace gj {

BigInt::BigInt(std::string_view decimal) {
  std::string buf(decimal);
  if (mpz_init_set_str(z_, buf.c_str(), 10) != 0) {
    mpz_clear(z_);
    mpz_init(z_);
    throw Error("BadIntegerLiteral", "cannot parse integer '" + buf + "'");
  }
}

BigInt BigInt::operator-() const {
  BigInt r;
  mpz_neg(r.z_, z_);
  return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
  BigInt r;
  mpz_add(r.z_, z_, o.z_);
  return r;
}

BigInt BigInt::operator-(const BigInt& o) const {
  BigInt r;
  mpz_sub(r.z_, z_, o.z_);
  return r;
}

BigInt BigInt::operator*(const BigInt& o) const {
  BigInt r;
  mpz_mul(r.z_, z_, o.z_);
  return r;
}

BigInt BigInt::exact_div(const BigInt& d) const {
  if (d.is_zero()) throw Error("NonExactDivision", "integer division by zero");
  if (!divisible_by(d))
    throw Error("NonExactDivision",
                to_string() + " is not divisible by " + d.to_string());
  BigInt r;
  mpz_divexact(r.z_, z_, d.z_);
  return r;
}

BigInt BigInt::abs() const {
  BigInt r;
  mpz_abs(r.z_, z_);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.z_, a.z_, b.z_);
  return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.z_, base.z_, e);
  return r;
}

std::string BigInt::to_string() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

}  // namespace gj
