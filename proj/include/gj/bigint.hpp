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

#include <gmp.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gj {

/// Arbitrary-precision signed integer, a thin RAII value type over GMP's
/// mpz_t. All arithmetic is exact; there is no overflow anywhere.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  BigInt(int v) : BigInt(static_cast<long>(v)) {}  // NOLINT
  static BigInt from_unsigned(unsigned long v) {
    BigInt r;
    mpz_set_ui(r.z_, v);
    return r;
  }
  explicit BigInt(std::string_view decimal);

  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
  int sign() const { return mpz_sgn(z_); }

  BigInt operator-() const;
  BigInt operator+(const BigInt& o) const;
  BigInt operator-(const BigInt& o) const;
  BigInt operator*(const BigInt& o) const;
  BigInt& operator+=(const BigInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }

  bool operator==(const BigInt& o) const { return mpz_cmp(z_, o.z_) == 0; }
  bool operator!=(const BigInt& o) const { return !(*this == o); }
  bool operator<(const BigInt& o) const { return mpz_cmp(z_, o.z_) < 0; }
  bool operator<=(const BigInt& o) const { return mpz_cmp(z_, o.z_) <= 0; }
  bool operator>(const BigInt& o) const { return o < *this; }
  bool operator>=(const BigInt& o) const { return o <= *this; }

  /// True iff d divides this exactly (d != 0).
  bool divisible_by(const BigInt& d) const {
    return mpz_divisible_p(z_, d.z_) != 0;
  }

  /// Exact quotient; caller guarantees divisibility.
  BigInt exact_div(const BigInt& d) const;

  BigInt abs() const;
  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt pow(const BigInt& base, unsigned long e);

  bool fits_ulong() const { return mpz_fits_ulong_p(z_) != 0; }
  unsigned long to_ulong() const { return mpz_get_ui(z_); }
  double to_double() const { return mpz_get_d(z_); }

  std::string to_string() const;

 private:
  mpz_t z_;
};

}  // namespace gj
