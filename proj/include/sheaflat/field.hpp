// Copyright 2026 The Authors.
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

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <variant>

#include "sheaflat/error.hpp"

namespace sheaflat {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Runtime description of a coefficient field: either Q or F_p.
struct FieldSpec {
  std::uint32_t characteristic = 0;  // 0 means the rationals

  bool is_rational() const { return characteristic == 0; }
  std::string name() const {
    return is_rational() ? std::string("Q") : "F" + std::to_string(characteristic);
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The rationals, with arbitrary precision canonical fractions.
class Rationals {
 public:
  using Scalar = mpq_class;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long long v) const { return Scalar(static_cast<long>(v)); }
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }
  bool is_one(const Scalar& a) const { return a == 1; }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const {
    if (is_zero(a)) throw Error(ErrorCode::kInvalidArgument, "division by zero");
    return 1 / a;
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return a * inv(b); }
  // a -= f * b
  void sub_mul(Scalar& a, const Scalar& f, const Scalar& b) const { a -= f * b; }
  // a += f * b
  void add_mul(Scalar& a, const Scalar& f, const Scalar& b) const { a += f * b; }

  std::string to_string(const Scalar& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec{0}; }

  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

/// Z/pZ for a prime p < 2^31, elements stored as canonical residues.
class PrimeField {
 public:
  using Scalar = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p >= (1u << 31)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Scalar>(r);
  }
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const {
    mpz_class n = num % p_;
    mpz_class d = den % p_;
    if (n < 0) n += p_;
    if (d < 0) d += p_;
    if (d == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "denominator divisible by " + std::to_string(p_));
    }
    return mul(static_cast<Scalar>(n.get_ui()), inv(static_cast<Scalar>(d.get_ui())));
  }

  bool is_zero(Scalar a) const { return a == 0; }
  bool is_one(Scalar a) const { return a == 1; }
  Scalar add(Scalar a, Scalar b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const {
    return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + p_ - b);
  }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar pow(Scalar a, std::uint64_t e) const {
    Scalar result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }
  // Fermat: a^(p-2) is the inverse of a != 0.
  Scalar inv(Scalar a) const {
    if (a == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero");
    return pow(a, p_ - 2);
  }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  void sub_mul(Scalar& a, Scalar f, Scalar b) const { a = sub(a, mul(f, b)); }
  void add_mul(Scalar& a, Scalar f, Scalar b) const { a = add(a, mul(f, b)); }

  std::string to_string(Scalar a) const { return std::to_string(a); }
  FieldSpec spec() const { return FieldSpec{p_}; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

template <class F>
concept FieldType = std::copyable<F> && std::equality_comparable<F> &&
    requires(const F f, const typename F::Scalar a, typename F::Scalar& out) {
      { f.zero() } -> std::convertible_to<typename F::Scalar>;
      { f.one() } -> std::convertible_to<typename F::Scalar>;
      { f.from_int(1LL) } -> std::convertible_to<typename F::Scalar>;
      { f.is_zero(a) } -> std::convertible_to<bool>;
      { f.add(a, a) } -> std::convertible_to<typename F::Scalar>;
      { f.sub(a, a) } -> std::convertible_to<typename F::Scalar>;
      { f.mul(a, a) } -> std::convertible_to<typename F::Scalar>;
      { f.neg(a) } -> std::convertible_to<typename F::Scalar>;
      { f.inv(a) } -> std::convertible_to<typename F::Scalar>;
      f.sub_mul(out, a, a);
      { f.spec() } -> std::same_as<FieldSpec>;
    };

using AnyField = std::variant<Rationals, PrimeField>;

inline AnyField make_field(const FieldSpec& spec) {
  if (spec.is_rational()) return Rationals{};
  return PrimeField(spec.characteristic);
}

}  // namespace sheaflat
