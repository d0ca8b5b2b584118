#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "torlab/error.hpp"

namespace torlab {

using Integer = mpz_class;
using Rational = mpq_class;

Integer parse_integer(std::string_view text);
/// Accepts "a" or "a/b"; the result is canonical (reduced, positive denominator).
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Rational make_rational(const Integer& num, const Integer& den);

bool is_prime(std::uint64_t n);

/// Exponent of the prime p in a nonzero integer.
std::int64_t valuation(const Integer& value, std::uint32_t p);
/// p-adic valuation of a nonzero rational.
std::int64_t valuation(const Rational& value, std::uint32_t p);
Integer pow(const Integer& base, std::uint64_t exponent);
/// p^e as a rational; e may be negative.
Rational prime_power(std::uint32_t p, std::int64_t e);

/// Element of Z/p for a prime p.
struct PrimeFieldScalar {
  std::uint32_t characteristic = 2;
  std::uint32_t value = 0;

  friend bool operator==(const PrimeFieldScalar&, const PrimeFieldScalar&) = default;
};

/// Field descriptors used by the generic elimination routines.
struct RationalField {
  using value_type = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  bool is_zero(const Rational& a) const { return sgn(a) == 0; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1 % p_; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + b) % p_);
  }
  value_type sub(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} + p_ - b) % p_);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p_);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type reduce(std::int64_t a) const;
  PrimeFieldScalar scalar(value_type a) const { return {p_, a}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Element m * p^e of Z[1/p] with p not dividing m (zero is 0 * p^0).
class LocalizedInteger {
 public:
  LocalizedInteger() = default;
  LocalizedInteger(std::uint32_t p, Integer mantissa, std::int64_t exponent = 0);
  static LocalizedInteger from_rational(std::uint32_t p, const Rational& value);

  std::uint32_t prime() const { return p_; }
  const Integer& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  bool is_zero() const { return sgn(mantissa_) == 0; }
  Rational to_rational() const;

  LocalizedInteger operator-() const { return {p_, -mantissa_, exponent_}; }
  friend LocalizedInteger operator+(const LocalizedInteger& a, const LocalizedInteger& b);
  friend LocalizedInteger operator-(const LocalizedInteger& a, const LocalizedInteger& b) {
    return a + (-b);
  }
  friend LocalizedInteger operator*(const LocalizedInteger& a, const LocalizedInteger& b);
  friend bool operator==(const LocalizedInteger& a, const LocalizedInteger& b) {
    return a.p_ == b.p_ && a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }

  /// Literal form "m*p^e" used by the descriptor format.
  std::string to_literal() const;
  static LocalizedInteger parse(std::uint32_t p, std::string_view literal);

 private:
  void normalize();

  std::uint32_t p_ = 2;
  Integer mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

}  // namespace torlab
