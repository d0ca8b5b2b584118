#include "torlab/scalar.hpp"

#include <charconv>

namespace torlab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty integer literal");
  std::string_view digits = text;
  if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorKind::Parse, "bad integer literal '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::Parse, "bad integer literal '" + std::string(text) + "'");
    }
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return Integer(owned, 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (sgn(den) == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }
std::string to_string(const Rational& value) { return value.get_str(); }

Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t valuation(const Integer& value, std::uint32_t p) {
  if (sgn(value) == 0) throw Error(ErrorKind::ZeroElement, "valuation of zero");
  Integer v = abs(value);
  std::int64_t e = 0;
  while (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    ++e;
  }
  return e;
}

std::int64_t valuation(const Rational& value, std::uint32_t p) {
  return valuation(Integer(value.get_num()), p) - valuation(Integer(value.get_den()), p);
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational prime_power(std::uint32_t p, std::int64_t e) {
  Integer pe = pow(Integer(p), static_cast<std::uint64_t>(e < 0 ? -e : e));
  return e < 0 ? make_rational(1, pe) : Rational(pe);
}

Rational RationalField::inv(const Rational& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero");
  return 1 / a;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a % p_ == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero in prime field");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return static_cast<value_type>(result);
}

PrimeField::value_type PrimeField::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

LocalizedInteger::LocalizedInteger(std::uint32_t p, Integer mantissa, std::int64_t exponent)
    : p_(p), mantissa_(std::move(mantissa)), exponent_(exponent) {
  normalize();
}

void LocalizedInteger::normalize() {
  if (sgn(mantissa_) == 0) {
    exponent_ = 0;
    return;
  }
  while (mpz_divisible_ui_p(mantissa_.get_mpz_t(), p_) != 0) {
    mpz_divexact_ui(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), p_);
    ++exponent_;
  }
}

LocalizedInteger LocalizedInteger::from_rational(std::uint32_t p, const Rational& value) {
  if (sgn(value) == 0) return {p, 0, 0};
  Integer den = value.get_den();
  std::int64_t e = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    --e;
  }
  if (den != 1) {
    throw Error(ErrorKind::DomainMismatch,
                value.get_str() + " is not in Z[1/" + std::to_string(p) + "]");
  }
  return {p, Integer(value.get_num()), e};
}

Rational LocalizedInteger::to_rational() const {
  return Rational(mantissa_) * prime_power(p_, exponent_);
}

LocalizedInteger operator+(const LocalizedInteger& a, const LocalizedInteger& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::DomainMismatch, "localized integers at different primes");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t e = std::min(a.exponent_, b.exponent_);
  Integer ma = a.mantissa_ * pow(Integer(a.p_), static_cast<std::uint64_t>(a.exponent_ - e));
  Integer mb = b.mantissa_ * pow(Integer(a.p_), static_cast<std::uint64_t>(b.exponent_ - e));
  return {a.p_, ma + mb, e};
}

LocalizedInteger operator*(const LocalizedInteger& a, const LocalizedInteger& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::DomainMismatch, "localized integers at different primes");
  if (a.is_zero() || b.is_zero()) return {a.p_, 0, 0};
  return {a.p_, a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_};
}

std::string LocalizedInteger::to_literal() const {
  return mantissa_.get_str() + "*p^" + std::to_string(exponent_);
}

LocalizedInteger LocalizedInteger::parse(std::uint32_t p, std::string_view literal) {
  auto star = literal.find("*p^");
  if (star == std::string_view::npos) {
    return from_rational(p, parse_rational(literal));
  }
  Integer m = parse_integer(literal.substr(0, star));
  auto exp_text = literal.substr(star + 3);
  std::int64_t e = 0;
  auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), e);
  if (ec != std::errc() || ptr != exp_text.data() + exp_text.size()) {
    throw Error(ErrorKind::Parse, "bad exponent in '" + std::string(literal) + "'");
  }
  return {p, m, e};
}

}  // namespace torlab
