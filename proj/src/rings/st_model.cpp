#include "torlab/rings/st_model.hpp"

#include <algorithm>

namespace torlab::rings {

STElement::STElement(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

STElement::STElement(std::uint32_t p, std::vector<LocalizedInteger> coefficients)
    : STElement(p) {
  coeffs_ = std::move(coefficients);
  for (const auto& c : coeffs_) {
    if (c.prime() != p_) throw Error(ErrorKind::DomainMismatch, "coefficient over a different prime");
  }
  trim();
  validate();
}

STElement STElement::constant(std::uint32_t p, const Integer& c) { return {p, {LocalizedInteger(p, c)}}; }

STElement STElement::y(std::uint32_t p, std::uint32_t i) {
  return {p, {LocalizedInteger(p, 0), LocalizedInteger(p, 1, -static_cast<std::int64_t>(i))}};
}

void STElement::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void STElement::validate() const {
  if (!coeffs_.empty() && coeffs_[0].exponent() < 0) {
    throw Error(ErrorKind::DomainMismatch, "constant term " + coeffs_[0].to_literal() + " is not an integer");
  }
}

std::size_t STElement::t_order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  throw Error(ErrorKind::ZeroElement, "t-order of zero");
}

const LocalizedInteger& STElement::lowest_coefficient() const { return coeffs_[t_order()]; }

LocalizedInteger STElement::constant_term() const {
  return coeffs_.empty() ? LocalizedInteger(p_, 0) : coeffs_[0];
}

STElement STElement::operator-() const {
  STElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

STElement operator+(const STElement& a, const STElement& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::RingMismatch, "ST elements over different primes");
  STElement out(a.p_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), LocalizedInteger(a.p_, 0));
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
    if (k < a.coeffs_.size()) out.coeffs_[k] = out.coeffs_[k] + a.coeffs_[k];
    if (k < b.coeffs_.size()) out.coeffs_[k] = out.coeffs_[k] + b.coeffs_[k];
  }
  out.trim();
  return out;
}

STElement operator-(const STElement& a, const STElement& b) { return a + (-b); }

STElement operator*(const STElement& a, const STElement& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::RingMismatch, "ST elements over different primes");
  STElement out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, LocalizedInteger(a.p_, 0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

STElement STElement::pow(std::uint32_t n) const {
  STElement out = constant(p_, 1);
  for (std::uint32_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string STElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[k].to_rational().get_str() + ")";
    if (k > 0) out += "*t" + (k > 1 ? "^" + std::to_string(k) : std::string());
  }
  return out;
}

json STElement::to_json() const {
  json out = json::array();
  for (const auto& c : coeffs_) out.push_back(c.to_literal());
  return out;
}

STElement STElement::from_json(std::uint32_t p, const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "ST literal must be a coefficient list");
  std::vector<LocalizedInteger> cs;
  for (const auto& c : j) cs.push_back(LocalizedInteger::parse(p, c.get<std::string>()));
  return {p, std::move(cs)};
}

// ---------------------------------------------------------------------------

SnFraction::SnFraction(std::uint32_t p) : num_(p), den_(STElement::constant(p, 1)) {}

SnFraction::SnFraction(STElement num) : SnFraction(num, STElement::constant(num.prime(), 1)) {}

SnFraction::SnFraction(STElement num, STElement den) : num_(std::move(num)), den_(std::move(den)) {
  if (num_.prime() != den_.prime()) throw Error(ErrorKind::RingMismatch, "fraction over different primes");
  auto c = den_.constant_term();
  if (c.is_zero() || c.exponent() != 0) {
    throw Error(ErrorKind::InvalidArgument, "denominator " + den_.to_string() + " lies in the maximal ideal");
  }
}

SnFraction operator+(const SnFraction& a, const SnFraction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

SnFraction operator-(const SnFraction& a, const SnFraction& b) { return a + (-b); }

SnFraction operator*(const SnFraction& a, const SnFraction& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

SnFraction SnFraction::pow(std::uint32_t n) const { return {num_.pow(n), den_.pow(n)}; }

bool operator==(const SnFraction& a, const SnFraction& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string SnFraction::to_string() const {
  if (den_ == STElement::constant(den_.prime(), 1)) return num_.to_string();
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

json SnFraction::to_json() const { return {{"num", num_.to_json()}, {"den", den_.to_json()}}; }

SnFraction SnFraction::from_json(std::uint32_t p, const json& j) {
  if (j.is_array()) return SnFraction(STElement::from_json(p, j));
  return {STElement::from_json(p, j.at("num")), STElement::from_json(p, j.at("den"))};
}

LexValue sn_valuation(const SnFraction& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "valuation of zero");
  const auto& low = f.numerator().lowest_coefficient();
  // The denominator's constant term is a p-adic unit, so it contributes nothing.
  return {f.numerator().t_order(), low.exponent()};
}

bool sn_divides(const SnFraction& f, const SnFraction& g) {
  auto vf = sn_valuation(f), vg = sn_valuation(g);
  if (vg.t_order != vf.t_order) return vg.t_order > vf.t_order;
  return vg.p_valuation >= vf.p_valuation;
}

SnFraction sn_quotient(const SnFraction& g, const SnFraction& f) {
  if (!sn_divides(f, g)) throw Error(ErrorKind::InvalidArgument, "quotient of non-divisible elements");
  const std::uint32_t p = f.prime();
  auto vf = sn_valuation(f);
  // f = p^e t^k h with h(0) a p-adic unit integer.
  std::vector<LocalizedInteger> h_coeffs;
  const auto& fc = f.numerator().coefficients();
  for (std::size_t i = vf.t_order; i < fc.size(); ++i) {
    h_coeffs.push_back(fc[i] * LocalizedInteger(p, 1, -vf.p_valuation));
  }
  STElement h(p, std::move(h_coeffs));
  // g * den_f / (p^e t^k), then divide by h * den_g.
  STElement top = g.numerator() * f.denominator();
  std::vector<LocalizedInteger> shifted;
  const auto& tc = top.coefficients();
  for (std::size_t i = vf.t_order; i < tc.size(); ++i) {
    shifted.push_back(tc[i] * LocalizedInteger(p, 1, -vf.p_valuation));
  }
  return {STElement(p, std::move(shifted)), h * g.denominator()};
}

}  // namespace torlab::rings
