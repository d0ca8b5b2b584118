#include "torlab/rings/monoid.hpp"

namespace torlab::rings {

bool AlphaCut::subset_of(const AlphaCut& other) const {
  if (alpha != other.alpha) return alpha > other.alpha;
  return other.attained || !attained;
}

std::string AlphaCut::to_string() const {
  return std::string(attained ? "{alpha >= " : "{alpha > ") + alpha.get_str() + "}";
}

json AlphaCut::to_json() const { return {{"alpha", alpha.get_str()}, {"attained", attained}}; }

AlphaCut AlphaCut::from_json(const json& j) {
  AlphaCut c;
  c.alpha = parse_rational(j.at("alpha").get<std::string>());
  c.attained = j.value("attained", true);
  if (sgn(c.alpha) < 0) throw Error(ErrorKind::Parse, "negative cut exponent");
  return c;
}

MonoidElement MonoidElement::basis(const Rational& alpha, const Rational& coeff, std::optional<AlphaCut> quotient) {
  MonoidElement e(std::move(quotient));
  e.add_term(alpha, coeff);
  return e;
}

void MonoidElement::add_term(const Rational& alpha, const Rational& c) {
  if (sgn(alpha) < 0) throw Error(ErrorKind::InvalidArgument, "negative monoid exponent " + alpha.get_str());
  if (sgn(c) == 0) return;
  if (quotient_ && quotient_->contains(alpha)) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void MonoidElement::require_same_ring(const MonoidElement& a, const MonoidElement& b) {
  if (a.quotient_ != b.quotient_) throw Error(ErrorKind::RingMismatch, "monoid algebra elements modulo different cuts");
}

Rational MonoidElement::order() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroElement, "order of zero");
  return terms_.begin()->first;
}

MonoidElement MonoidElement::operator-() const {
  MonoidElement out = *this;
  for (auto& [a, c] : out.terms_) c = -c;
  return out;
}

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
  MonoidElement::require_same_ring(a, b);
  MonoidElement out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MonoidElement operator-(const MonoidElement& a, const MonoidElement& b) { return a + (-b); }

MonoidElement operator*(const MonoidElement& a, const MonoidElement& b) {
  MonoidElement::require_same_ring(a, b);
  MonoidElement out(a.quotient_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

MonoidElement MonoidElement::pow(std::uint32_t n) const {
  MonoidElement out = basis(0, 1, quotient_);
  for (std::uint32_t i = 0; i < n && !out.is_zero(); ++i) out = out * *this;
  return out;
}

bool operator==(const MonoidElement& a, const MonoidElement& b) {
  MonoidElement::require_same_ring(a, b);
  return a.terms_ == b.terms_;
}

std::string MonoidElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += c.get_str() + "*";
    out += "e_{" + e.get_str() + "}";
  }
  return out;
}

json MonoidElement::to_json() const {
  json out = json::array();
  for (const auto& [e, c] : terms_) out.push_back(json::array({json::array({e.get_str()}), c.get_str()}));
  return out;
}

MonoidElement MonoidElement::from_json(const json& j, std::optional<AlphaCut> quotient) {
  MonoidElement out(std::move(quotient));
  if (!j.is_array()) throw Error(ErrorKind::Parse, "monoid element literal must be a term list");
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 1) {
      throw Error(ErrorKind::Parse, "monoid term must be [[\"alpha\"], \"coeff\"]");
    }
    out.add_term(parse_rational(t[0][0].get<std::string>()), parse_rational(t[1].get<std::string>()));
  }
  return out;
}

}  // namespace torlab::rings
