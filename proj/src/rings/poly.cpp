#include "torlab/rings/poly.hpp"

namespace torlab::rings {

bool MonomialRing::admits(const Monomial& m) const {
  if (!num_variables) return true;
  auto top = m.max_variable();
  return !top || *top < *num_variables;
}

std::string MonomialRing::name(std::uint32_t var) const {
  return var < names.size() ? names[var] : prefix + "_" + std::to_string(var);
}

std::optional<std::uint32_t> MonomialRing::find_variable(const std::string& n) const {
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    if (names[i] == n) return i;
  }
  auto head = prefix + "_";
  if (n.rfind(head, 0) == 0 && n.size() > head.size()) {
    auto idx = static_cast<std::uint32_t>(std::stoul(n.substr(head.size())));
    if (!num_variables || idx < *num_variables) return idx;
  }
  return std::nullopt;
}

json MonomialRing::to_json() const {
  json j = {{"variable_bound", variable_bound}, {"prefix", prefix}, {"relations", relations.to_json()}};
  if (num_variables) j["variables"] = *num_variables;
  if (!names.empty()) j["names"] = names;
  return j;
}

MonomialRing MonomialRing::from_json(const json& params) {
  MonomialRing r;
  if (params.contains("variables")) r.num_variables = params.at("variables").get<std::uint32_t>();
  r.variable_bound = params.value("variable_bound", 12U);
  r.prefix = params.value("prefix", std::string("X"));
  if (params.contains("names")) r.names = params.at("names").get<std::vector<std::string>>();
  if (!r.names.empty() && !r.num_variables) r.num_variables = static_cast<std::uint32_t>(r.names.size());
  if (params.contains("relations")) r.relations = RewriteSystem::from_json(params.at("relations"));
  return r;
}

Poly::Poly(MonomialRingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorKind::InvalidArgument, "polynomial without ring");
}

Poly Poly::constant(MonomialRingPtr ring, const Rational& c) { return term(std::move(ring), Monomial(), c); }

Poly Poly::term(MonomialRingPtr ring, const Monomial& m, const Rational& c) {
  Poly p(std::move(ring));
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(MonomialRingPtr ring, std::uint32_t var, std::uint32_t exp) {
  return term(std::move(ring), Monomial::variable(var, exp));
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (!ring_->admits(m)) {
    throw Error(ErrorKind::InvalidArgument, "monomial " + m.to_string(ring_->prefix) + " uses an undeclared variable");
  }
  if (ring_->relations.kills(m)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::require_same_ring(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_ && !(*a.ring_ == *b.ring_)) {
    throw Error(ErrorKind::RingMismatch, "polynomials from different rings");
  }
}

std::optional<Monomial> Poly::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly operator+(const Poly& a, const Poly& b) {
  Poly::require_same_ring(a, b);
  Poly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly::require_same_ring(a, b);
  Poly out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(ring_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
  return out;
}

Poly Poly::times(const Monomial& m) const {
  Poly out(ring_);
  for (const auto& [t, c] : terms_) out.add_term(t * m, c);
  return out;
}

Poly Poly::pow(std::uint32_t n) const {
  Poly out = constant(ring_, 1);
  for (std::uint32_t i = 0; i < n && !out.is_zero(); ++i) out = out * *this;
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  Poly::require_same_ring(a, b);
  return a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out += "-";
    Rational mag = abs(c);
    std::string mono = m.to_string(ring_->prefix, ring_->names);
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

json Poly::to_json() const {
  json out = json::array();
  for (const auto& [m, c] : terms_) out.push_back(json::array({m.to_json(), c.get_str()}));
  return out;
}

Poly Poly::from_json(MonomialRingPtr ring, const json& j) {
  Poly p(std::move(ring));
  if (j.is_string()) {
    // Bare variable name or rational constant.
    auto s = j.get<std::string>();
    if (auto v = p.ring_->find_variable(s)) return variable(p.ring_, *v);
    return constant(p.ring_, parse_rational(s));
  }
  if (!j.is_array()) throw Error(ErrorKind::Parse, "polynomial literal must be a term list");
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw Error(ErrorKind::Parse, "polynomial term must be [monomial, coeff]");
    p.add_term(Monomial::from_json(t[0]), parse_rational(t[1].get<std::string>()));
  }
  return p;
}

}  // namespace torlab::rings
