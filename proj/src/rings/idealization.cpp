#include "torlab/rings/idealization.hpp"

namespace torlab::rings {

namespace {

bool p_local(std::uint32_t p, const Rational& r) {
  return mpz_divisible_ui_p(r.get_den_mpz_t(), p) == 0;
}

bool p_power(std::uint32_t p, Integer d) {
  while (mpz_divisible_ui_p(d.get_mpz_t(), p) != 0) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
  return d == 1;
}

}  // namespace

Rational pruefer_reduce(std::uint32_t p, const Rational& x) {
  if (!p_power(p, x.get_den())) {
    throw Error(ErrorKind::DomainMismatch, x.get_str() + " is not in Z[1/" + std::to_string(p) + "]/Z");
  }
  Integer num = x.get_num(), den = x.get_den();
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return make_rational(r, den);
}

Rational pruefer_act(std::uint32_t p, const Rational& r, const Rational& x) {
  if (!p_local(p, r)) throw Error(ErrorKind::DomainMismatch, r.get_str() + " is not in Z_(p)");
  if (sgn(x) == 0 || sgn(r) == 0) return 0;
  // r = a/b with p ∤ b; x = c/p^k. Then r·x = a·b^{-1}·c/p^k with b^{-1} mod p^k.
  Integer a = r.get_num(), b = r.get_den(), c = x.get_num(), pk = x.get_den();
  Integer binv;
  if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), pk.get_mpz_t()) == 0) {
    if (pk == 1) return 0;
    throw Error(ErrorKind::DomainMismatch, "denominator not invertible modulo p^k");
  }
  return pruefer_reduce(p, make_rational(a * binv * c, pk));
}

IdealizationElement::IdealizationElement(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

IdealizationElement::IdealizationElement(std::uint32_t p, Rational scalar, Rational torsion)
    : IdealizationElement(p) {
  if (!p_local(p, scalar)) throw Error(ErrorKind::DomainMismatch, scalar.get_str() + " is not in Z_(p)");
  scalar_ = std::move(scalar);
  torsion_ = pruefer_reduce(p, torsion);
}

IdealizationElement IdealizationElement::z(std::uint32_t p, std::uint32_t i) {
  return {p, 0, prime_power(p, -static_cast<std::int64_t>(i) - 1)};
}

IdealizationElement IdealizationElement::operator-() const { return {p_, -scalar_, -torsion_}; }

IdealizationElement operator+(const IdealizationElement& a, const IdealizationElement& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::RingMismatch, "idealizations at different primes");
  return {a.p_, a.scalar_ + b.scalar_, a.torsion_ + b.torsion_};
}

IdealizationElement operator-(const IdealizationElement& a, const IdealizationElement& b) { return a + (-b); }

IdealizationElement operator*(const IdealizationElement& a, const IdealizationElement& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::RingMismatch, "idealizations at different primes");
  return {a.p_, a.scalar_ * b.scalar_,
          pruefer_act(a.p_, a.scalar_, b.torsion_) + pruefer_act(a.p_, b.scalar_, a.torsion_)};
}

IdealizationElement IdealizationElement::pow(std::uint32_t n) const {
  IdealizationElement out(p_, 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

bool IdealizationElement::in_maximal_power(std::uint32_t n) const {
  if (n == 0 || sgn(scalar_) == 0) return true;
  return valuation(scalar_, p_) >= static_cast<std::int64_t>(n);
}

std::string IdealizationElement::to_string() const {
  return "(" + scalar_.get_str() + ", " + torsion_.get_str() + ")";
}

json IdealizationElement::to_json() const { return json::array({scalar_.get_str(), torsion_.get_str()}); }

IdealizationElement IdealizationElement::from_json(std::uint32_t p, const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::Parse, "idealization literal must be [\"a/b\", \"c/p^k\"]");
  return {p, parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>())};
}

IdealizationElement idealization_essential_multiplier(const IdealizationElement& u) {
  if (u.is_zero()) throw Error(ErrorKind::ZeroElement, "zero has no essential multiplier");
  const std::uint32_t p = u.prime();
  if (sgn(u.scalar()) != 0) {
    // u = (u' p^n, x): multiply by (0, u'^{-1} / p^{n+1}).
    auto n = valuation(u.scalar(), p);
    Rational unit = u.scalar() * prime_power(p, -n);
    return {p, 0, pruefer_act(p, 1 / unit, prime_power(p, -(n + 1)))};
  }
  // u = (0, c / p^{i+1}) with p ∤ c: multiply by (p^i / c, 0).
  const Rational& x = u.torsion();
  auto i = valuation(Integer(x.get_den()), p) - 1;
  return {p, prime_power(p, i) / Rational(x.get_num()), 0};
}

}  // namespace torlab::rings
