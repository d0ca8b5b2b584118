#include "torlab/rings/element.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace torlab::rings {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

template <class Fn>
RingElement binary(const RingElement& x, const RingElement& y, Fn fn) {
  if (x.index() != y.index()) throw Error(ErrorKind::RingMismatch, "elements from different ring families");
  return std::visit(
      [&](const auto& a) -> RingElement {
        using T = std::decay_t<decltype(a)>;
        return fn(a, std::get<T>(y));
      },
      x);
}

}  // namespace

std::string to_string(Family f) {
  switch (f) {
    case Family::Polynomial: return "polynomial";
    case Family::MonoidAlgebra: return "monoid-algebra";
    case Family::MonomialQuotient: return "monomial-quotient";
    case Family::ST: return "ST";
    case Family::SnLocalized: return "Sn-localized";
    case Family::Idealization: return "idealization";
    case Family::TensorLevel: return "tensor-level";
    case Family::EventualSequence: return "eventual-sequence";
    case Family::FiniteProduct: return "finite-product";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (auto f : {Family::Polynomial, Family::MonoidAlgebra, Family::MonomialQuotient, Family::ST, Family::SnLocalized,
                 Family::Idealization, Family::TensorLevel, Family::EventualSequence, Family::FiniteProduct}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorKind::Parse, "unknown ring family '" + name + "'");
}

RingPtr Ring::from_json(const json& d) {
  if (!d.is_object() || !d.contains("family")) throw Error(ErrorKind::Parse, "ring descriptor needs a family");
  const Family family = parse_family(d.at("family").get<std::string>());
  const json params = d.value("params", json::object());
  auto prime = [&]() {
    auto p = params.value("p", 0U);
    if (!is_prime(p)) throw Error(ErrorKind::Parse, "descriptor needs a prime p");
    return p;
  };
  switch (family) {
    case Family::Polynomial:
    case Family::MonomialQuotient: {
      auto r = monomial(MonomialRing::from_json(params));
      if (family == Family::Polynomial && !r->monomial_->relations.empty()) {
        throw Error(ErrorKind::Parse, "polynomial family takes no relations");
      }
      std::const_pointer_cast<Ring>(r)->family_ = family;
      return r;
    }
    case Family::MonoidAlgebra:
      return monoid(params.contains("quotient") ? std::optional(AlphaCut::from_json(params.at("quotient")))
                                                : std::nullopt);
    case Family::ST: return st(prime());
    case Family::SnLocalized: return sn(prime());
    case Family::Idealization: return idealization(prime());
    case Family::TensorLevel: return tensor(prime(), params.value("level", 1U));
    case Family::EventualSequence: return sequences();
    case Family::FiniteProduct: return product(params.value("arity", std::size_t{2}));
  }
  throw Error(ErrorKind::Parse, "unhandled ring family");
}

RingPtr Ring::monomial(MonomialRing ring) {
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = ring.relations.empty() ? Family::Polynomial : Family::MonomialQuotient;
  r->monomial_ = std::make_shared<const MonomialRing>(std::move(ring));
  return r;
}

RingPtr Ring::monoid(std::optional<AlphaCut> quotient) {
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = Family::MonoidAlgebra;
  r->quotient_ = std::move(quotient);
  return r;
}

RingPtr Ring::st(std::uint32_t p) {
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = Family::ST;
  r->prime_ = p;
  return r;
}

RingPtr Ring::sn(std::uint32_t p) {
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = Family::SnLocalized;
  r->prime_ = p;
  return r;
}

RingPtr Ring::idealization(std::uint32_t p) {
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = Family::Idealization;
  r->prime_ = p;
  return r;
}

RingPtr Ring::tensor(std::uint32_t p, std::uint32_t level) {
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = Family::TensorLevel;
  r->prime_ = p;
  r->level_ = level;
  return r;
}

RingPtr Ring::sequences() {
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = Family::EventualSequence;
  return r;
}

RingPtr Ring::product(std::size_t arity) {
  if (arity == 0) throw Error(ErrorKind::InvalidArgument, "finite product needs at least one factor");
  std::shared_ptr<Ring> r(new Ring());
  r->family_ = Family::FiniteProduct;
  r->arity_ = arity;
  return r;
}

std::string Ring::scalar() const {
  switch (family_) {
    case Family::TensorLevel: return "GF(" + std::to_string(prime_) + ")(s)";
    case Family::ST:
    case Family::SnLocalized: return "ZZ[1/" + std::to_string(prime_) + "]";
    case Family::Idealization: return "ZZ_(" + std::to_string(prime_) + ")";
    default: return "QQ";
  }
}

json Ring::descriptor() const {
  json params = json::object();
  switch (family_) {
    case Family::Polynomial:
    case Family::MonomialQuotient: params = monomial_->to_json(); break;
    case Family::MonoidAlgebra:
      if (quotient_) params["quotient"] = quotient_->to_json();
      break;
    case Family::ST:
    case Family::SnLocalized:
    case Family::Idealization: params["p"] = prime_; break;
    case Family::TensorLevel:
      params["p"] = prime_;
      params["level"] = level_;
      break;
    case Family::EventualSequence: break;
    case Family::FiniteProduct: params["arity"] = arity_; break;
  }
  return {{"family", to_string(family_)}, {"scalar", scalar()}, {"params", params}};
}

RingElement Ring::zero() const {
  switch (family_) {
    case Family::Polynomial:
    case Family::MonomialQuotient: return Poly(monomial_);
    case Family::MonoidAlgebra: return MonoidElement(quotient_);
    case Family::ST: return STElement(prime_);
    case Family::SnLocalized: return SnFraction(prime_);
    case Family::Idealization: return IdealizationElement(prime_);
    case Family::TensorLevel: return TensorLevelElement(prime_, level_);
    case Family::EventualSequence: return EventualSequence::constant(0);
    case Family::FiniteProduct: return FiniteProductElement(std::vector<Rational>(arity_, Rational(0)));
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled family");
}

RingElement Ring::one() const {
  switch (family_) {
    case Family::Polynomial:
    case Family::MonomialQuotient: return Poly::constant(monomial_, 1);
    case Family::MonoidAlgebra: return MonoidElement::basis(0, 1, quotient_);
    case Family::ST: return STElement::constant(prime_, 1);
    case Family::SnLocalized: return SnFraction(STElement::constant(prime_, 1));
    case Family::Idealization: return IdealizationElement(prime_, 1, 0);
    case Family::TensorLevel: return TensorLevelElement::one(prime_, level_);
    case Family::EventualSequence: return EventualSequence::constant(1);
    case Family::FiniteProduct: return FiniteProductElement(std::vector<Rational>(arity_, Rational(1)));
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled family");
}

RingElement Ring::element(const json& literal) const {
  switch (family_) {
    case Family::Polynomial:
    case Family::MonomialQuotient: return Poly::from_json(monomial_, literal);
    case Family::MonoidAlgebra: return MonoidElement::from_json(literal, quotient_);
    case Family::ST: return STElement::from_json(prime_, literal);
    case Family::SnLocalized: return SnFraction::from_json(prime_, literal);
    case Family::Idealization: return IdealizationElement::from_json(prime_, literal);
    case Family::TensorLevel: return TensorLevelElement::from_json(prime_, level_, literal);
    case Family::EventualSequence: return EventualSequence::from_json(literal);
    case Family::FiniteProduct: {
      auto x = FiniteProductElement::from_json(literal);
      if (x.arity() != arity_) throw Error(ErrorKind::Parse, "finite product literal of wrong arity");
      return x;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unhandled family");
}

void Ring::require_member(const RingElement& x) const {
  bool ok = std::visit(
      overloaded{
          [&](const Poly& a) {
            return (family_ == Family::Polynomial || family_ == Family::MonomialQuotient) &&
                   (a.ring_ptr() == monomial_ || a.ring() == *monomial_);
          },
          [&](const MonoidElement& a) { return family_ == Family::MonoidAlgebra && a.quotient() == quotient_; },
          [&](const STElement& a) { return family_ == Family::ST && a.prime() == prime_; },
          [&](const SnFraction& a) { return family_ == Family::SnLocalized && a.prime() == prime_; },
          [&](const IdealizationElement& a) { return family_ == Family::Idealization && a.prime() == prime_; },
          [&](const TensorLevelElement& a) {
            return family_ == Family::TensorLevel && a.prime() == prime_ && a.level() == level_;
          },
          [&](const EventualSequence&) { return family_ == Family::EventualSequence; },
          [&](const FiniteProductElement& a) { return family_ == Family::FiniteProduct && a.arity() == arity_; },
      },
      x);
  if (!ok) throw Error(ErrorKind::RingMismatch, "element does not belong to " + to_string(family_) + " ring");
}

// ---------------------------------------------------------------------------

RingElement ring_add(const RingElement& x, const RingElement& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a + b; });
}

RingElement ring_sub(const RingElement& x, const RingElement& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a - b; });
}

RingElement ring_mul(const RingElement& x, const RingElement& y) {
  return binary(x, y, [](const auto& a, const auto& b) { return a * b; });
}

RingElement ring_neg(const RingElement& x) {
  return std::visit([](const auto& a) -> RingElement { return -a; }, x);
}

RingElement ring_pow(const RingElement& x, std::uint32_t n) {
  return std::visit([n](const auto& a) -> RingElement { return a.pow(n); }, x);
}

RingElement ring_normalize(const RingElement& x) {
  // Adding zero runs every family's canonicalization on a fresh value.
  return std::visit(
      [](const auto& a) -> RingElement {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, FiniteProductElement>) {
          return a;
        } else {
          return a + (a - a);
        }
      },
      x);
}

bool ring_is_zero(const RingElement& x) {
  return std::visit([](const auto& a) { return a.is_zero(); }, x);
}

bool ring_equal(const RingElement& x, const RingElement& y) {
  if (x.index() != y.index()) throw Error(ErrorKind::RingMismatch, "elements from different ring families");
  return std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        return a == std::get<T>(y);
      },
      x);
}

std::string element_to_string(const RingElement& x) {
  return std::visit([](const auto& a) { return a.to_string(); }, x);
}

json element_to_json(const RingElement& x) {
  return std::visit([](const auto& a) { return a.to_json(); }, x);
}

// ---------------------------------------------------------------------------

namespace {

bool support_covered(const std::vector<RingElement>& gens, const RingElement& x) {
  return std::visit(
      overloaded{
          [&](const EventualSequence& s) {
            std::size_t start = s.prefix().size(), period = s.period().size();
            for (const auto& g : gens) {
              const auto& e = std::get<EventualSequence>(g);
              start = std::max(start, e.prefix().size());
              period = std::lcm(period, e.period().size());
            }
            for (std::size_t n = 0; n < start + period; ++n) {
              if (sgn(s.at(n)) == 0) continue;
              bool covered = std::any_of(gens.begin(), gens.end(), [&](const RingElement& g) {
                return sgn(std::get<EventualSequence>(g).at(n)) != 0;
              });
              if (!covered) return false;
            }
            return true;
          },
          [&](const FiniteProductElement& s) {
            for (std::size_t i = 0; i < s.arity(); ++i) {
              if (sgn(s.components()[i]) == 0) continue;
              bool covered = std::any_of(gens.begin(), gens.end(), [&](const RingElement& g) {
                return sgn(std::get<FiniteProductElement>(g).components()[i]) != 0;
              });
              if (!covered) return false;
            }
            return true;
          },
          [](const auto&) -> bool { throw Error(ErrorKind::FamilyNotDecidable, "support test"); },
      },
      x);
}

bool in_schema(const VariableSchema& schema, const Monomial& m) {
  std::uint64_t deg = 0;
  for (const auto& [v, e] : m.factors()) deg += schema.range.contains(v) ? e : 0;
  return deg >= schema.power;
}

}  // namespace

bool IdealHandle::contains(const RingElement& x) const {
  ring->require_member(x);
  if (ring_is_zero(x)) return true;
  if (closure) {
    return std::visit(
        overloaded{
            [&](const AlphaCut& cut) {
              if (!std::holds_alternative<MonoidElement>(x)) throw Error(ErrorKind::RingMismatch, "alpha cut");
              return cut.contains(std::get<MonoidElement>(x).order());
            },
            [&](const LexCut& cut) {
              if (!std::holds_alternative<SnFraction>(x)) throw Error(ErrorKind::RingMismatch, "lex cut");
              auto v = sn_valuation(std::get<SnFraction>(x));
              if (v.t_order != cut.value.t_order) return v.t_order > cut.value.t_order;
              return v.p_valuation >= cut.value.p_valuation;
            },
            [&](const VariableSchema& schema) {
              if (!std::holds_alternative<Poly>(x)) throw Error(ErrorKind::RingMismatch, "variable schema");
              const auto& terms = std::get<Poly>(x).terms();
              return std::all_of(terms.begin(), terms.end(),
                                 [&](const auto& t) { return in_schema(schema, t.first); });
            },
            [&](const TailZero&) {
              if (!std::holds_alternative<EventualSequence>(x)) throw Error(ErrorKind::RingMismatch, "tail zero");
              return std::get<EventualSequence>(x).in_finite_support_ideal();
            },
        },
        *closure);
  }
  if (generators.empty()) return false;
  switch (ring->family()) {
    case Family::Polynomial:
    case Family::MonomialQuotient: {
      std::vector<Monomial> gens;
      for (const auto& g : generators) {
        auto m = std::get<Poly>(g).as_monomial();
        if (!m) throw Error(ErrorKind::NonMonomial, "membership needs monomial generators");
        gens.push_back(*m);
      }
      const auto& terms = std::get<Poly>(x).terms();
      return std::all_of(terms.begin(), terms.end(), [&](const auto& t) {
        return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(t.first); });
      });
    }
    case Family::MonoidAlgebra: {
      Rational low = std::get<MonoidElement>(generators.front()).order();
      for (const auto& g : generators) low = std::min(low, std::get<MonoidElement>(g).order());
      return std::get<MonoidElement>(x).order() >= low;
    }
    case Family::SnLocalized:
      return std::any_of(generators.begin(), generators.end(), [&](const RingElement& g) {
        return !ring_is_zero(g) && sn_divides(std::get<SnFraction>(g), std::get<SnFraction>(x));
      });
    case Family::Idealization: {
      // Scalar generators with least valuation k give p^k Z_(p) ⊕ M; torsion-only
      // generators give the cyclic subgroup of the largest order.
      const auto& u = std::get<IdealizationElement>(x);
      std::optional<std::int64_t> k;
      Integer order = 1;
      for (const auto& g : generators) {
        const auto& e = std::get<IdealizationElement>(g);
        if (sgn(e.scalar()) != 0) {
          auto v = valuation(e.scalar(), e.prime());
          k = k ? std::min(*k, v) : v;
        } else if (e.torsion().get_den() > order) {
          order = e.torsion().get_den();
        }
      }
      if (k) return sgn(u.scalar()) == 0 || valuation(u.scalar(), u.prime()) >= *k;
      return sgn(u.scalar()) == 0 && u.torsion().get_den() <= order;
    }
    case Family::EventualSequence:
    case Family::FiniteProduct: return support_covered(generators, x);
    default: break;
  }
  throw Error(ErrorKind::FamilyNotDecidable, "no membership test for " + rings::to_string(ring->family()));
}

std::string IdealHandle::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    out += (i ? ", " : "") + element_to_string(generators[i]);
  }
  out += ">";
  if (closure) {
    out += std::visit(overloaded{
                          [](const AlphaCut& c) { return " cut " + c.to_string(); },
                          [](const LexCut& c) {
                            return " value >= (" + std::to_string(c.value.t_order) + ", " +
                                   std::to_string(c.value.p_valuation) + ")";
                          },
                          [](const VariableSchema& s) { return " all variables, power " + std::to_string(s.power); },
                          [](const TailZero&) { return std::string(" finite support"); },
                      },
                      *closure);
  }
  return out;
}

json IdealHandle::to_json() const {
  json gens = json::array();
  for (const auto& g : generators) gens.push_back(element_to_json(g));
  json out = ring->descriptor();
  out["generators"] = gens;
  if (closure) {
    out["closure"] = std::visit(overloaded{
                                    [](const AlphaCut& c) { return json{{"alpha_cut", c.to_json()}}; },
                                    [](const LexCut& c) { return json{{"lex_cut", c.value.to_json()}}; },
                                    [](const VariableSchema& s) {
                                      json j = {{"from", s.range.lo}, {"power", s.power}};
                                      if (s.range.hi) j["to"] = *s.range.hi;
                                      return json{{"variable_schema", j}};
                                    },
                                    [](const TailZero&) { return json{{"tail_zero", true}}; },
                                },
                                *closure);
  }
  return out;
}

IdealHandle make_ideal(RingPtr ring, std::vector<RingElement> generators) {
  for (const auto& g : generators) {
    ring->require_member(g);
    if (ring_is_zero(g)) throw Error(ErrorKind::ZeroElement, "ideal generators must be nonzero");
  }
  return {std::move(ring), std::move(generators), std::nullopt};
}

IdealHandle variable_ideal(RingPtr ring) {
  if (!ring->monomial_ring()) throw Error(ErrorKind::InvalidArgument, "variable ideal needs a monomial ring");
  const auto& mr = ring->monomial_ring();
  IdealHandle out{ring, {}, VariableSchema{IndexRange{0, std::nullopt}, 1}};
  for (std::uint32_t i = 0; i <= mr->max_index(); ++i) {
    Poly y = Poly::variable(mr, i);
    if (!y.is_zero()) out.generators.emplace_back(std::move(y));
  }
  return out;
}

IdealHandle cut_ideal(RingPtr ring, AlphaCut cut) {
  if (ring->family() != Family::MonoidAlgebra) throw Error(ErrorKind::RingMismatch, "cut ideals live in K[Q]");
  IdealHandle out{ring, {}, cut};
  if (cut.attained) out.generators.emplace_back(MonoidElement::basis(cut.alpha, 1, ring->quotient()));
  return out;
}

AlphaInvariant alpha_invariant(const IdealHandle& c) {
  if (c.ring->family() != Family::MonoidAlgebra) throw Error(ErrorKind::RingMismatch, "alpha invariant lives in K[Q]");
  if (c.closure && std::holds_alternative<AlphaCut>(*c.closure)) {
    const auto& cut = std::get<AlphaCut>(*c.closure);
    return {cut.alpha, cut.attained};
  }
  if (c.generators.empty()) throw Error(ErrorKind::NotNormalizable, "ideal without generators");
  std::optional<Rational> alpha;
  for (const auto& g : c.generators) {
    const auto& e = std::get<MonoidElement>(g);
    if (e.is_zero()) throw Error(ErrorKind::NotNormalizable, "zero generator is not unit * e_alpha");
    alpha = alpha ? std::min(*alpha, e.order()) : e.order();
  }
  return {*alpha, true};
}

IdealHandle ideal_power(const IdealHandle& c, std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "ideal power needs n >= 1");
  IdealHandle out{c.ring, {}, std::nullopt};
  if (c.closure) {
    out.closure = std::visit(overloaded{
                                 [n](const AlphaCut& cut) -> Closure { return cut.power(n); },
                                 [n](const LexCut& cut) -> Closure {
                                   return LexCut{{cut.value.t_order * n, cut.value.p_valuation * n}};
                                 },
                                 [n](const VariableSchema& s) -> Closure { return VariableSchema{s.range, s.power * n}; },
                                 [](const TailZero& t) -> Closure { return t; },
                             },
                             *c.closure);
  }
  // Nondecreasing index sequences; a zero partial product kills every extension.
  const auto& gens = c.generators;
  std::function<void(std::size_t, std::uint32_t, const RingElement&)> extend =
      [&](std::size_t from, std::uint32_t depth, const RingElement& partial) {
        if (depth == n) {
          bool seen = std::any_of(out.generators.begin(), out.generators.end(),
                                  [&](const RingElement& g) { return ring_equal(g, partial); });
          if (!seen) out.generators.push_back(partial);
          return;
        }
        for (std::size_t i = from; i < gens.size(); ++i) {
          RingElement next = ring_mul(partial, gens[i]);
          if (!ring_is_zero(next)) extend(i, depth + 1, next);
        }
      };
  if (!gens.empty()) extend(0, 0, c.ring->one());
  return out;
}

}  // namespace torlab::rings
