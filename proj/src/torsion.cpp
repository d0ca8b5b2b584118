#include "torlab/torsion.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <functional>
#include <set>

namespace torlab::torsion {

using namespace rings;
using graded::operator+;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool zero_mod(const RingElement& y, const std::optional<IdealHandle>& modulo) {
  return modulo ? modulo->contains(y) : ring_is_zero(y);
}

std::optional<RingElement> nonzero_or_none(RingElement y, const std::optional<IdealHandle>& modulo) {
  if (zero_mod(y, modulo)) return std::nullopt;
  return y;
}

std::optional<RingElement> cut_witness(const AlphaCut& cut, std::uint32_t n, const MonoidElement& x) {
  const auto& q = x.quotient();
  const AlphaCut cn = cut.power(n);
  const Rational ord = x.order();
  Rational beta;
  if (cn.attained) {
    beta = cn.alpha;
  } else if (!q) {
    beta = cn.alpha + 1;
  } else {
    // Need ord + beta outside q with beta > n*alpha.
    if (!(ord + cn.alpha < q->alpha)) return std::nullopt;
    beta = cn.alpha + (q->alpha - ord - cn.alpha) / 2;
  }
  MonoidElement y = MonoidElement::basis(beta, 1, q) * x;
  if (y.is_zero()) return std::nullopt;
  return RingElement(y);
}

SnFraction lex_generator(std::uint32_t p, const LexValue& v) {
  std::vector<LocalizedInteger> coeffs(v.t_order + 1, LocalizedInteger(p, 0));
  coeffs[v.t_order] = LocalizedInteger(p, 1, v.p_valuation);
  return SnFraction(STElement(p, std::move(coeffs)));
}

std::optional<RingElement> schema_witness(const IdealHandle& a, const VariableSchema& s, std::uint32_t n,
                                          const Poly& x, const std::optional<IdealHandle>& modulo) {
  const auto& mr = x.ring_ptr();
  std::uint32_t top = std::max(mr->max_index(), n);
  if (mr->num_variables) top = std::min(top, *mr->num_variables - 1);
  if (s.range.hi) top = std::min(top, *s.range.hi);
  const std::uint64_t length = static_cast<std::uint64_t>(s.power) * n;
  (void)a;
  std::optional<RingElement> found;
  std::function<bool(std::uint32_t, std::uint64_t, const Poly&)> walk = [&](std::uint32_t from, std::uint64_t depth,
                                                                            const Poly& partial) {
    if (depth == length) {
      found = RingElement(partial);
      return true;
    }
    for (std::uint32_t v = from; v <= top; ++v) {
      Poly next = partial * Poly::variable(mr, v);
      if (zero_mod(next, modulo)) continue;
      if (walk(v, depth + 1, next)) return true;
    }
    return false;
  };
  walk(s.range.lo, 0, x);
  return found;
}

std::optional<RingElement> generator_witness(const std::vector<RingElement>& gens, std::uint32_t n,
                                             const RingElement& x, const std::optional<IdealHandle>& modulo) {
  std::optional<RingElement> found;
  std::function<bool(std::size_t, std::uint32_t, const RingElement&)> walk = [&](std::size_t from, std::uint32_t depth,
                                                                                 const RingElement& partial) {
    if (depth == n) {
      found = partial;
      return true;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      RingElement next = ring_mul(partial, gens[i]);
      if (zero_mod(next, modulo)) continue;
      if (walk(i, depth + 1, next)) return true;
    }
    return false;
  };
  walk(0, 0, x);
  return found;
}

json optional_element(const std::optional<RingElement>& x) { return x ? element_to_json(*x) : json(nullptr); }

std::vector<std::uint32_t> support(const Monomial& m) {
  std::vector<std::uint32_t> out;
  for (const auto& [v, e] : m.factors()) out.push_back(v);
  return out;
}

bool meets(const Monomial& m, const std::vector<std::uint32_t>& prime) {
  return std::any_of(m.factors().begin(), m.factors().end(), [&](const auto& f) {
    return std::find(prime.begin(), prime.end(), f.first) != prime.end();
  });
}

json monomials_to_json(const MonomialIdeal& gens) {
  json out = json::array();
  for (const auto& g : gens) out.push_back(g.to_string());
  return out;
}

const MonomialRingPtr& require_monomial_ring(const RingPtr& ring) {
  if (!ring->monomial_ring()) throw Error(ErrorKind::RingMismatch, "needs a monomial ring");
  return ring->monomial_ring();
}

Monomial require_monomial(const RingElement& x) {
  if (!std::holds_alternative<Poly>(x)) throw Error(ErrorKind::RingMismatch, "needs a monomial ring element");
  const auto& f = std::get<Poly>(x);
  if (f.is_zero()) return Monomial();
  auto m = f.as_monomial();
  if (!m) throw Error(ErrorKind::NonMonomial, f.to_string() + " is not a monomial");
  return *m;
}

}  // namespace

std::optional<RingElement> power_times_witness(const IdealHandle& a, std::uint32_t n, const RingElement& x,
                                               const std::optional<IdealHandle>& modulo) {
  a.ring->require_member(x);
  if (zero_mod(x, modulo)) return std::nullopt;
  if (n == 0) return x;
  if (a.closure) {
    return std::visit(
        overloaded{
            [&](const AlphaCut& cut) -> std::optional<RingElement> {
              if (modulo) throw Error(ErrorKind::FamilyNotDecidable, "cut ideals read modulo an ideal");
              return cut_witness(cut, n, std::get<MonoidElement>(x));
            },
            [&](const LexCut& cut) -> std::optional<RingElement> {
              const auto& f = std::get<SnFraction>(x);
              LexValue v{cut.value.t_order * n, cut.value.p_valuation * n};
              return nonzero_or_none(SnFraction(lex_generator(f.prime(), v)) * f, modulo);
            },
            [&](const VariableSchema& s) { return schema_witness(a, s, n, std::get<Poly>(x), modulo); },
            [&](const TailZero&) -> std::optional<RingElement> {
              const auto& s = std::get<EventualSequence>(x);
              const std::size_t span = s.prefix().size() + s.period().size();
              for (std::size_t k = 0; k < span; ++k) {
                if (sgn(s.at(k)) == 0) continue;
                std::vector<Rational> unit(k + 1, Rational(0));
                unit[k] = 1;
                auto y = nonzero_or_none(EventualSequence(unit, {Rational(0)}) * s, modulo);
                if (y) return y;
              }
              return std::nullopt;
            },
        },
        *a.closure);
  }
  if (a.ring->family() == Family::TensorLevel && modulo) {
    throw Error(ErrorKind::FamilyNotDecidable, "membership in tensor-level ideals");
  }
  return generator_witness(a.generators, n, x, modulo);
}

TorsionCertificate is_torsion_element(const RingElement& x, const IdealHandle& a, std::uint32_t bound,
                                      const std::optional<IdealHandle>& modulo) {
  TorsionCertificate cert{x, a, std::nullopt, bound, std::nullopt};
  auto prev = power_times_witness(a, 0, x, modulo);
  if (!prev) {
    cert.exponent = 0;
    return cert;
  }
  for (std::uint32_t n = 1; n <= bound; ++n) {
    auto w = power_times_witness(a, n, x, modulo);
    if (!w) {
      cert.exponent = n;
      cert.witness = prev;
      return cert;
    }
    prev = std::move(w);
  }
  cert.witness = prev;
  return cert;
}

json TorsionCertificate::to_json() const {
  json j = {{"element", element_to_json(element)}, {"ideal", ideal.to_string()}, {"bound", bound}};
  if (exponent) {
    j["exponent"] = *exponent;
  } else {
    j["exponent"] = "unknown-up-to(" + std::to_string(bound) + ")";
  }
  j["witness"] = optional_element(witness);
  return j;
}

NilpotencyResult is_nilpotent(const IdealHandle& a, std::uint32_t bound) {
  auto cert = is_torsion_element(a.ring->one(), a, bound);
  return {cert.exponent, bound, cert.witness};
}

json NilpotencyResult::to_json() const {
  json j = {{"bound", bound}, {"witness", optional_element(witness)}};
  j["index"] = index ? json(*index) : json("unknown-up-to(" + std::to_string(bound) + ")");
  return j;
}

IdempotencyResult is_idempotent(const IdealHandle& a) {
  if (a.closure) {
    if (const auto* cut = std::get_if<AlphaCut>(&*a.closure)) return {cut->power(2) == *cut, std::nullopt};
    if (const auto* lex = std::get_if<LexCut>(&*a.closure)) {
      return {lex->value.t_order == 0 && lex->value.p_valuation == 0, std::nullopt};
    }
    if (std::holds_alternative<TailZero>(*a.closure)) return {true, std::nullopt};
  }
  if (a.ring->family() == Family::TensorLevel) {
    throw Error(ErrorKind::FamilyNotDecidable, "idempotency of tensor-level ideals");
  }
  if (a.generators.empty()) return {true, std::nullopt};
  IdealHandle square = ideal_power(a, 2);
  for (const auto& g : a.generators) {
    if (!square.contains(g)) return {false, g};
  }
  return {true, std::nullopt};
}

json IdempotencyResult::to_json() const { return {{"idempotent", idempotent}, {"witness", optional_element(witness)}}; }

std::optional<std::size_t> t_nilpotency_check(const std::vector<RingElement>& family) {
  if (family.empty()) return std::nullopt;
  std::optional<Poly> running;
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_monomial(family[i]);
    const auto& f = std::get<Poly>(family[i]);
    running = running ? *running * f : f;
    if (running->is_zero()) return i;
  }
  return std::nullopt;
}

AdicResult adic_separated_up_to(const IdealHandle& a, std::uint32_t N, const std::vector<RingElement>& samples) {
  AdicResult out;
  out.bound = N;
  std::vector<IdealHandle> powers;
  for (std::uint32_t n = 1; n <= N; ++n) powers.push_back(ideal_power(a, n));
  for (const auto& x : samples) {
    std::uint32_t exit = 0;
    if (!ring_is_zero(x)) {
      for (std::uint32_t n = 1; n <= N && exit == 0; ++n) {
        if (!powers[n - 1].contains(x)) exit = n;
      }
      if (exit == 0 && !out.witness) {
        out.empty = false;
        out.witness = x;
      }
    }
    out.exit_level.push_back(exit);
  }
  return out;
}

json AdicResult::to_json() const {
  json j = {{"bound", bound}, {"exit_level", exit_level}};
  j["verdict"] = empty ? "empty-up-to(" + std::to_string(bound) + ")" : std::string("witness");
  j["witness"] = optional_element(witness);
  return j;
}

// ---------------------------------------------------------------------------

MonomialIdeal minimalize(MonomialIdeal gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out;
  for (const auto& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m) {
  MonomialIdeal out;
  for (const auto& g : j) out.push_back(g.quotient(gcd(g, m)));
  return minimalize(std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal out;
  for (const auto& g : a)
    for (const auto& h : b) out.push_back(lcm(g, h));
  return minimalize(std::move(out));
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal out = a;
  out.insert(out.end(), b.begin(), b.end());
  return minimalize(std::move(out));
}

bool ideal_contains(const MonomialIdeal& j, const Monomial& m) {
  return std::any_of(j.begin(), j.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool same_ideal(const MonomialIdeal& a, const MonomialIdeal& b) { return minimalize(a) == minimalize(b); }

MonomialIdeal monomial_power(const MonomialIdeal& a, std::uint32_t n) {
  MonomialIdeal current = {Monomial()};
  for (std::uint32_t k = 0; k < n; ++k) {
    MonomialIdeal next;
    for (const auto& c : current)
      for (const auto& g : a) next.push_back(c * g);
    current = minimalize(std::move(next));
  }
  return current;
}

namespace {

MonomialIdeal colon_ideal(const MonomialIdeal& j, const MonomialIdeal& a) {
  if (a.empty()) return {Monomial()};
  MonomialIdeal out = colon(j, a.front());
  for (std::size_t i = 1; i < a.size(); ++i) out = intersect(out, colon(j, a[i]));
  return out;
}

}  // namespace

MonomialIdeal colon_power(const MonomialIdeal& j, const MonomialIdeal& a, std::uint32_t n) {
  MonomialIdeal out = minimalize(j);
  for (std::uint32_t k = 0; k < n; ++k) out = colon_ideal(out, a);
  return out;
}

Saturation saturate(const MonomialIdeal& j, const MonomialIdeal& a, std::uint32_t bound) {
  MonomialIdeal current = minimalize(j);
  for (std::uint32_t n = 0; n <= bound; ++n) {
    MonomialIdeal next = colon_ideal(current, a);
    if (next == current) return {current, n};
    current = std::move(next);
  }
  return {current, std::nullopt};
}

MonomialIdeal relation_ideal(const MonomialRing& ring) { return ring.relations.instances(ring.max_index()); }

MonomialIdeal monomial_generators(const IdealHandle& a) {
  if (a.closure) {
    const auto* s = std::get_if<VariableSchema>(&*a.closure);
    if (!s) throw Error(ErrorKind::NonMonomial, "ideal is not monomial");
    const auto& mr = require_monomial_ring(a.ring);
    MonomialIdeal vars;
    for (std::uint32_t v = s->range.lo; v <= mr->max_index(); ++v) {
      if (s->range.contains(v)) vars.push_back(Monomial::variable(v));
    }
    return monomial_power(vars, s->power);
  }
  MonomialIdeal out;
  for (const auto& g : a.generators) out.push_back(require_monomial(g));
  return minimalize(std::move(out));
}

// ---------------------------------------------------------------------------

json RadicalDefect::to_json() const {
  return {{"found", found}, {"witness", witness}, {"certificate", certificate}};
}

RadicalDefect radical_defect(const IdealHandle& a, std::uint32_t bound, const std::optional<IdealHandle>& gamma) {
  RadicalDefect out;
  const auto& mr = a.ring->monomial_ring();
  if (!gamma && mr && mr->num_variables) {
    const MonomialIdeal j = relation_ideal(*mr);
    const MonomialIdeal gens = monomial_generators(a);
    auto first = saturate(j, gens, bound);
    if (!first.stabilized_at) throw Error(ErrorKind::BoundExhausted, "saturation did not stabilize");
    auto second = saturate(first.ideal, gens, bound);
    if (!second.stabilized_at) throw Error(ErrorKind::BoundExhausted, "saturation did not stabilize");
    out.certificate = {{"gamma_preimage", monomials_to_json(first.ideal)},
                       {"stabilized_at", *first.stabilized_at},
                       {"second_saturation", monomials_to_json(second.ideal)}};
    for (const auto& g : second.ideal) {
      if (!ideal_contains(first.ideal, g)) {
        out.found = true;
        out.witness = {{"element", g.to_string(mr->prefix, mr->names)},
                       {"note", "class in R/Gamma is a-torsion and nonzero"}};
        break;
      }
    }
    return out;
  }
  if (!gamma) throw Error(ErrorKind::GammaNotSchematic, "Gamma_a(R) has no schematic description here");
  json per_generator = json::array();
  bool all_certified = true;
  for (const auto& g : gamma->generators) {
    auto cert = is_torsion_element(g, a, bound);
    all_certified = all_certified && cert.certified();
    per_generator.push_back(cert.to_json());
  }
  const RingElement one = a.ring->one();
  auto unit = is_torsion_element(one, a, bound);
  const bool one_outside = !unit.certified() && !gamma->contains(one);
  bool a_inside = std::all_of(a.generators.begin(), a.generators.end(),
                              [&](const RingElement& g) { return gamma->contains(g); });
  if (a.closure) {
    const auto* sa = std::get_if<VariableSchema>(&*a.closure);
    const auto* sg = gamma->closure ? std::get_if<VariableSchema>(&*gamma->closure) : nullptr;
    a_inside = a_inside && sa && sg && sg->range.lo <= sa->range.lo && !sg->range.hi && sg->power <= sa->power;
  }
  out.certificate = {{"gamma_generators", per_generator},
                     {"unit", unit.to_json()},
                     {"a_inside_gamma", a_inside},
                     {"one_outside_gamma", one_outside}};
  out.found = all_certified && one_outside && a_inside;
  if (out.found) {
    out.witness = {{"element", "1 + Gamma_a(R)"}, {"torsion_exponent_in_quotient", 1}, {"nonzero_up_to", bound}};
  }
  return out;
}

// ---------------------------------------------------------------------------

json MinimalPrimeWitness::to_json() const {
  json ev = json::array();
  for (const auto& [v, g] : evidence) ev.push_back({{"variable", v}, {"generator", g.to_string()}});
  return {{"prime", prime},
          {"element", element_to_json(element)},
          {"annihilator", monomials_to_json(annihilator)},
          {"evidence", ev}};
}

json WeakAssassinResult::to_json() const {
  json j = {{"member", member}, {"contains_annihilator", contains_annihilator}, {"witness", witness.to_json()}};
  if (failing_variable) j["failing_variable"] = *failing_variable;
  return j;
}

MonomialIdeal annihilator(const RingElement& x) {
  const auto& f = std::get<Poly>(x);
  if (f.is_zero()) return {Monomial()};
  const Monomial m = require_monomial(x);
  return colon(relation_ideal(f.ring()), m);
}

WeakAssassinResult weak_assassin_membership(const RingElement& x, const std::vector<std::uint32_t>& prime) {
  WeakAssassinResult out{false, false, std::nullopt, {prime, x, annihilator(x), {}}};
  const auto& ann = out.witness.annihilator;
  out.contains_annihilator = std::all_of(ann.begin(), ann.end(), [&](const Monomial& g) { return meets(g, prime); });
  if (!out.contains_annihilator) return out;
  for (auto v : prime) {
    auto it = std::find_if(ann.begin(), ann.end(), [&](const Monomial& g) {
      auto s = support(g);
      std::vector<std::uint32_t> inside;
      for (auto w : s) {
        if (std::find(prime.begin(), prime.end(), w) != prime.end()) inside.push_back(w);
      }
      return inside == std::vector<std::uint32_t>{v};
    });
    if (it == ann.end()) {
      out.failing_variable = v;
      return out;
    }
    out.witness.evidence.emplace_back(v, *it);
  }
  out.member = true;
  return out;
}

std::vector<std::vector<std::uint32_t>> weak_assassin(const RingElement& x) {
  const auto& f = std::get<Poly>(x);
  const std::uint32_t nv = f.ring().max_index() + 1;
  if (nv > 20) throw Error(ErrorKind::InvalidArgument, "too many variables for prime enumeration");
  const MonomialIdeal ann = annihilator(x);
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1U << nv); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> found;
  std::vector<std::vector<std::uint32_t>> out;
  for (auto m : masks) {
    if (std::any_of(found.begin(), found.end(), [&](std::uint32_t p) { return (p & m) == p; })) continue;
    bool contains = std::all_of(ann.begin(), ann.end(), [&](const Monomial& g) {
      return std::any_of(g.factors().begin(), g.factors().end(), [&](const auto& fe) { return m >> fe.first & 1U; });
    });
    if (!contains) continue;
    found.push_back(m);
    std::vector<std::uint32_t> prime;
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (m >> v & 1U) prime.push_back(v);
    }
    out.push_back(std::move(prime));
  }
  return out;
}

Report torsion_chain_instance_check(const IdealHandle& a, std::uint32_t degree_bound, std::uint32_t torsion_bound) {
  const auto& mr = require_monomial_ring(a.ring);
  const MonomialIdeal gens = monomial_generators(a);
  const std::uint32_t nv = mr->max_index() + 1;
  std::vector<RingElement> samples;
  std::function<void(std::uint32_t, std::uint32_t, Monomial)> enumerate = [&](std::uint32_t v, std::uint32_t left,
                                                                              Monomial m) {
    if (v == nv) {
      Poly p = Poly::term(mr, m);
      if (!p.is_zero()) samples.emplace_back(std::move(p));
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) enumerate(v + 1, left - e, m * Monomial::variable(v, e));
  };
  enumerate(0, degree_bound, Monomial());

  Report r;
  std::size_t torsion = 0, in_va = 0, unknown = 0;
  json violations = json::array();
  for (const auto& x : samples) {
    auto cert = is_torsion_element(x, a, torsion_bound);
    auto primes = weak_assassin(x);
    bool all_contain = std::all_of(primes.begin(), primes.end(), [&](const auto& p) {
      return std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) { return meets(g, p); });
    });
    torsion += cert.certified();
    in_va += all_contain;
    if (cert.certified() && !all_contain) violations.push_back({{"element", element_to_json(x)}, {"primes", primes}});
    if (all_contain && !cert.certified()) {
      ++unknown;
      if (r.witnesses.size() < 5) r.witnesses.push_back(cert.to_json());
    }
  }
  r.expect("torsion elements have weak assassin in V(a)", violations.empty(), violations);
  r.record("weak assassin in V(a) gives a torsion certificate", unknown == 0 ? Status::Pass : Status::Unknown,
           {{"uncertified", unknown}});
  r.record("summary", Status::Pass,
           {{"samples", samples.size()}, {"torsion", torsion}, {"weak_assassin_in_V(a)", in_va}});
  return r;
}

// ---------------------------------------------------------------------------

std::size_t ColonResult::total_dim() const {
  std::size_t s = 0;
  for (const auto& [d, b] : pieces) s += b.cols();
  return s;
}

json ColonResult::to_json() const {
  json out = json::array();
  for (const auto& [d, b] : pieces) {
    if (b.cols() == 0) continue;
    json basis = json::array();
    for (std::size_t c = 0; c < b.cols(); ++c) {
      json col = json::array();
      for (std::size_t r = 0; r < b.rows(); ++r) col.push_back(b(r, c).get_str());
      basis.push_back(col);
    }
    out.push_back(json{{"degree", d}, {"basis", basis}});
  }
  return {{"n", n}, {"pieces", out}, {"total_dim", total_dim()}};
}

namespace {

std::vector<graded::Term> power_terms(const graded::Sequence& a, std::uint32_t n) {
  std::vector<graded::Term> current;
  if (a.empty()) return current;
  current.push_back({graded::Degree(a.front().exponent.size(), 0), Rational(1)});
  for (std::uint32_t k = 0; k < n; ++k) {
    std::map<graded::Degree, graded::Term> next;
    for (const auto& c : current)
      for (const auto& t : a) {
        graded::Term prod{c.exponent + t.exponent, c.coeff * t.coeff};
        next.emplace(prod.exponent, prod);
      }
    current.clear();
    for (auto& [e, t] : next) current.push_back(t);
  }
  return current;
}

}  // namespace

ColonResult colon_submodule(const graded::GradedModule& m, const graded::Sequence& a, std::uint32_t n,
                            const graded::Window& window) {
  const RationalField f;
  ColonResult out;
  out.n = n;
  const auto terms = n == 0 ? std::vector<graded::Term>{} : power_terms(a, n);
  for (const auto& d : window.degrees()) {
    const std::size_t dim = m.dim(d);
    if (dim == 0) continue;
    Matrix<Rational> basis(dim, 0, Rational(0));
    if (n > 0) {
      std::vector<Rational> entries;
      std::size_t rows = 0;
      for (const auto& t : terms) {
        auto block = m.multiply(t, d);
        entries.insert(entries.end(), block.entries().begin(), block.entries().end());
        rows += block.rows();
      }
      auto kernel = linalg::kernel_basis(f, Matrix<Rational>(rows, dim, std::move(entries)));
      basis = linalg::from_columns(dim, kernel, Rational(0));
    }
    out.pieces.emplace_back(d, std::move(basis));
  }
  return out;
}

GammaResult gamma_truncated(const graded::GradedModule& m, const graded::Sequence& a, std::uint32_t N,
                            const graded::Window& window) {
  GammaResult out;
  out.bound = N;
  std::vector<ColonResult> colons;
  for (std::uint32_t n = 0; n <= N; ++n) {
    colons.push_back(colon_submodule(m, a, n, window));
    out.dims_by_n.push_back(colons.back().total_dim());
  }
  for (std::uint32_t n = 1; n < N; ++n) {
    if (out.dims_by_n[n] == out.dims_by_n[n + 1]) {
      out.stabilized_at = n;
      break;
    }
  }
  out.submodule = colons[out.stabilized_at.value_or(N)];
  return out;
}

json GammaResult::to_json() const {
  json j = submodule.to_json();
  j["bound"] = bound;
  j["dims_by_n"] = dims_by_n;
  j["stabilized_at"] = stabilized_at ? json(*stabilized_at) : json("not-stabilized-by(" + std::to_string(bound) + ")");
  return j;
}

}  // namespace torlab::torsion
