#include <doctest.h>

#include <random>

#include "torlab/rings/element.hpp"

using namespace torlab;
using namespace torlab::rings;

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// R = K[X_0, X_1, ...] / <X_i X_j (i != j), X_i^{i+1}>.
RingPtr ring_2120(std::uint32_t bound) {
  MonomialRing mr;
  mr.variable_bound = bound;
  mr.prefix = "Y";
  mr.relations = RewriteSystem({}, {SchemaRule{Schema::DistinctPairs, {0, std::nullopt}, 1},
                                    SchemaRule{Schema::IndexedPower, {0, std::nullopt}, 1}});
  return Ring::monomial(std::move(mr));
}

Poly y(const RingPtr& r, std::uint32_t i, std::uint32_t e = 1) { return Poly::variable(r->monomial_ring(), i, e); }

Rational small_rational(Rng& rng) { return make_rational(uniform(rng, -6, 6), uniform(rng, 1, 4)); }

FpRational random_fp_rational(Rng& rng, std::uint32_t p) {
  std::vector<std::uint32_t> num(static_cast<std::size_t>(uniform(rng, 0, 2))), den{1};
  for (auto& c : num) c = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(p) - 1));
  if (uniform(rng, 0, 3) == 0) den = {static_cast<std::uint32_t>(uniform(rng, 1, static_cast<int>(p) - 1)), 1};
  return {FpPoly(p, num), FpPoly(p, den)};
}

RingElement random_element(const RingPtr& r, Rng& rng) {
  switch (r->family()) {
    case Family::Polynomial:
    case Family::MonomialQuotient: {
      Poly out(r->monomial_ring());
      const auto top = std::min<std::uint32_t>(r->monomial_ring()->max_index(), 3);
      for (int t = uniform(rng, 0, 3); t > 0; --t) {
        Monomial m;
        for (std::uint32_t v = 0; v <= top; ++v) m = m * Monomial::variable(v, static_cast<std::uint32_t>(uniform(rng, 0, 2)));
        out = out + Poly::term(r->monomial_ring(), m, small_rational(rng));
      }
      return out;
    }
    case Family::MonoidAlgebra: {
      MonoidElement out(r->quotient());
      for (int t = uniform(rng, 0, 3); t > 0; --t) {
        out = out + MonoidElement::basis(make_rational(uniform(rng, 0, 8), 6), small_rational(rng), r->quotient());
      }
      return out;
    }
    case Family::ST: {
      std::vector<LocalizedInteger> c;
      for (int k = uniform(rng, 0, 3); k >= 0; --k) {
        c.emplace_back(r->prime(), uniform(rng, -5, 5), c.empty() ? uniform(rng, 0, 2) : uniform(rng, -2, 2));
      }
      return STElement(r->prime(), std::move(c));
    }
    case Family::SnLocalized: {
      auto num = std::get<STElement>(random_element(Ring::st(r->prime()), rng));
      int d0 = 0;
      while (d0 % static_cast<int>(r->prime()) == 0) d0 = uniform(rng, -7, 7);
      std::vector<LocalizedInteger> den{LocalizedInteger(r->prime(), d0)};
      if (uniform(rng, 0, 1)) den.emplace_back(r->prime(), uniform(rng, -3, 3), uniform(rng, -1, 1));
      return SnFraction(num, STElement(r->prime(), std::move(den)));
    }
    case Family::Idealization: {
      int b = 0;
      while (b % static_cast<int>(r->prime()) == 0) b = uniform(rng, 1, 9);
      Rational torsion = make_rational(uniform(rng, 0, 30), pow(Integer(r->prime()), uniform(rng, 0, 3)));
      return IdealizationElement(r->prime(), make_rational(uniform(rng, -9, 9), b), torsion);
    }
    case Family::TensorLevel: {
      TensorLevelElement out(r->prime(), r->level());
      const int q = static_cast<int>(out.q());
      for (int t = uniform(rng, 0, 3); t > 0; --t) {
        out = out + TensorLevelElement::basis(r->prime(), r->level(), static_cast<std::uint32_t>(uniform(rng, 0, q - 1)),
                                              static_cast<std::uint32_t>(uniform(rng, 0, q - 1)),
                                              random_fp_rational(rng, r->prime()));
      }
      return out;
    }
    case Family::EventualSequence: {
      std::vector<Rational> prefix(static_cast<std::size_t>(uniform(rng, 0, 3))),
          period(static_cast<std::size_t>(uniform(rng, 1, 2)));
      for (auto& x : prefix) x = uniform(rng, -2, 2);
      for (auto& x : period) x = uniform(rng, -2, 2);
      return EventualSequence(prefix, period);
    }
    case Family::FiniteProduct: {
      std::vector<Rational> c(r->arity());
      for (auto& x : c) x = uniform(rng, -3, 3);
      return FiniteProductElement(c);
    }
  }
  return r->zero();
}

void check_ring_laws(const RingPtr& r, std::uint64_t seed, int trials) {
  Rng rng(seed);
  const RingElement zero = r->zero(), one = r->one();
  for (int t = 0; t < trials; ++t) {
    auto a = random_element(r, rng), b = random_element(r, rng), c = random_element(r, rng);
    CHECK(ring_equal(ring_add(a, b), ring_add(b, a)));
    CHECK(ring_equal(ring_mul(a, b), ring_mul(b, a)));
    CHECK(ring_equal(ring_add(ring_add(a, b), c), ring_add(a, ring_add(b, c))));
    CHECK(ring_equal(ring_mul(ring_mul(a, b), c), ring_mul(a, ring_mul(b, c))));
    CHECK(ring_equal(ring_mul(ring_add(a, b), c), ring_add(ring_mul(a, c), ring_mul(b, c))));
    CHECK(ring_equal(ring_add(a, zero), a));
    CHECK(ring_equal(ring_mul(a, one), a));
    CHECK(ring_is_zero(ring_add(a, ring_neg(a))));
    CHECK(ring_equal(ring_normalize(a), a));
    CHECK(ring_equal(r->element(element_to_json(a)), a));
  }
}

}  // namespace

TEST_CASE("ring operation examples") {
  auto k = Ring::monoid();
  CHECK(ring_equal(ring_mul(MonoidElement::basis(Rational(1, 2)), MonoidElement::basis(Rational(1, 3))),
                   MonoidElement::basis(Rational(5, 6))));

  const std::uint32_t p = 5;
  IdealizationElement a(p, 2, Rational(1, 5)), b(p, 3, 0);
  CHECK(a * b == IdealizationElement(p, 6, Rational(3, 5)));

  auto r = ring_2120(12);
  CHECK((y(r, 1) * y(r, 2)).is_zero());

  for (std::uint32_t i = 0; i < 8; ++i) {
    auto yi = STElement::y(p, i);
    CHECK(yi * STElement::constant(p, 1) == yi);
    CHECK(yi == STElement::constant(p, p) * STElement::y(p, i + 1));
  }
}

TEST_CASE("ring laws per family") {
  check_ring_laws(ring_2120(6), 1, 1000);
  MonomialRing plain;
  plain.num_variables = 3;
  check_ring_laws(Ring::monomial(plain), 2, 1000);
  check_ring_laws(Ring::monoid(), 3, 1000);
  check_ring_laws(Ring::monoid(AlphaCut{1, false}), 4, 1000);
  check_ring_laws(Ring::st(3), 5, 1000);
  check_ring_laws(Ring::sn(2), 6, 1000);
  check_ring_laws(Ring::idealization(3), 7, 1000);
  check_ring_laws(Ring::tensor(2, 1), 8, 1000);
  check_ring_laws(Ring::tensor(3, 1), 9, 300);
  check_ring_laws(Ring::sequences(), 10, 1000);
  check_ring_laws(Ring::product(3), 11, 1000);
}

TEST_CASE("ring mismatch") {
  CHECK_THROWS_AS(ring_add(Ring::st(2)->one(), Ring::monoid()->one()), Error);
  CHECK_THROWS_AS(ring_add(Ring::st(2)->one(), Ring::st(3)->one()), Error);
  CHECK_THROWS_AS(Ring::st(2)->require_member(Ring::st(3)->one()), Error);
  CHECK_THROWS_AS(ring_add(Ring::tensor(2, 1)->one(), Ring::tensor(2, 2)->one()), Error);
}

TEST_CASE("descriptor round trip") {
  for (const auto& r : {ring_2120(9), Ring::monoid(AlphaCut{1, false}), Ring::st(3), Ring::sn(5), Ring::idealization(2),
                        Ring::tensor(3, 2), Ring::sequences(), Ring::product(4)}) {
    auto d = r->descriptor();
    auto back = Ring::from_json(d);
    CHECK(back->family() == r->family());
    CHECK(back->descriptor() == d);
  }
  json nonwpr = {{"family", "monomial-quotient"},
                 {"scalar", "QQ"},
                 {"params", {{"names", {"x", "y1"}}, {"relations", {{"monomials", json::array()}}}}}};
  auto r = Ring::from_json(nonwpr);
  CHECK(r->monomial_ring()->num_variables == 2u);
  CHECK(element_to_string(r->element("y1")) == "y1");
  CHECK_THROWS_AS(Ring::from_json(json{{"family", "nope"}}), Error);
  CHECK_THROWS_AS(Ring::from_json(json{{"family", "ST"}, {"params", {{"p", 4}}}}), Error);
}

TEST_CASE("alpha invariant") {
  auto k = Ring::monoid();
  auto c = make_ideal(k, {MonoidElement::basis(Rational(1, 3)), MonoidElement::basis(Rational(1, 2))});
  auto a = alpha_invariant(c);
  CHECK(a.alpha == Rational(1, 3));
  CHECK(a.attained);
  CHECK(c.contains(MonoidElement::basis(Rational(2, 5))));
  CHECK_FALSE(c.contains(MonoidElement::basis(Rational(1, 4))));

  auto n = cut_ideal(k, AlphaCut{0, false});
  CHECK(alpha_invariant(n).alpha == 0);
  CHECK_FALSE(alpha_invariant(n).attained);
  CHECK_FALSE(n.contains(k->one()));
  CHECK(n.contains(MonoidElement::basis(Rational(1, 1000))));

  auto b = cut_ideal(k, AlphaCut{1, false});
  CHECK(alpha_invariant(b).alpha == 1);
  CHECK_FALSE(alpha_invariant(b).attained);

  CHECK_THROWS_AS(make_ideal(k, {k->zero()}), Error);
}

TEST_CASE("alpha of powers scales") {
  Rng rng(2020);
  auto k = Ring::monoid();
  for (int t = 0; t < 50; ++t) {
    std::vector<RingElement> gens;
    for (int g = uniform(rng, 1, 3); g > 0; --g) {
      MonoidElement e = MonoidElement::basis(make_rational(uniform(rng, 1, 12), uniform(rng, 1, 6)));
      if (uniform(rng, 0, 1)) e = e + MonoidElement::basis(make_rational(uniform(rng, 13, 20), 3), 2);
      gens.emplace_back(e);
    }
    auto c = make_ideal(k, gens);
    auto n = static_cast<std::uint32_t>(uniform(rng, 1, 5));
    CHECK(alpha_invariant(ideal_power(c, n)).alpha == alpha_invariant(c).alpha * n);
  }
}

TEST_CASE("ideal powers") {
  auto k = Ring::monoid();
  auto c = make_ideal(k, {MonoidElement::basis(Rational(1, 2))});
  auto c2 = ideal_power(c, 2);
  REQUIRE(c2.generators.size() == 1);
  CHECK(ring_equal(c2.generators[0], MonoidElement::basis(1)));
  auto c1 = ideal_power(c, 1);
  REQUIRE(c1.generators.size() == 1);
  CHECK(ring_equal(c1.generators[0], c.generators[0]));
  CHECK(alpha_invariant(ideal_power(c, 3)).alpha == Rational(3, 2));

  auto m = cut_ideal(k, AlphaCut{0, false});
  CHECK(std::get<AlphaCut>(*ideal_power(m, 2).closure) == AlphaCut{0, false});

  const std::uint32_t bound = 8;
  auto r = ring_2120(bound);
  auto mm = variable_ideal(r);
  CHECK(mm.generators.size() == bound);  // Y_0 = 0 in R
  auto m2 = ideal_power(mm, 2);
  REQUIRE(m2.generators.size() == bound - 1);
  for (std::uint32_t i = 2; i <= bound; ++i) {
    bool found = std::any_of(m2.generators.begin(), m2.generators.end(),
                             [&](const RingElement& g) { return ring_equal(g, RingElement(y(r, i, 2))); });
    CHECK(found);
  }
  CHECK_FALSE(m2.contains(y(r, 1)));
  CHECK(m2.contains(y(r, 5, 3)));
  CHECK(mm.contains(y(r, 1)));
  CHECK_FALSE(mm.contains(r->one()));
}

TEST_CASE("rewrite facts of the separated non-nilpotent ring") {
  auto r = ring_2120(12);
  for (std::uint32_t i = 0; i <= 12; ++i) {
    CHECK(y(r, i).pow(i + 1).is_zero());
    CHECK_FALSE(y(r, i).pow(i).is_zero());
    for (std::uint32_t j = 0; j <= 12; ++j) {
      if (i != j) CHECK((y(r, i) * y(r, j)).is_zero());
    }
  }
}

TEST_CASE("ST relations and valuations") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t j = 1; j <= 10; ++j) {
      for (std::uint32_t i = 0; i < j; ++i) {
        auto rel = STElement::constant(p, pow(Integer(p), j - i)) * STElement::y(p, j) - STElement::y(p, i);
        CHECK(rel.is_zero());
      }
    }
    CHECK_FALSE(STElement::constant(p, 1).is_zero());
    const SnFraction pf(STElement::constant(p, p));
    CHECK(sn_valuation(pf) == LexValue{0, 1});
    for (std::uint32_t i = 0; i < 6; ++i) {
      CHECK(sn_valuation(SnFraction(STElement::y(p, i))) == LexValue{1, -static_cast<std::int64_t>(i)});
    }
    const SnFraction py0(STElement::constant(p, p) * STElement::y(p, 0));
    CHECK(sn_valuation(py0) == LexValue{1, 1});
    CHECK(sn_divides(pf, SnFraction(STElement::y(p, 0))));
    for (std::uint32_t n = 0; n < 12; ++n) {
      CHECK_FALSE(sn_divides(py0, SnFraction(STElement::constant(p, pow(Integer(p), n)))));
    }
    CHECK(sn_divides(py0, py0));
    CHECK_THROWS_AS(sn_valuation(SnFraction(p)), Error);
  }
}

TEST_CASE("divisibility in S_n is total") {
  Rng rng(290);
  auto r = Ring::sn(3);
  int checked = 0;
  while (checked < 200) {
    auto f = std::get<SnFraction>(random_element(r, rng)), g = std::get<SnFraction>(random_element(r, rng));
    if (f.is_zero() || g.is_zero()) continue;
    ++checked;
    bool fg = sn_divides(f, g), gf = sn_divides(g, f);
    CHECK((fg || gf));
    if (fg) CHECK(sn_quotient(g, f) * f == g);
    if (fg && gf) CHECK(sn_valuation(f) == sn_valuation(g));
  }
}

TEST_CASE("idealization essentiality") {
  const std::uint32_t p = 3;
  auto z0 = IdealizationElement::z(p, 0);
  CHECK(z0 == IdealizationElement(p, 0, Rational(1, 3)));
  CHECK(idealization_essential_multiplier(IdealizationElement(p, p, 0)) == IdealizationElement(p, 0, Rational(1, 9)));
  CHECK(idealization_essential_multiplier(z0) == IdealizationElement(p, 1, 0));
  for (std::uint32_t i = 0; i < 5; ++i) {
    CHECK(idealization_essential_multiplier(IdealizationElement::z(p, i)) ==
          IdealizationElement(p, pow(Integer(p), i), 0));
    if (i > 0) CHECK(IdealizationElement::z(p, i - 1) == IdealizationElement(p, p, 0) * IdealizationElement::z(p, i));
  }
  CHECK_THROWS_AS(idealization_essential_multiplier(IdealizationElement(p)), Error);

  Rng rng(2100);
  auto ring = Ring::idealization(p);
  for (int t = 0; t < 100; ++t) {
    auto u = std::get<IdealizationElement>(random_element(ring, rng));
    if (u.is_zero()) continue;
    CHECK(u * idealization_essential_multiplier(u) == z0);
  }

  CHECK(IdealizationElement(p, 27, Rational(1, 9)).in_maximal_power(3));
  CHECK_FALSE(IdealizationElement(p, 9, 0).in_maximal_power(3));
  CHECK(IdealizationElement(p, 0, Rational(2, 81)).in_maximal_power(40));
  auto q = make_ideal(ring, {IdealizationElement(p, p, 0)});
  CHECK(q.contains(IdealizationElement(p, 0, Rational(1, 27))));
  CHECK_FALSE(q.contains(IdealizationElement(p, 1, 0)));
  auto torsion_only = make_ideal(ring, {IdealizationElement::z(p, 1)});
  CHECK(torsion_only.contains(z0));
  CHECK_FALSE(torsion_only.contains(IdealizationElement::z(p, 2)));
}

TEST_CASE("frobenius roots") {
  for (std::uint32_t p : {2u, 3u}) {
    auto f = TensorLevelElement::delta(p, 1);
    CHECK_FALSE(f.is_zero());
    CHECK(tensor_is_nilpotent(f));
    CHECK(tensor_nilpotency_index(f, 10) == p);
    auto g = frobenius_root(f);
    CHECK(g.level() == 2);
    CHECK(g.pow(p) == f.include());
    CHECK(frobenius_root(TensorLevelElement(p, 1)).is_zero());
    CHECK_THROWS_AS(frobenius_root(TensorLevelElement::one(p, 1)), Error);

    Rng rng(250 + p);
    for (std::uint32_t level = 1; level <= 2; ++level) {
      auto ring = Ring::tensor(p, level);
      for (int t = 0; t < 20; ++t) {
        auto x = std::get<TensorLevelElement>(random_element(ring, rng)) * TensorLevelElement::delta(p, level);
        auto root = frobenius_root(x);
        CHECK(root.pow(p) == x.include());
      }
    }
  }
}

TEST_CASE("eventually periodic sequences") {
  auto f = EventualSequence::shifted_unit();
  CHECK_FALSE(f.in_finite_support_ideal());
  CHECK(f * f == f);
  EventualSequence five({5}, {0});
  CHECK((EventualSequence::constant(1) * five).in_finite_support_ideal());
  CHECK(EventualSequence({1, 1, 1}, {1}) == EventualSequence::constant(1));
  CHECK(EventualSequence({}, {1, 0, 1, 0}).period().size() == 2);
  EventualSequence g({}, {1, 0}), h({}, {0, 1});
  CHECK((g * h).is_zero());
  CHECK(g + h == EventualSequence::constant(1));
  CHECK(f.with_entry(0, 7).at(0) == 7);
  CHECK(f.with_entry(4, 0).at(4) == 0);
  CHECK(f.with_entry(4, 0).at(5) == 1);

  auto seqs = Ring::sequences();
  auto b = IdealHandle{seqs, {}, TailZero{}};
  CHECK(b.contains(five));
  CHECK_FALSE(b.contains(f));
  auto a = make_ideal(seqs, {f});
  CHECK(a.contains(EventualSequence({0, 3}, {2})));
  CHECK_FALSE(a.contains(EventualSequence::constant(1)));

  auto prod = Ring::product(2);
  FiniteProductElement e({1, 0});
  CHECK(e * e == e);
  auto ideal = make_ideal(prod, {e});
  CHECK(ideal.contains(FiniteProductElement({5, 0})));
  CHECK_FALSE(ideal.contains(FiniteProductElement({0, 1})));
}

TEST_CASE("membership not decidable in tensor levels") {
  auto r = Ring::tensor(2, 1);
  auto i = make_ideal(r, {TensorLevelElement::delta(2, 1)});
  CHECK_THROWS_AS(i.contains(r->one()), Error);
}
