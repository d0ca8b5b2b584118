#include <doctest.h>

#include <random>

#include "torlab/torsion.hpp"

using namespace torlab;
using namespace torlab::rings;
using namespace torlab::torsion;

namespace {

RingPtr ring_2120(std::uint32_t bound) {
  MonomialRing mr;
  mr.variable_bound = bound;
  mr.prefix = "Y";
  mr.relations = RewriteSystem({}, {SchemaRule{Schema::DistinctPairs, {0, std::nullopt}, 1},
                                    SchemaRule{Schema::IndexedPower, {0, std::nullopt}, 1}});
  return Ring::monomial(std::move(mr));
}

RingPtr finite_ring(std::uint32_t n, std::vector<Monomial> relations) {
  MonomialRing mr;
  mr.num_variables = n;
  mr.relations = RewriteSystem(std::move(relations), {});
  return Ring::monomial(std::move(mr));
}

Poly var(const RingPtr& r, std::uint32_t i, std::uint32_t e = 1) { return Poly::variable(r->monomial_ring(), i, e); }

Monomial mono(std::vector<std::int64_t> exps) { return Monomial::from_exponents(exps); }

graded::Sequence xy_terms() { return {{{1, 0}, 1}, {{0, 1}, 1}}; }

}  // namespace

TEST_CASE("generator torsion exponents in the countable-variable ring") {
  auto r = ring_2120(12);
  auto m = variable_ideal(r);
  for (std::uint32_t i = 1; i <= 12; ++i) {
    // m^n Y_i is spanned by Y_i^{n+1}: the least n with Y_i^{n+1} = 0.
    std::uint32_t oracle = 0;
    while (!r->monomial_ring()->relations.kills(Monomial::variable(i, oracle + 1))) ++oracle;
    auto cert = is_torsion_element(var(r, i), m, 14);
    REQUIRE(cert.certified());
    CHECK(*cert.exponent == oracle);
    CHECK(*cert.exponent == i);
    CHECK(cert.witness);
    // a * x has a strictly smaller exponent.
    auto smaller = is_torsion_element(var(r, i, 2), m, 14);
    if (i >= 2) CHECK(*smaller.exponent < *cert.exponent);
  }
  auto unit = is_torsion_element(r->one(), m, 14);
  CHECK_FALSE(unit.certified());
  CHECK(std::get<Poly>(*unit.witness) == var(r, 14, 14));
}

TEST_CASE("nilpotency and idempotency") {
  auto r = ring_2120(12);
  auto m = variable_ideal(r);
  CHECK_FALSE(is_nilpotent(m, 10).index);
  auto id = is_idempotent(m);
  CHECK_FALSE(id.idempotent);
  CHECK(std::get<Poly>(*id.witness) == var(r, 1));

  auto kq = Ring::monoid();
  CHECK(is_idempotent(cut_ideal(kq, {0, false})).idempotent);
  CHECK_FALSE(is_idempotent(cut_ideal(kq, {Rational(1, 3), true})).idempotent);

  auto t = Ring::monoid(AlphaCut{1, false});
  for (int den = 1; den <= 6; ++den) {
    Rational alpha(1, den);
    auto c = cut_ideal(t, {alpha, true});
    auto nil = is_nilpotent(c, 20);
    REQUIRE(nil.index);
    CHECK(*nil.index == static_cast<std::uint32_t>(den + 1));  // n * alpha > 1
    auto open = is_nilpotent(cut_ideal(t, {alpha, false}), 20);
    CHECK(*open.index == static_cast<std::uint32_t>(den));
  }
  auto e1 = MonoidElement::basis(1, 1, t->quotient());
  CHECK(*is_torsion_element(e1, cut_ideal(t, {Rational(1, 4), true}), 10).exponent == 1);
  auto half = MonoidElement::basis(Rational(1, 2), 1, t->quotient());
  auto cert = is_torsion_element(half, cut_ideal(t, {Rational(1, 4), true}), 10);
  CHECK(*cert.exponent == 3);
}

TEST_CASE("T-nilpotency of monomial families") {
  auto r = ring_2120(12);
  CHECK(*t_nilpotency_check({var(r, 1), var(r, 2)}) == 1);
  CHECK(*t_nilpotency_check({var(r, 3), var(r, 3), var(r, 3), var(r, 3), var(r, 3)}) == 3);
  CHECK(*t_nilpotency_check({var(r, 0)}) == 0);
  CHECK_FALSE(t_nilpotency_check({var(r, 5), var(r, 5)}));
  CHECK_THROWS_AS(t_nilpotency_check({var(r, 1) + var(r, 2)}), Error);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(1, 12)(rng);
    std::vector<RingElement> fam;
    for (int j = 0; j < 30; ++j) {
      fam.emplace_back(var(r, k, std::uniform_int_distribution<std::uint32_t>(1, 2)(rng)));
    }
    auto n = t_nilpotency_check(fam);
    REQUIRE(n);
    CHECK(*n <= k + 2);
  }
}

TEST_CASE("adic separatedness") {
  auto r = ring_2120(12);
  std::vector<RingElement> samples;
  for (std::uint32_t i = 1; i <= 12; ++i)
    for (std::uint32_t k = 1; k <= i; ++k) samples.emplace_back(var(r, i, k));
  auto res = adic_separated_up_to(variable_ideal(r), 13, samples);
  CHECK(res.empty);
  CHECK(res.exit_level[0] == 2);

  auto sn = Ring::sn(2);
  auto p = SnFraction(STElement::constant(2, 2));
  auto py0 = SnFraction(STElement::constant(2, 2) * STElement::y(2, 0));
  auto sep = adic_separated_up_to(make_ideal(sn, {p}), 12, {p, py0});
  CHECK_FALSE(sep.empty);
  CHECK(ring_equal(*sep.witness, py0));
  CHECK(sep.exit_level[0] == 2);
}

TEST_CASE("radical defect") {
  auto r = ring_2120(12);
  auto m = variable_ideal(r);
  auto d = radical_defect(m, 14, m);
  CHECK(d.found);
  CHECK_THROWS_AS(radical_defect(m, 14), Error);

  auto qx = finite_ring(1, {});
  CHECK_FALSE(radical_defect(make_ideal(qx, {var(qx, 0)}), 10).found);
  auto qx2 = finite_ring(1, {mono({2})});
  auto d2 = radical_defect(make_ideal(qx2, {var(qx2, 0)}), 10);
  CHECK_FALSE(d2.found);
  CHECK(d2.certificate["gamma_preimage"] == json::array({"1"}));
}

TEST_CASE("monomial ideal operations") {
  MonomialIdeal j = {mono({2, 1}), mono({1, 2})};
  CHECK(colon(j, mono({1, 0})) == MonomialIdeal{mono({1, 1}), mono({0, 2})});
  auto sat = saturate(j, {mono({1, 0}), mono({0, 1})}, 10);
  REQUIRE(sat.stabilized_at);
  CHECK(sat.ideal == MonomialIdeal{mono({1, 1})});
  CHECK(monomial_power({mono({1, 0}), mono({0, 1})}, 2).size() == 3);
}

TEST_CASE("weak assassin") {
  auto r = finite_ring(2, {mono({1, 1})});
  auto y = var(r, 1);
  auto yes = weak_assassin_membership(y, {0});
  CHECK(yes.member);
  auto no = weak_assassin_membership(y, {0, 1});
  CHECK(no.contains_annihilator);
  CHECK_FALSE(no.member);
  CHECK(weak_assassin(y) == std::vector<std::vector<std::uint32_t>>{{0}});

  auto r4 = ring_2120(4);
  auto all = weak_assassin_membership(var(r4, 2), {0, 1, 2, 3, 4});
  CHECK(all.member);
  CHECK(all.witness.evidence.size() == 5);
}

TEST_CASE("torsion versus weak assassin instances") {
  auto r = finite_ring(2, {mono({2, 0})});
  auto rep = torsion_chain_instance_check(make_ideal(r, {var(r, 0)}), 6, 10);
  CHECK(rep.status == Status::Pass);
  auto qx = finite_ring(1, {});
  CHECK(torsion_chain_instance_check(make_ideal(qx, {var(qx, 0)}), 6, 10).status == Status::Pass);
}

TEST_CASE("colon submodules and truncated torsion") {
  auto cubic = graded::MonomialModule::quotient(1, {{3}});
  graded::Sequence x = {{{1}, 1}};
  auto w = graded::Window::nonnegative(1, 6);
  auto c2 = colon_submodule(cubic, x, 2, w);
  CHECK(c2.total_dim() == 2);
  CHECK(c2.pieces[0].second.cols() == 0);
  CHECK(c2.pieces[1].second.cols() == 1);
  CHECK(colon_submodule(cubic, x, 0, w).total_dim() == 0);

  auto g = gamma_truncated(cubic, x, 6, w);
  CHECK(*g.stabilized_at == 3);
  CHECK(g.submodule.total_dim() == 3);
  for (std::size_t n = 0; n + 1 < g.dims_by_n.size(); ++n) CHECK(g.dims_by_n[n] <= g.dims_by_n[n + 1]);

  auto line = graded::MonomialModule::quotient(1, {});
  auto g0 = gamma_truncated(line, x, 6, w);
  CHECK(*g0.stabilized_at == 1);
  CHECK(g0.submodule.total_dim() == 0);
}

TEST_CASE("truncated torsion agrees with exhaustive annihilator search") {
  const std::vector<graded::Degree> rel = {{2, 1}, {1, 2}};
  auto mod = graded::MonomialModule::quotient(2, rel);
  auto killed = [&](std::int64_t a, std::int64_t b) {
    return std::any_of(rel.begin(), rel.end(), [&](const auto& g) { return a >= g[0] && b >= g[1]; });
  };
  auto w = graded::Window::nonnegative(2, 8);
  auto g = gamma_truncated(mod, xy_terms(), 10, w);
  REQUIRE(g.stabilized_at);
  std::map<graded::Degree, std::size_t> dims;
  for (const auto& [d, basis] : g.submodule.pieces) dims[d] = basis.cols();
  for (const auto& d : w.degrees()) {
    std::size_t expect = 0;
    if (!killed(d[0], d[1])) {
      // Every monomial of degree 10 kills x^d.
      bool all = true;
      for (std::int64_t i = 0; i <= 10; ++i) all = all && killed(d[0] + i, d[1] + 10 - i);
      expect = all ? 1 : 0;
    }
    CHECK(dims[d] == expect);
  }
  CHECK(g.submodule.total_dim() == 1);
}

TEST_CASE("colon submodule in the countable-variable ring") {
  auto r = ring_2120(4);
  auto mod = graded::MonomialModule::from_ring(*r->monomial_ring());
  graded::Sequence m;
  for (std::size_t i = 0; i < 5; ++i) {
    graded::Degree e(5, 0);
    e[i] = 1;
    m.push_back({e, 1});
  }
  auto c = colon_submodule(mod, m, 2, graded::Window::nonnegative(5, 3));
  bool has_y1 = false;
  for (const auto& [d, basis] : c.pieces) {
    if (d == graded::Degree{0, 1, 0, 0, 0}) has_y1 = basis.cols() == 1;
  }
  CHECK(has_y1);
}
