#include <doctest.h>

#include <memory>

#include "torlab/homology.hpp"
#include "torlab/torsion.hpp"

using namespace torlab;
using namespace torlab::homology;
using graded::MonomialModule;
using graded::operator-;
using graded::operator+;

namespace {

const RationalField kQ;

Term var_term(std::size_t n, std::size_t j, std::int64_t e = 1) {
  Degree d(n, 0);
  d[j] = e;
  return {d, 1};
}

ModulePtr share(MonomialModule m) { return std::make_shared<MonomialModule>(std::move(m)); }

/// Cech cohomology of a monomial module for a sequence of distinct variables,
/// computed from the localizations directly: C^k = sum over |S| = k of M_{x_S}.
std::size_t cech_oracle(const MonomialModule& m, const std::vector<std::size_t>& vars, std::size_t i,
                        const Degree& d) {
  const std::size_t n = vars.size();
  auto localized = [&](std::uint32_t subset) {
    MonomialModule out = m;
    for (std::size_t j = 0; j < n; ++j) {
      if (subset >> j & 1U) out = out.localize(vars[j]);
    }
    return out.supports(d);
  };
  auto cochain = [&](std::size_t k) {
    std::vector<std::uint32_t> live;
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) == k && localized(s)) live.push_back(s);
    }
    return live;
  };
  // delta: C^k -> C^{k+1}, x^d -> sum of signed images (identity on supported pieces).
  auto delta = [&](std::size_t k) {
    auto src = cochain(k), dst = cochain(k + 1);
    Matrix<Rational> out(dst.size(), src.size(), Rational(0));
    for (std::size_t c = 0; c < src.size(); ++c)
      for (std::size_t r = 0; r < dst.size(); ++r) {
        const std::uint32_t diff = dst[r] & ~src[c];
        if ((dst[r] & src[c]) != src[c] || std::popcount(diff) != 1) continue;
        const int j = std::countr_zero(diff);
        out(r, c) = std::popcount(src[c] & ((1U << j) - 1U)) % 2 == 0 ? 1 : -1;
      }
    return out;
  };
  const std::size_t here = cochain(i).size();
  const std::size_t out_rank = i < n ? linalg::rank(kQ, delta(i)) : 0;
  const std::size_t in_rank = i > 0 ? linalg::rank(kQ, delta(i - 1)) : 0;
  return here - out_rank - in_rank;
}

std::vector<MonomialModule> sample_modules() {
  return {MonomialModule::quotient(2, {}), MonomialModule::quotient(2, {{2, 1}, {1, 2}}),
          MonomialModule::quotient(2, {{1, 1}}), MonomialModule::quotient(2, {{3, 0}}),
          MonomialModule::quotient(2, {{2, 0}, {0, 2}})};
}

}  // namespace

TEST_CASE("Koszul homology of the polynomial ring") {
  MonomialModule s = MonomialModule::quotient(2, {});
  Sequence a = {var_term(2, 0), var_term(2, 1)};
  auto w = Window::box(2, -3, 3);
  auto h0 = koszul_homology(s, a, 1, 0, w);
  for (const auto& p : h0) CHECK(p.dim == (p.degree == Degree{0, 0} ? 1U : 0U));
  for (std::size_t i = 1; i <= 2; ++i)
    for (const auto& p : koszul_homology(s, a, 2, i, w)) CHECK(p.dim == 0);
  CHECK(koszul_homology(s, a, 1, 3, w).front().dim == 0);

  auto z = koszul_homology_integers(s, a, 1, 0, {0, 0});
  CHECK(z.rank == 1);
  CHECK(z.invariant_factors.empty());

  CechModule top(share(s), a, 2);
  CHECK(top.dim({-1, -1}) == 1);
  CHECK(top.dim({-3, -2}) == 1);
  CHECK(top.dim({0, -1}) == 0);
  CHECK(top.dim({-1, 0}) == 0);
}

TEST_CASE("d squared vanishes and transitions are chain maps") {
  auto m = MonomialModule::quotient(2, {{2, 1}, {1, 2}});
  Sequence a = {var_term(2, 0), {{1, 1}, Rational(3)}};
  for (const auto& d : Window::box(2, -2, 4).degrees()) {
    auto lo = koszul_slice(m, a, 1, d), hi = koszul_slice(m, a, 3, d);
    for (std::size_t k = 1; k <= 2; ++k) {
      auto lhs = linalg::multiply(kQ, lo.out[k], chain_transition(m, a, 1, 3, d, k));
      auto rhs = linalg::multiply(kQ, chain_transition(m, a, 1, 3, d, k - 1), hi.out[k]);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("self-duality of the Koszul complex") {
  for (const auto& m : sample_modules()) {
    Sequence a = {var_term(2, 0), var_term(2, 1, 2)};
    for (std::uint32_t u = 1; u <= 2; ++u) {
      const Degree shift = subset_power(a, 3, u).exponent;
      for (const auto& d : Window::box(2, -2, 5).degrees()) {
        for (std::size_t i = 0; i <= 2; ++i) {
          CHECK(koszul_slice(m, a, u, d).homology(i).dimension ==
                koszul_coslice(m, a, u, d - shift).homology(i).dimension);
        }
      }
    }
  }
}

TEST_CASE("H_0 is M/aM and H_n is (0 : a)") {
  for (const auto& m : sample_modules()) {
    Sequence a = {var_term(2, 0), var_term(2, 1)};
    auto w = Window::nonnegative(2, 6);
    auto ann = torsion::colon_submodule(m, a, 1, w);
    std::map<Degree, std::size_t> ann_dims;
    for (const auto& [d, b] : ann.pieces) ann_dims[d] = b.cols();
    for (const auto& d : w.degrees()) {
      const bool below_x = d[0] >= 1 && m.supports({d[0] - 1, d[1]});
      const bool below_y = d[1] >= 1 && m.supports({d[0], d[1] - 1});
      const std::size_t quotient = m.supports(d) && !below_x && !below_y ? 1 : 0;
      CHECK(koszul_slice(m, a, 1, d).homology(0).dimension == quotient);
      CHECK(koszul_slice(m, a, 1, d + Degree{1, 1}).homology(2).dimension == ann_dims[d]);
    }
  }
}

TEST_CASE("inverse system is functorial") {
  auto m = MonomialModule::quotient(2, {{2, 1}, {1, 2}});
  Sequence a = {var_term(2, 0), var_term(2, 1)};
  for (const auto& d : Window::box(2, 0, 6).degrees()) {
    for (std::size_t i = 1; i <= 2; ++i) {
      auto wv = koszul_inverse_system(m, a, i, 2, 4, d);
      auto vu = koszul_inverse_system(m, a, i, 1, 2, d);
      auto wu = koszul_inverse_system(m, a, i, 1, 4, d);
      CHECK(linalg::multiply(kQ, vu.matrix, wv.matrix) == wu.matrix);
      auto same = koszul_inverse_system(m, a, i, 3, 3, d);
      CHECK(same.matrix == Matrix<Rational>::identity(same.source.dimension, Rational(0), Rational(1)));
    }
  }
}

TEST_CASE("Cech cohomology agrees with the localization oracle") {
  const std::vector<std::vector<std::size_t>> sequences = {{0}, {1}, {0, 1}};
  for (const auto& m : sample_modules()) {
    for (const auto& vars : sequences) {
      Sequence a;
      for (auto v : vars) a.push_back(var_term(2, v));
      for (std::size_t i = 0; i <= vars.size(); ++i) {
        auto pieces = cech_cohomology(share(m), a, i, Window::box(2, -3, 4));
        for (const auto& p : pieces) {
          CHECK(p.stabilized_at);
          CHECK(p.dim == cech_oracle(m, vars, i, p.degree));
        }
      }
    }
  }
}

TEST_CASE("settled Cech pieces stay settled for ten more powers") {
  auto m = MonomialModule::quotient(2, {{2, 1}, {1, 2}});
  Sequence a = {var_term(2, 0), var_term(2, 1)};
  for (std::size_t i = 0; i <= 2; ++i) {
    CechModule c(share(m), a, i, 40);
    for (const auto& d : Window::box(2, -3, 3).degrees()) {
      auto info = c.piece_info(d);
      REQUIRE(info.stabilized_at);
      for (std::uint32_t u = *info.stabilized_at; u <= *info.stabilized_at + 10; ++u) {
        auto lo = koszul_coslice(m, a, u, d), hi = koszul_coslice(m, a, u + 1, d);
        auto h_lo = lo.homology(2 - i), h_hi = hi.homology(2 - i);
        CHECK(h_lo.dimension == info.dim);
        auto t = linalg::induced_map(kQ, h_lo, h_hi, cochain_transition(m, a, u, u + 1, d, i));
        CHECK(graded::is_isomorphism(t));
      }
    }
  }
}

TEST_CASE("Cech module structure") {
  auto s = share(MonomialModule::quotient(2, {}));
  Sequence a = {var_term(2, 0), var_term(2, 1)};
  CechModule top(s, a, 2);
  // x : H^2 at (-2,-1) -> (-1,-1) is an isomorphism; x at (-1,-1) lands in 0.
  auto x = top.multiply({1, 0}, {-2, -1});
  CHECK(x.rows() == 1);
  CHECK(x.cols() == 1);
  CHECK(x(0, 0) != 0);
  CHECK(top.multiply({1, 0}, {-1, -1}).rows() == 0);
  auto xy = top.multiply({1, 1}, {-3, -3});
  auto composite = linalg::multiply(kQ, top.multiply({0, 1}, {-2, -3}), top.multiply({1, 0}, {-3, -3}));
  CHECK(xy == composite);
}

TEST_CASE("weak proregularity verdicts") {
  auto s = MonomialModule::quotient(2, {});
  Sequence a = {var_term(2, 0), var_term(2, 1)};
  auto poly = wpr_test(s, a, 3, 6, Window::box(2, -2, 4));
  CHECK(poly.kind == WprKind::ProZeroCertified);

  auto nilp = MonomialModule::quotient(2, {{2, 1}, {1, 2}});
  auto v = wpr_test(nilp, a, 3, 8, Window::nonnegative(2, 8));
  CHECK(v.kind == WprKind::ProZeroCertified);
  for (const auto& c : v.certificates) CHECK(c["v"].get<std::uint32_t>() >= c["u"].get<std::uint32_t>());

  auto prod = rings::Ring::product(2);
  auto e = rings::FiniteProductElement({1, 0});
  auto pe = wpr_test_principal(e, 4, 8);
  CHECK(pe.kind == WprKind::ProZeroCertified);
  for (const auto& c : pe.certificates) CHECK(c["v"] == c["u"].get<std::uint32_t>() + 1);

  auto seq = wpr_test_principal(rings::EventualSequence({0, 2}, {1, 0}), 3, 6);
  CHECK(seq.kind == WprKind::ProZeroCertified);
  CHECK(seq.certificates[0]["v"] == 2);

  auto sn = wpr_test_principal(rings::SnFraction(rings::STElement::constant(2, 2)), 4, 4);
  CHECK(sn.kind == WprKind::ProZeroCertified);
  for (const auto& c : sn.certificates) CHECK(c["v"] == c["u"]);

  rings::MonomialRing mr;
  mr.num_variables = 9;
  mr.names = {"x", "y_1", "y_2", "y_3", "y_4", "y_5", "y_6", "y_7", "y_8"};
  std::vector<rings::Monomial> rel;
  for (std::uint32_t i = 1; i <= 8; ++i) {
    rel.push_back(rings::Monomial::variable(0, i) * rings::Monomial::variable(i));
    for (std::uint32_t j = i + 1; j <= 8; ++j) rel.push_back(rings::Monomial::variable(i) * rings::Monomial::variable(j));
  }
  mr.relations = rings::RewriteSystem(rel, {});
  auto r = rings::Ring::monomial(mr);
  auto bad = wpr_test_principal(rings::Poly::variable(r->monomial_ring(), 0), 1, 8);
  CHECK(bad.kind == WprKind::NotProZeroUpTo);
  CHECK(bad.witness["cycle"] == "y_8");
  CHECK(bad.to_json()["verdict"] == "NotProZeroUpTo(8)");
  auto good = wpr_test_principal(rings::Poly::variable(r->monomial_ring(), 0), 1, 9);
  CHECK(good.kind == WprKind::ProZeroCertified);
  CHECK(good.certificates[0]["v"] == 9);
}

TEST_CASE("instance checks") {
  auto nilp = share(MonomialModule::quotient(2, {{2, 1}, {1, 2}}));
  Sequence a = {var_term(2, 0), var_term(2, 1)};
  CHECK(gamma0_isomorphism_check(nilp, a, Window::nonnegative(2, 6)).status == Status::Pass);

  auto artinian = share(MonomialModule::quotient(2, {{2, 0}, {0, 2}}));
  CHECK(torsion_acyclicity_check(artinian, a, Window::nonnegative(2, 4)).status == Status::Pass);

  auto s = share(MonomialModule::quotient(2, {}));
  auto cmp = comparison_sequence_check(s, {var_term(2, 0)}, var_term(2, 1), 2, Window::box(2, -3, 2));
  CHECK(cmp.status == Status::Pass);
  auto cmp1 = comparison_sequence_check(nilp, {var_term(2, 0)}, var_term(2, 1), 1, Window::box(2, -3, 3));
  CHECK(cmp1.status == Status::Pass);

  CHECK(base_independence_check(2, {{1, 1}}, {{3, 0}}, a, 1, Window::box(2, -2, 3)).status == Status::Pass);
  CHECK(flat_base_change_check(MonomialModule::quotient(2, {{1, 1}}), {var_term(2, 0)}, 1, 1,
                               Window::box(2, -3, 2))
            .status == Status::Pass);

  std::vector<rings::RingElement> samples = {rings::FiniteProductElement({1, 2, 3}),
                                             rings::FiniteProductElement({0, 5, 0})};
  auto idem = idempotent_vanishing_check(rings::FiniteProductElement({1, 0, 1}), samples);
  CHECK(idem.status == Status::Pass);
  auto unit = idempotent_vanishing_check(rings::FiniteProductElement({1, 1, 1}), samples);
  CHECK(unit.status == Status::Pass);

  CHECK(functional_witness_check(8).status == Status::Pass);
}
