#include <functional>
#include <random>

#include "doctest.h"
#include "torlab/linalg.hpp"

using namespace torlab;
using namespace torlab::linalg;

namespace {

Matrix<Rational> qmat(std::size_t r, std::size_t c, std::vector<int> xs) {
  std::vector<Rational> e(xs.begin(), xs.end());
  return {r, c, std::move(e)};
}

Matrix<Integer> zmat(std::size_t r, std::size_t c, std::vector<int> xs) {
  std::vector<Integer> e(xs.begin(), xs.end());
  return {r, c, std::move(e)};
}

// Cofactor expansion; only for tiny matrices.
Integer cofactor_det(const Matrix<Integer>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<Integer> minor(n - 1, n - 1, 0);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// gcd of all k x k minors.
Integer determinantal_divisor(const Matrix<Integer>& m, std::size_t k) {
  Integer g = 0;
  std::vector<std::size_t> rows(k), cols(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = from; r < m.rows(); ++r) rows[at] = r, pick_rows(at + 1, r + 1);
  };
  pick_cols = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      Matrix<Integer> sub(k, k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      Integer d = cofactor_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t c = from; c < m.cols(); ++c) cols[at] = c, pick_cols(at + 1, c + 1);
  };
  pick_rows(0, 0);
  return g;
}

void check_smith(const Matrix<Integer>& m) {
  auto s = smith_normal_form(m);
  CHECK(multiply(multiply(s.u, m), s.v) == s.d);
  CHECK(abs(determinant(s.u)) == 1);
  CHECK(abs(determinant(s.v)) == 1);
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(sgn(s.d(i, j)) == 0);
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(sgn(diag[i]) >= 0);
    if (i + 1 < diag.size()) {
      if (sgn(diag[i]) == 0) {
        CHECK(sgn(diag[i + 1]) == 0);
      } else {
        CHECK(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()) != 0);
      }
    }
  }
}

using Bits = std::uint32_t;

Bits apply_f2(const Matrix<std::uint32_t>& m, Bits v) {
  Bits out = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc ^= m(i, j) & ((v >> j) & 1U);
    out |= Bits(acc) << i;
  }
  return out;
}

}  // namespace

TEST_CASE("kernel_basis examples") {
  RationalField q;
  auto k = kernel_basis(q, qmat(2, 2, {1, 2, 2, 4}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector<Rational>{-2, 1});
  CHECK(kernel_basis(q, Matrix<Rational>::identity(3, 0, 1)).empty());

  PrimeField f2(2);
  Matrix<std::uint32_t> m(2, 3, std::vector<std::uint32_t>{1, 1, 0, 0, 1, 1});
  auto k2 = kernel_basis(f2, m);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == Vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("runtime kernel rejects non-fields") {
  ExactMatrix m(ScalarDomain::Integers, 1, 2, {1, 2});
  CHECK_THROWS_AS(kernel_basis(m), Error);
  try {
    kernel_basis(m);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainNotAField);
  }
  ExactMatrix g(ScalarDomain::PrimeField, 2, 3, {1, 1, 0, 0, 1, 1}, 2);
  auto k = kernel_basis(g);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<Rational>{1, 1, 1});
  CHECK_THROWS_AS(ExactMatrix(ScalarDomain::PrimeField, 1, 1, {2}, 2), Error);
  CHECK_THROWS_AS(ExactMatrix(ScalarDomain::Integers, 1, 1, {Rational(1, 2)}), Error);
}

TEST_CASE("smith normal form examples") {
  auto s = smith_normal_form(zmat(2, 2, {2, 4, 6, 8}));
  CHECK(s.diagonal() == std::vector<Integer>{2, 4});
  auto z = smith_normal_form(zmat(2, 3, {0, 0, 0, 0, 0, 0}));
  CHECK(z.u == Matrix<Integer>::identity(2, 0, 1));
  CHECK(z.v == Matrix<Integer>::identity(3, 0, 1));
  CHECK(smith_normal_form(Matrix<Integer>::identity(2, 0, 1)).d == Matrix<Integer>::identity(2, 0, 1));
}

TEST_CASE("smith normal form on random matrices matches determinantal divisors") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> entry(-9, 9), size(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = size(rng), c = size(rng);
    Matrix<Integer> m(r, c, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    check_smith(m);
    auto diag = smith_normal_form(m).diagonal();
    Integer running = 1;
    for (std::size_t k = 1; k <= diag.size(); ++k) {
      running *= diag[k - 1];
      CHECK(abs(running) == determinantal_divisor(m, k));
    }
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      Matrix<Integer> m(n, n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
      if (trial == 0 && n > 1) m(0, 0) = 0;
      CHECK(determinant(m) == cofactor_det(m));
    }
  }
}

TEST_CASE("field homology examples") {
  RationalField q;
  auto h = homology_over_field(q, Matrix<Rational>(3, 0), Matrix<Rational>(0, 3));
  CHECK(h.dimension == 3);
  auto one = qmat(1, 1, {1});
  CHECK(homology_over_field(q, Matrix<Rational>(1, 0), one).dimension == 0);
  CHECK(homology_over_field(q, one, Matrix<Rational>(0, 1)).dimension == 0);
  CHECK_THROWS_AS(homology_over_field(q, one, one), Error);
}

TEST_CASE("integer homology examples") {
  auto h = homology_over_integers(zmat(1, 1, {2}), Matrix<Integer>(0, 1));
  CHECK(h.rank == 0);
  CHECK(h.invariant_factors == std::vector<Integer>{2});
  auto z = homology_over_integers(zmat(1, 1, {0}), Matrix<Integer>(0, 1));
  CHECK(z.rank == 1);
  CHECK(z.invariant_factors.empty());
  auto src = homology_over_integers(Matrix<Integer>(1, 0), zmat(1, 1, {0}));
  CHECK(src.rank == 1);
  auto t = homology_over_integers(zmat(2, 2, {2, 0, 0, 3}), Matrix<Integer>(0, 2));
  CHECK(t.rank == 0);
  CHECK(t.invariant_factors == std::vector<Integer>{6});  // Z/2 + Z/3 = Z/6
}

TEST_CASE("field homology over F2 matches exhaustive enumeration") {
  std::mt19937 rng(7);
  PrimeField f2(2);
  std::uniform_int_distribution<int> dim(0, 6), bit(0, 1);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = dim(rng), out = dim(rng), in = dim(rng);
    Matrix<std::uint32_t> d_out(out, n, 0u);
    for (std::size_t i = 0; i < out; ++i)
      for (std::size_t j = 0; j < n; ++j) d_out(i, j) = bit(rng);
    std::vector<Bits> cycles;
    for (Bits v = 0; v < (Bits{1} << n); ++v)
      if (apply_f2(d_out, v) == 0) cycles.push_back(v);
    std::uniform_int_distribution<std::size_t> pick(0, cycles.size() - 1);
    Matrix<std::uint32_t> d_in(n, in, 0u);
    for (std::size_t j = 0; j < in; ++j) {
      Bits c = cycles[pick(rng)];
      for (std::size_t i = 0; i < n; ++i) d_in(i, j) = (c >> i) & 1U;
    }
    std::vector<bool> is_boundary(std::size_t{1} << n, false);
    std::size_t boundaries = 0;
    for (Bits w = 0; w < (Bits{1} << in); ++w) {
      Bits b = apply_f2(d_in, w);
      if (!is_boundary[b]) is_boundary[b] = true, ++boundaries;
    }
    std::size_t quotient = cycles.size() / boundaries, expected = 0;
    while ((std::size_t{1} << expected) < quotient) ++expected;
    auto h = homology_over_field(f2, d_in, d_out);
    CHECK(h.dimension == expected);
    CHECK(h.dimension + rank(f2, d_in) + rank(f2, d_out) == n);
    for (const auto& r : h.representatives) CHECK(is_zero_vector(f2, apply(f2, d_out, std::span<const std::uint32_t>(r))));
  }
}

TEST_CASE("rank nullity on random rational matrices") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-3, 3), size(1, 8);
  RationalField q;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = size(rng), c = size(rng);
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng) * (trial % 3 == 0 ? 0 : 1) + (j == 0 ? 0 : entry(rng));
    auto k = kernel_basis(q, m);
    CHECK(k.size() + rank(q, m) == c);
    for (const auto& v : k) CHECK(is_zero_vector(q, apply(q, m, std::span<const Rational>(v))));
    if (!k.empty()) CHECK(rank(q, from_columns(c, k, Rational(0))) == k.size());
  }
}

TEST_CASE("induced map and coordinates") {
  RationalField q;
  // C: Q^2 with zero differentials, phi swaps the two coordinates.
  auto h = homology_over_field(q, Matrix<Rational>(2, 0), Matrix<Rational>(0, 2));
  auto phi = qmat(2, 2, {0, 1, 1, 0});
  auto ind = induced_map(q, h, h, phi);
  CHECK(ind == phi);
  // Boundaries are discarded by coordinates.
  auto b = homology_over_field(q, qmat(2, 1, {1, 1}), Matrix<Rational>(0, 2));
  CHECK(b.dimension == 1);
  auto c = homology_coordinates(q, b, std::span<const Rational>(std::vector<Rational>{1, 1}));
  REQUIRE(c);
  CHECK(sgn((*c)[0]) == 0);
}

TEST_CASE("runtime homology dispatch") {
  ExactMatrix d_in(ScalarDomain::Integers, 2, 2, {2, 0, 0, 3});
  ExactMatrix d_out(ScalarDomain::Integers, 0, 2, {});
  auto h = homology(d_in, d_out);
  CHECK(h.dimension == 0);
  CHECK(h.invariant_factors == std::vector<Integer>{6});
  ExactMatrix l(ScalarDomain::LocalizedIntegers, 1, 1, {Rational(1, 4)}, 2);
  CHECK_THROWS_AS(homology(l, ExactMatrix(ScalarDomain::LocalizedIntegers, 0, 1, {}, 2)), Error);
  CHECK_THROWS_AS(ExactMatrix(ScalarDomain::LocalizedIntegers, 1, 1, {Rational(1, 3)}, 2), Error);
}
