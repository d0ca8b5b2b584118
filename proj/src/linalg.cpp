#include "torlab/linalg.hpp"

#include <cstdlib>

namespace torlab::linalg {

namespace {

void add_row_multiple(Matrix<Integer>& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (sgn(m(source, c)) != 0) m(target, c) += q * m(source, c);
  }
}

void add_col_multiple(Matrix<Integer>& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (sgn(m(r, source)) != 0) m(r, target) += q * m(r, source);
  }
}

struct SmithState {
  Matrix<Integer> a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  // row_i -= q row_t
  void reduce_row(std::size_t i, std::size_t t, const Integer& q) {
    Integer neg = -q;
    add_row_multiple(a, i, t, neg);
    add_row_multiple(u, i, t, neg);
  }
  void reduce_col(std::size_t j, std::size_t t, const Integer& q) {
    Integer neg = -q;
    add_col_multiple(a, j, t, neg);
    add_col_multiple(v, j, t, neg);
  }
};

// Moves the smallest nonzero |entry| of row t / column t (from index t on) to (t,t).
void bring_small_pivot(SmithState& s, std::size_t t) {
  std::size_t best_r = t, best_c = t;
  Integer best = abs(s.a(t, t));
  for (std::size_t i = t; i < s.a.rows(); ++i) {
    Integer x = abs(s.a(i, t));
    if (sgn(x) != 0 && (sgn(best) == 0 || x < best)) best = x, best_r = i, best_c = t;
  }
  for (std::size_t j = t; j < s.a.cols(); ++j) {
    Integer x = abs(s.a(t, j));
    if (sgn(x) != 0 && (sgn(best) == 0 || x < best)) best = x, best_r = t, best_c = j;
  }
  s.swap_rows(t, best_r);
  s.swap_cols(t, best_c);
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const Matrix<Integer>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithState s{m, Matrix<Integer>::identity(rows, 0, 1), Matrix<Integer>::identity(cols, 0, 1)};
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Global minimal-|.| pivot in the trailing block.
    std::size_t pr = rows, pc = cols;
    Integer best;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(s.a(i, j)) == 0) continue;
        Integer x = abs(s.a(i, j));
        if (pr == rows || x < best) best = x, pr = i, pc = j;
      }
    }
    if (pr == rows) break;
    s.swap_rows(t, pr);
    s.swap_cols(t, pc);

    for (;;) {
      bool clear = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(s.a(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.a(i, t).get_mpz_t(), s.a(t, t).get_mpz_t());
        if (sgn(q) != 0) s.reduce_row(i, t, q);
        if (sgn(s.a(i, t)) != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(s.a(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.a(t, j).get_mpz_t(), s.a(t, t).get_mpz_t());
        if (sgn(q) != 0) s.reduce_col(j, t, q);
        if (sgn(s.a(t, j)) != 0) clear = false;
      }
      if (!clear) {
        bring_small_pivot(s, t);
        continue;
      }
      // Row and column are clear; enforce divisibility on the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (mpz_divisible_p(s.a(i, j).get_mpz_t(), s.a(t, t).get_mpz_t()) == 0) {
            add_row_multiple(s.a, t, i, 1);
            add_row_multiple(s.u, t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (sgn(s.a(t, t)) < 0) {
      for (std::size_t c = 0; c < cols; ++c) s.a(t, c) = -s.a(t, c);
      for (std::size_t c = 0; c < rows; ++c) s.u(t, c) = -s.u(t, c);
    }
  }
  return {std::move(s.u), std::move(s.a), std::move(s.v)};
}

Matrix<Integer> multiply(const Matrix<Integer>& a, const Matrix<Integer>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shapes");
  Matrix<Integer> out(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Integer determinant(const Matrix<Integer>& input) {
  if (input.rows() != input.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  Matrix<Integer> m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t i = k + 1;
      while (i < n && sgn(m(i, k)) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntegerHomology homology_over_integers(const Matrix<Integer>& d_in, const Matrix<Integer>& d_out) {
  if (d_in.rows() != d_out.cols()) throw Error(ErrorKind::ShapeMismatch, "d_in/d_out shapes");
  if (d_out.rows() > 0 && d_in.cols() > 0) {
    auto comp = multiply(d_out, d_in);
    for (const auto& x : comp.entries()) {
      if (sgn(x) != 0) throw Error(ErrorKind::CompositionNotZero, "d_out * d_in != 0");
    }
  }
  auto count_rank = [](const SmithForm& s) {
    std::size_t r = 0;
    for (const auto& x : s.diagonal()) r += sgn(x) != 0 ? 1 : 0;
    return r;
  };
  const std::size_t n = d_in.rows();
  auto snf_out = smith_normal_form(d_out);
  auto snf_in = smith_normal_form(d_in);
  IntegerHomology h;
  h.rank = n - count_rank(snf_out) - count_rank(snf_in);
  for (const auto& x : snf_in.diagonal()) {
    if (sgn(x) != 0 && x != 1) h.invariant_factors.push_back(x);
  }
  return h;
}

// ---------------------------------------------------------------------------

std::string to_string(ScalarDomain d) {
  switch (d) {
    case ScalarDomain::Rationals: return "QQ";
    case ScalarDomain::PrimeField: return "GF";
    case ScalarDomain::Integers: return "ZZ";
    case ScalarDomain::LocalizedIntegers: return "ZZ[1/p]";
  }
  return "?";
}

ScalarDomain parse_domain(const std::string& name) {
  if (name == "QQ" || name == "Q") return ScalarDomain::Rationals;
  if (name == "ZZ" || name == "Z") return ScalarDomain::Integers;
  if (name == "GF" || name.rfind("GF(", 0) == 0 || name.rfind("F", 0) == 0) return ScalarDomain::PrimeField;
  if (name.rfind("ZZ[1/", 0) == 0) return ScalarDomain::LocalizedIntegers;
  throw Error(ErrorKind::Parse, "unknown scalar domain '" + name + "'");
}

ExactMatrix::ExactMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols,
                         std::vector<Rational> entries, std::uint32_t prime)
    : domain_(domain), prime_(prime), grid_(rows, cols, std::move(entries)) {
  const bool needs_prime = domain == ScalarDomain::PrimeField || domain == ScalarDomain::LocalizedIntegers;
  if (needs_prime && !is_prime(prime)) {
    throw Error(ErrorKind::InvalidArgument, "domain " + to_string(domain) + " needs a prime");
  }
  for (const auto& x : grid_.entries()) {
    switch (domain_) {
      case ScalarDomain::Rationals: break;
      case ScalarDomain::Integers:
        if (x.get_den() != 1) throw Error(ErrorKind::DomainMismatch, x.get_str() + " is not an integer");
        break;
      case ScalarDomain::PrimeField:
        if (x.get_den() != 1 || sgn(x) < 0 || x >= prime_) {
          throw Error(ErrorKind::DomainMismatch, x.get_str() + " is not reduced mod " + std::to_string(prime_));
        }
        break;
      case ScalarDomain::LocalizedIntegers: (void)LocalizedInteger::from_rational(prime_, x); break;
    }
  }
}

Matrix<std::uint32_t> ExactMatrix::to_prime_field() const {
  return grid_.map<std::uint32_t>([](const Rational& x) {
    return static_cast<std::uint32_t>(Integer(x.get_num()).get_ui());
  });
}

Matrix<Integer> ExactMatrix::to_integers() const {
  return grid_.map<Integer>([](const Rational& x) { return Integer(x.get_num()); });
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  switch (m.domain()) {
    case ScalarDomain::Rationals: return kernel_basis(RationalField{}, m.grid());
    case ScalarDomain::PrimeField: {
      PrimeField f(m.prime());
      std::vector<std::vector<Rational>> out;
      for (const auto& v : kernel_basis(f, m.to_prime_field())) {
        out.emplace_back(v.begin(), v.end());
      }
      return out;
    }
    default: throw Error(ErrorKind::DomainNotAField, "kernel_basis over " + to_string(m.domain()));
  }
}

SmithForm smith_normal_form(const ExactMatrix& m) {
  if (m.domain() != ScalarDomain::Integers) {
    throw Error(ErrorKind::DomainMismatch, "Smith normal form needs integer entries");
  }
  return smith_normal_form(m.to_integers());
}

HomologySummary homology(const ExactMatrix& d_in, const ExactMatrix& d_out) {
  if (d_in.domain() != d_out.domain() || d_in.prime() != d_out.prime()) {
    throw Error(ErrorKind::DomainMismatch, "d_in and d_out over different domains");
  }
  HomologySummary out;
  switch (d_in.domain()) {
    case ScalarDomain::Rationals: {
      auto h = homology_over_field(RationalField{}, d_in.grid(), d_out.grid());
      out.dimension = h.dimension;
      out.representatives = std::move(h.representatives);
      return out;
    }
    case ScalarDomain::PrimeField: {
      PrimeField f(d_in.prime());
      auto h = homology_over_field(f, d_in.to_prime_field(), d_out.to_prime_field());
      out.dimension = h.dimension;
      for (const auto& v : h.representatives) out.representatives.emplace_back(v.begin(), v.end());
      return out;
    }
    case ScalarDomain::Integers: {
      auto h = homology_over_integers(d_in.to_integers(), d_out.to_integers());
      out.dimension = h.rank;
      out.invariant_factors = std::move(h.invariant_factors);
      return out;
    }
    case ScalarDomain::LocalizedIntegers: break;
  }
  throw Error(ErrorKind::DomainNotAField, "homology over " + to_string(d_in.domain()));
}

}  // namespace torlab::linalg
