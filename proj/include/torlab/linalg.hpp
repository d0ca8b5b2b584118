#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torlab/matrix.hpp"
#include "torlab/scalar.hpp"

namespace torlab::linalg {

/// Homology at the middle spot of C_{i+1} --d_in--> C_i --d_out--> C_{i-1}.
///
/// Zero-width matrices stand in for missing neighbours: pass a (dim C_i) x 0
/// matrix for d_in or a 0 x (dim C_i) matrix for d_out.
template <class T>
struct FieldHomology {
  std::size_t dimension = 0;
  std::vector<Vector<T>> representatives;
  std::vector<Vector<T>> boundaries;  // columns of d_in
  std::size_t ambient = 0;
};

template <ExactField F>
void require_composable(const F& f, const Matrix<typename F::value_type>& d_in,
                        const Matrix<typename F::value_type>& d_out) {
  if (d_in.rows() != d_out.cols()) {
    throw Error(ErrorKind::ShapeMismatch, "d_in targets " + std::to_string(d_in.rows()) +
                                              " coordinates but d_out reads " +
                                              std::to_string(d_out.cols()));
  }
  if (d_out.rows() > 0 && d_in.cols() > 0 && !is_zero_matrix(f, multiply(f, d_out, d_in))) {
    throw Error(ErrorKind::CompositionNotZero, "d_out * d_in != 0");
  }
}

template <ExactField F>
FieldHomology<typename F::value_type> homology_over_field(
    const F& f, const Matrix<typename F::value_type>& d_in,
    const Matrix<typename F::value_type>& d_out) {
  using T = typename F::value_type;
  require_composable(f, d_in, d_out);
  const std::size_t n = d_in.rows();
  auto cycles = kernel_basis(f, d_out);
  // Greedy complement: boundary columns first, then cycles that raise the rank.
  std::vector<Vector<T>> columns = to_columns(d_in);
  const std::size_t nb = columns.size();
  columns.insert(columns.end(), cycles.begin(), cycles.end());
  auto ech = row_reduce(f, from_columns(n, columns, f.zero()));
  FieldHomology<T> h;
  h.ambient = n;
  h.boundaries = to_columns(d_in);
  for (auto c : ech.pivots) {
    if (c >= nb) h.representatives.push_back(columns[c]);
  }
  h.dimension = h.representatives.size();
  return h;
}

/// Coordinates of a cycle with respect to the chosen representatives
/// (the boundary part is discarded). Returns nullopt if z is not in the
/// span of representatives and boundaries.
template <ExactField F>
std::optional<Vector<typename F::value_type>> homology_coordinates(
    const F& f, const FieldHomology<typename F::value_type>& h,
    std::span<const typename F::value_type> z) {
  using T = typename F::value_type;
  std::vector<Vector<T>> cols = h.representatives;
  cols.insert(cols.end(), h.boundaries.begin(), h.boundaries.end());
  if (cols.empty()) {
    if (is_zero_vector(f, z)) return Vector<T>{};
    return std::nullopt;
  }
  auto x = solve(f, from_columns(h.ambient, cols, f.zero()), z);
  if (!x) return std::nullopt;
  x->resize(h.dimension);
  return x;
}

/// Matrix of the map induced on homology by a chain map `phi` from the
/// spot of `source` to the spot of `target`.
template <ExactField F>
Matrix<typename F::value_type> induced_map(const F& f,
                                           const FieldHomology<typename F::value_type>& source,
                                           const FieldHomology<typename F::value_type>& target,
                                           const Matrix<typename F::value_type>& phi) {
  Matrix<typename F::value_type> out(target.dimension, source.dimension, f.zero());
  for (std::size_t j = 0; j < source.dimension; ++j) {
    auto image = apply(f, phi, std::span<const typename F::value_type>(source.representatives[j]));
    auto coords = homology_coordinates(f, target, image);
    if (!coords) throw Error(ErrorKind::CompositionNotZero, "chain map does not send cycles to cycles");
    for (std::size_t i = 0; i < target.dimension; ++i) out(i, j) = (*coords)[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integers

struct SmithForm {
  Matrix<Integer> u;
  Matrix<Integer> d;
  Matrix<Integer> v;

  std::vector<Integer> diagonal() const;
};

/// u * m * v = d with u, v unimodular and d diagonal, d_i | d_{i+1}, d_i >= 0.
SmithForm smith_normal_form(const Matrix<Integer>& m);

Matrix<Integer> multiply(const Matrix<Integer>& a, const Matrix<Integer>& b);
/// Fraction-free (Bareiss) determinant.
Integer determinant(const Matrix<Integer>& m);

/// ker(d_out)/im(d_in) over Z as Z^rank plus torsion.
struct IntegerHomology {
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;  // all > 1, divisibility chain

  friend bool operator==(const IntegerHomology&, const IntegerHomology&) = default;
};

IntegerHomology homology_over_integers(const Matrix<Integer>& d_in, const Matrix<Integer>& d_out);

// ---------------------------------------------------------------------------
// Runtime-tagged matrices

enum class ScalarDomain { Rationals, PrimeField, Integers, LocalizedIntegers };

std::string to_string(ScalarDomain d);
ScalarDomain parse_domain(const std::string& name);

/// Matrix carrying its scalar domain at runtime. Entries are stored as
/// rationals; the domain constrains which rationals are admissible.
class ExactMatrix {
 public:
  ExactMatrix(ScalarDomain domain, std::size_t rows, std::size_t cols, std::vector<Rational> entries,
              std::uint32_t prime = 0);

  ScalarDomain domain() const { return domain_; }
  std::uint32_t prime() const { return prime_; }
  std::size_t rows() const { return grid_.rows(); }
  std::size_t cols() const { return grid_.cols(); }
  const Matrix<Rational>& grid() const { return grid_; }
  bool is_field() const {
    return domain_ == ScalarDomain::Rationals || domain_ == ScalarDomain::PrimeField;
  }

  Matrix<std::uint32_t> to_prime_field() const;
  Matrix<Integer> to_integers() const;

 private:
  ScalarDomain domain_;
  std::uint32_t prime_;
  Matrix<Rational> grid_;
};

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);
SmithForm smith_normal_form(const ExactMatrix& m);

struct HomologySummary {
  std::size_t dimension = 0;  // free rank over Z
  std::vector<Integer> invariant_factors;
  std::vector<std::vector<Rational>> representatives;  // fields only
};

HomologySummary homology(const ExactMatrix& d_in, const ExactMatrix& d_out);

}  // namespace torlab::linalg
