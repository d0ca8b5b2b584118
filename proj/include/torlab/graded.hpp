#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torlab/linalg.hpp"
#include "torlab/rings/poly.hpp"

namespace torlab::graded {

using json = nlohmann::json;
using Degree = std::vector<std::int64_t>;
using linalg::Matrix;

Degree operator+(const Degree& a, const Degree& b);
Degree operator-(const Degree& a, const Degree& b);
Degree scaled(const Degree& a, std::int64_t k);
std::int64_t total(const Degree& d);
std::string to_string(const Degree& d);

/// c * x^e with e >= 0.
struct Term {
  Degree exponent;
  Rational coeff = 1;

  Term pow(std::uint32_t k) const;
};

using Sequence = std::vector<Term>;

/// Reads a monomial c*m of a finite-variable ring as a term over `nvars` variables.
Term term_from_poly(const rings::Poly& f, std::size_t nvars);
/// Exponent sum of the terms of `seq` whose indices are in `subset` (a bitmask).
Degree subset_degree(const Sequence& seq, std::uint32_t subset);
/// Product of the coefficients of the selected terms, each raised to the power u.
Rational subset_coeff(const Sequence& seq, std::uint32_t subset, std::uint32_t u);

/// Finite set of multidegrees: lo <= d <= hi componentwise, optionally with a
/// bound on the total degree.
struct Window {
  Degree lo;
  Degree hi;
  std::optional<std::int64_t> max_total;

  static Window box(std::size_t n, std::int64_t lo, std::int64_t hi);
  /// Degrees d >= 0 with |d| <= max_total.
  static Window nonnegative(std::size_t n, std::int64_t max_total);

  std::vector<Degree> degrees() const;
  json to_json() const;
};

/// Z^n-graded module over K[x_1..x_n] with finite-dimensional pieces.
class GradedModule {
 public:
  virtual ~GradedModule() = default;
  virtual std::size_t num_variables() const = 0;
  virtual std::size_t dim(const Degree& d) const = 0;
  /// Multiplication by x^e as a dim(d+e) x dim(d) matrix.
  virtual Matrix<Rational> multiply(const Degree& e, const Degree& d) const = 0;
  /// Per coordinate, a degree beyond which the module no longer changes shape
  /// in that direction; colimit searches start from here.
  virtual Degree stable_from() const = 0;

  Matrix<Rational> multiply(const Term& t, const Degree& d) const;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

/// Up-set {d : d_j >= lower_j for every bounded coordinate j}.
struct Cone {
  std::vector<std::optional<std::int64_t>> lower;

  bool contains(const Degree& d) const;
  friend bool operator==(const Cone&, const Cone&) = default;
};

/// Module whose pieces are zero or spanned by the Laurent monomial x^d: the
/// degrees of U \ V for unions of cones U and V; x^e acts by x^d -> x^{d+e}.
/// Covers K[x]/J for monomial J, its localizations at variables and the
/// Laurent-type modules they produce.
class MonomialModule : public GradedModule {
 public:
  MonomialModule(std::size_t n, std::vector<Cone> present, std::vector<Cone> killed);
  /// K[x_1..x_n] / <x^g : g in relations>.
  static MonomialModule quotient(std::size_t n, const std::vector<Degree>& relations);
  static MonomialModule zero(std::size_t n);
  /// A monomial ring, variables 0..max_index, as a module over itself.
  static MonomialModule from_ring(const rings::MonomialRing& ring);

  MonomialModule localize(std::size_t var) const;
  bool supports(const Degree& d) const;

  std::size_t num_variables() const override { return n_; }
  std::size_t dim(const Degree& d) const override { return supports(d) ? 1 : 0; }
  Matrix<Rational> multiply(const Degree& e, const Degree& d) const override;
  Degree stable_from() const override;

  const std::vector<Cone>& present() const { return present_; }
  const std::vector<Cone>& killed() const { return killed_; }

 private:
  std::size_t n_;
  std::vector<Cone> present_;
  std::vector<Cone> killed_;
};

/// Dimension of a colimit piece together with the power at which it settled.
struct PieceInfo {
  Degree degree;
  std::size_t dim = 0;
  std::optional<std::uint32_t> stabilized_at;  // unset: bound exhausted

  json to_json() const;
};

/// True iff the square matrix is invertible.
bool is_isomorphism(const Matrix<Rational>& m);

/// Localization N_{x_var}: piece d is the colimit of N_{d + k e_var} under x_var.
class LocalizedModule : public GradedModule {
 public:
  LocalizedModule(ModulePtr base, std::size_t var, std::uint32_t max_power = 24);

  std::size_t num_variables() const override { return base_->num_variables(); }
  std::size_t dim(const Degree& d) const override;
  Matrix<Rational> multiply(const Degree& e, const Degree& d) const override;
  Degree stable_from() const override { return base_->stable_from(); }

  PieceInfo piece_info(const Degree& d) const;

 private:
  struct Piece {
    std::uint32_t power = 0;
    std::size_t dim = 0;
    bool stabilized = false;
  };
  const Piece& piece(const Degree& d) const;
  Degree shifted(const Degree& d, std::uint32_t k) const;
  Matrix<Rational> push(const Degree& d, std::uint32_t from, std::uint32_t to) const;

  ModulePtr base_;
  std::size_t var_;
  std::uint32_t max_power_;
  mutable std::mutex mutex_;
  mutable std::map<Degree, Piece> cache_;
};

}  // namespace torlab::graded
