#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torlab/rings/monomial.hpp"

namespace torlab::rings {

/// K[X_0, X_1, ...] (or finitely many variables) modulo a monomial rewrite system.
/// With an empty rewrite system this is the plain polynomial ring.
struct MonomialRing {
  std::optional<std::uint32_t> num_variables;  // unset: countably many
  std::uint32_t variable_bound = 12;           // V, used when enumerating schemas
  RewriteSystem relations;
  std::string prefix = "X";
  std::vector<std::string> names;

  bool admits(const Monomial& m) const;
  /// Largest variable index enumerated by schematic computations.
  std::uint32_t max_index() const { return num_variables ? *num_variables - 1 : variable_bound; }
  std::string name(std::uint32_t var) const;
  std::optional<std::uint32_t> find_variable(const std::string& name) const;

  json to_json() const;
  static MonomialRing from_json(const json& params);

  friend bool operator==(const MonomialRing&, const MonomialRing&) = default;
};

using MonomialRingPtr = std::shared_ptr<const MonomialRing>;

/// Element of a MonomialRing in normal form: no stored monomial is killed by
/// the relations and no coefficient is zero.
class Poly {
 public:
  explicit Poly(MonomialRingPtr ring);
  static Poly constant(MonomialRingPtr ring, const Rational& c);
  static Poly term(MonomialRingPtr ring, const Monomial& m, const Rational& c = 1);
  static Poly variable(MonomialRingPtr ring, std::uint32_t var, std::uint32_t exp = 1);

  const MonomialRing& ring() const { return *ring_; }
  const MonomialRingPtr& ring_ptr() const { return ring_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The single monomial when this is c * m with c != 0.
  std::optional<Monomial> as_monomial() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly times(const Monomial& m) const;
  Poly pow(std::uint32_t n) const;
  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;
  json to_json() const;
  static Poly from_json(MonomialRingPtr ring, const json& j);

 private:
  void add_term(const Monomial& m, const Rational& c);
  static void require_same_ring(const Poly& a, const Poly& b);

  MonomialRingPtr ring_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace torlab::rings
