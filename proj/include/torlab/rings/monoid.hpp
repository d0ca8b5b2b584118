#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "torlab/scalar.hpp"

namespace torlab::rings {

using json = nlohmann::json;

/// Set of exponents {beta : beta > alpha} (open) or {beta : beta >= alpha} (attained).
/// In K[Q] localized at its maximal ideal every ideal is such a cut: an element
/// with lowest exponent beta is a unit times e_beta.
struct AlphaCut {
  Rational alpha = 0;
  bool attained = true;

  bool contains(const Rational& beta) const { return attained ? beta >= alpha : beta > alpha; }
  /// The cut of the n-th power ideal.
  AlphaCut power(std::uint32_t n) const { return {alpha * n, attained}; }
  /// Ideal inclusion of cuts.
  bool subset_of(const AlphaCut& other) const;
  bool is_unit_ideal() const { return attained && sgn(alpha) == 0; }

  std::string to_string() const;
  json to_json() const;
  static AlphaCut from_json(const json& j);
  friend bool operator==(const AlphaCut&, const AlphaCut&) = default;
};

/// Element sum c_alpha e_alpha of K[Q] (K = Q, Q the non-negative rationals),
/// optionally taken modulo a cut ideal (terms whose exponent lies in the cut
/// are dropped). Without a cut this represents K[Q] and, through its lowest
/// term, the localization at the maximal ideal.
class MonoidElement {
 public:
  MonoidElement() = default;
  explicit MonoidElement(std::optional<AlphaCut> quotient) : quotient_(std::move(quotient)) {}
  static MonoidElement basis(const Rational& alpha, const Rational& coeff = 1,
                             std::optional<AlphaCut> quotient = std::nullopt);

  const std::map<Rational, Rational>& terms() const { return terms_; }
  const std::optional<AlphaCut>& quotient() const { return quotient_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest exponent; the element is a unit of K[Q]_m times e_{order}.
  Rational order() const;

  MonoidElement operator-() const;
  friend MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);
  friend MonoidElement operator-(const MonoidElement& a, const MonoidElement& b);
  friend MonoidElement operator*(const MonoidElement& a, const MonoidElement& b);
  MonoidElement pow(std::uint32_t n) const;
  friend bool operator==(const MonoidElement& a, const MonoidElement& b);

  std::string to_string() const;
  json to_json() const;
  static MonoidElement from_json(const json& j, std::optional<AlphaCut> quotient);

 private:
  void add_term(const Rational& alpha, const Rational& c);
  static void require_same_ring(const MonoidElement& a, const MonoidElement& b);

  std::optional<AlphaCut> quotient_;
  std::map<Rational, Rational> terms_;
};

}  // namespace torlab::rings
