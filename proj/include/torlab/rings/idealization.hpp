#pragma once

#include <string>

#include "json.hpp"
#include "torlab/scalar.hpp"

namespace torlab::rings {

using json = nlohmann::json;

/// Element (r, x) of Z_(p) ⋉ Z(p^inf). The scalar r is a rational whose
/// denominator is prime to p; the torsion part x is a rational with p-power
/// denominator reduced into [0, 1). The generator Z_i corresponds to 1/p^{i+1}.
class IdealizationElement {
 public:
  explicit IdealizationElement(std::uint32_t p = 2);
  IdealizationElement(std::uint32_t p, Rational scalar, Rational torsion);
  /// (0, Z_i).
  static IdealizationElement z(std::uint32_t p, std::uint32_t i);

  std::uint32_t prime() const { return p_; }
  const Rational& scalar() const { return scalar_; }
  const Rational& torsion() const { return torsion_; }
  bool is_zero() const { return sgn(scalar_) == 0 && sgn(torsion_) == 0; }

  IdealizationElement operator-() const;
  friend IdealizationElement operator+(const IdealizationElement& a, const IdealizationElement& b);
  friend IdealizationElement operator-(const IdealizationElement& a, const IdealizationElement& b);
  /// (r, x)(s, y) = (rs, ry + sx).
  friend IdealizationElement operator*(const IdealizationElement& a, const IdealizationElement& b);
  IdealizationElement pow(std::uint32_t n) const;
  friend bool operator==(const IdealizationElement&, const IdealizationElement&) = default;

  /// Membership in q^n where q = pZ_(p) ⊕ M is the maximal ideal; q^n = pⁿZ_(p) ⊕ M.
  bool in_maximal_power(std::uint32_t n) const;

  std::string to_string() const;
  json to_json() const;
  static IdealizationElement from_json(std::uint32_t p, const json& j);

 private:
  std::uint32_t p_;
  Rational scalar_;
  Rational torsion_;
};

/// r · x for r in Z_(p) acting on the Prüfer group.
Rational pruefer_act(std::uint32_t p, const Rational& r, const Rational& x);
/// Reduces a p-power-denominator rational into [0, 1).
Rational pruefer_reduce(std::uint32_t p, const Rational& x);

/// m with u · m = (0, Z_0) = (0, 1/p).
IdealizationElement idealization_essential_multiplier(const IdealizationElement& u);

}  // namespace torlab::rings
