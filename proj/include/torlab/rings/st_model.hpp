#pragma once

#include <compare>
#include <string>
#include <vector>

#include "json.hpp"
#include "torlab/scalar.hpp"

namespace torlab::rings {

using json = nlohmann::json;

/// Element of {f in Z[1/p][t] : f(0) in Z}. The generator Y_i is p^{-i} t.
class STElement {
 public:
  explicit STElement(std::uint32_t p = 2);
  STElement(std::uint32_t p, std::vector<LocalizedInteger> coefficients);
  static STElement constant(std::uint32_t p, const Integer& c);
  /// Y_i = p^{-i} t.
  static STElement y(std::uint32_t p, std::uint32_t i);

  std::uint32_t prime() const { return p_; }
  const std::vector<LocalizedInteger>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest t-degree with a nonzero coefficient.
  std::size_t t_order() const;
  const LocalizedInteger& lowest_coefficient() const;
  LocalizedInteger constant_term() const;

  STElement operator-() const;
  friend STElement operator+(const STElement& a, const STElement& b);
  friend STElement operator-(const STElement& a, const STElement& b);
  friend STElement operator*(const STElement& a, const STElement& b);
  STElement pow(std::uint32_t n) const;
  friend bool operator==(const STElement&, const STElement&) = default;

  std::string to_string() const;
  json to_json() const;
  static STElement from_json(std::uint32_t p, const json& j);

 private:
  void trim();
  void validate() const;

  std::uint32_t p_;
  std::vector<LocalizedInteger> coeffs_;
};

/// The (t-order, p-valuation) pair of the normal form u p^n Y_i^k.
struct LexValue {
  std::uint64_t t_order = 0;
  std::int64_t p_valuation = 0;

  friend auto operator<=>(const LexValue&, const LexValue&) = default;
  json to_json() const { return {{"t_order", t_order}, {"p_valuation", p_valuation}}; }
};

/// Fraction num/den of the ST model with den(0) a nonzero integer prime to p,
/// i.e. an element of the localization at the maximal ideal generated by p.
/// Equality is decided by cross-multiplication.
class SnFraction {
 public:
  explicit SnFraction(std::uint32_t p = 2);
  SnFraction(STElement num, STElement den);
  explicit SnFraction(STElement num);

  std::uint32_t prime() const { return num_.prime(); }
  const STElement& numerator() const { return num_; }
  const STElement& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  SnFraction operator-() const { return {-num_, den_}; }
  friend SnFraction operator+(const SnFraction& a, const SnFraction& b);
  friend SnFraction operator-(const SnFraction& a, const SnFraction& b);
  friend SnFraction operator*(const SnFraction& a, const SnFraction& b);
  SnFraction pow(std::uint32_t n) const;
  friend bool operator==(const SnFraction& a, const SnFraction& b);

  std::string to_string() const;
  json to_json() const;
  static SnFraction from_json(std::uint32_t p, const json& j);

 private:
  STElement num_;
  STElement den_;
};

LexValue sn_valuation(const SnFraction& f);
/// f | g in S_n: g has larger t-order, or equal t-order and p-valuation >= f's.
bool sn_divides(const SnFraction& f, const SnFraction& g);
/// The quotient g/f when f | g.
SnFraction sn_quotient(const SnFraction& g, const SnFraction& f);

}  // namespace torlab::rings
