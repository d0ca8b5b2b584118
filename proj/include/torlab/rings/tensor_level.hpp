#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "torlab/error.hpp"

namespace torlab::rings {

using json = nlohmann::json;

/// Polynomial in s over F_p, coefficients low to high, no trailing zeros.
class FpPoly {
 public:
  explicit FpPoly(std::uint32_t p = 2, std::vector<std::uint32_t> coeffs = {});
  static FpPoly constant(std::uint32_t p, std::int64_t c);
  static FpPoly s_power(std::uint32_t p, std::uint32_t k);

  std::uint32_t prime() const { return p_; }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t leading() const { return c_.back(); }

  FpPoly operator-() const;
  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly scaled(std::uint32_t c) const;
  FpPoly pow(std::uint32_t n) const;
  /// (quotient, remainder); divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  FpPoly monic() const;
  friend FpPoly gcd(FpPoly a, FpPoly b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  std::uint32_t inverse(std::uint32_t a) const;
  std::string to_string() const;

 private:
  void trim();
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

/// Element of F_p(s) as a reduced fraction with monic denominator.
class FpRational {
 public:
  explicit FpRational(std::uint32_t p = 2);
  FpRational(FpPoly num, FpPoly den);
  explicit FpRational(FpPoly num);

  std::uint32_t prime() const { return num_.prime(); }
  const FpPoly& numerator() const { return num_; }
  const FpPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  FpRational operator-() const { return {-num_, den_}; }
  friend FpRational operator+(const FpRational& a, const FpRational& b);
  friend FpRational operator-(const FpRational& a, const FpRational& b);
  friend FpRational operator*(const FpRational& a, const FpRational& b);
  FpRational inverse() const;
  friend bool operator==(const FpRational&, const FpRational&) = default;

  std::string to_string() const;
  json to_json() const;
  static FpRational from_json(std::uint32_t p, const json& j);

 private:
  FpPoly num_;
  FpPoly den_;
};

/// Element of L_n ⊗_K L_n with K = F_p(s) and L_n = K(s^{1/q}), q = p^n.
/// The basis is z^i ⊗ w^j for 0 <= i, j < q where z = w = s^{1/q}.
class TensorLevelElement {
 public:
  using Index = std::pair<std::uint32_t, std::uint32_t>;

  TensorLevelElement(std::uint32_t p, std::uint32_t level);
  static TensorLevelElement basis(std::uint32_t p, std::uint32_t level, std::uint32_t i, std::uint32_t j,
                                  const FpRational& coeff);
  static TensorLevelElement one(std::uint32_t p, std::uint32_t level);
  /// s^{1/q} ⊗ 1 − 1 ⊗ s^{1/q}.
  static TensorLevelElement delta(std::uint32_t p, std::uint32_t level);

  std::uint32_t prime() const { return p_; }
  std::uint32_t level() const { return level_; }
  std::uint32_t q() const { return q_; }
  const std::map<Index, FpRational>& grid() const { return grid_; }
  bool is_zero() const { return grid_.empty(); }

  TensorLevelElement operator-() const;
  friend TensorLevelElement operator+(const TensorLevelElement& a, const TensorLevelElement& b);
  friend TensorLevelElement operator-(const TensorLevelElement& a, const TensorLevelElement& b);
  friend TensorLevelElement operator*(const TensorLevelElement& a, const TensorLevelElement& b);
  TensorLevelElement pow(std::uint32_t n) const;
  friend bool operator==(const TensorLevelElement&, const TensorLevelElement&) = default;

  /// Image under L_n ⊗ L_n -> L_{n+1} ⊗ L_{n+1}.
  TensorLevelElement include() const;
  /// Image under the multiplication map L_n ⊗ L_n -> L_n, as coefficients of z^k.
  std::vector<FpRational> multiplication_image() const;

  std::string to_string() const;
  json to_json() const;
  static TensorLevelElement from_json(std::uint32_t p, std::uint32_t level, const json& j);

 private:
  void add(std::uint32_t i, std::uint32_t j, const FpRational& c);
  static void require_same_ring(const TensorLevelElement& a, const TensorLevelElement& b);

  std::uint32_t p_;
  std::uint32_t level_;
  std::uint32_t q_;
  std::map<Index, FpRational> grid_;
};

/// True iff f^q = 0 at f's level (the nilradical of L_n ⊗ L_n has index q).
bool tensor_is_nilpotent(const TensorLevelElement& f);
/// Least k <= bound with f^k = 0, or 0 if none.
std::uint32_t tensor_nilpotency_index(const TensorLevelElement& f, std::uint32_t bound);
/// g at level n+1 with g^p = include(f). Requires f nilpotent (checked).
TensorLevelElement frobenius_root(const TensorLevelElement& f);

}  // namespace torlab::rings
