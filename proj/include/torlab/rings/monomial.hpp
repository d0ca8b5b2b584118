#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "torlab/scalar.hpp"

namespace torlab::rings {

using json = nlohmann::json;

/// Power product of variables with finite support, kept sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (variable, exponent)

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial variable(std::uint32_t var, std::uint32_t exp = 1);
  /// Monomial with exponent vector `exps` over variables 0..exps.size()-1.
  static Monomial from_exponents(const std::vector<std::int64_t>& exps);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(std::uint32_t var) const;
  std::uint64_t degree() const;
  bool is_one() const { return factors_.empty(); }
  std::optional<std::uint32_t> max_variable() const;
  std::vector<std::int64_t> exponents(std::size_t nvars) const;

  bool divides(const Monomial& other) const;
  /// this / divisor; divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;
  Monomial pow(std::uint32_t n) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// "1", "X_1", "X_2^3*X_5"; `names` overrides the default prefix naming.
  std::string to_string(const std::string& prefix = "X",
                        const std::vector<std::string>& names = {}) const;
  json to_json() const;
  static Monomial from_json(const json& j);

 private:
  std::vector<Factor> factors_;
};

/// Index range: lo <= i and, when hi is set, i <= hi.
struct IndexRange {
  std::uint32_t lo = 0;
  std::optional<std::uint32_t> hi;

  bool contains(std::uint32_t i) const { return i >= lo && (!hi || i <= *hi); }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

enum class Schema {
  DistinctPairs,  // X_i X_j -> 0 for i != j
  AllPairs,       // X_i X_j -> 0 for all i, j (squares included)
  IndexedPower,   // X_i^{i + offset} -> 0
};

struct SchemaRule {
  Schema kind = Schema::DistinctPairs;
  IndexRange range;
  std::int64_t offset = 1;

  bool kills(const Monomial& m) const;
  friend bool operator==(const SchemaRule&, const SchemaRule&) = default;
};

/// Monomial-to-zero rules. Since every rule kills a monomial outright the
/// induced rewriting is confluent and the normal form of a polynomial is the
/// polynomial with killed monomials dropped.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(std::vector<Monomial> monomials, std::vector<SchemaRule> schemas);

  bool kills(const Monomial& m) const;
  /// Generators of the killed monomial ideal restricted to variables <= max_var, minimalized.
  std::vector<Monomial> instances(std::uint32_t max_var) const;
  bool empty() const { return monomials_.empty() && schemas_.empty(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const std::vector<SchemaRule>& schemas() const { return schemas_; }

  json to_json() const;
  static RewriteSystem from_json(const json& j);

  friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;

 private:
  std::vector<Monomial> monomials_;
  std::vector<SchemaRule> schemas_;
};

}  // namespace torlab::rings
