#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "torlab/scalar.hpp"

namespace torlab::rings {

using json = nlohmann::json;

/// Eventually periodic sequence in Q^N: prefix, then the block `period`
/// repeated forever. Canonical form: shortest period, then shortest prefix.
/// Eventually constant sequences are the case of period length 1.
class EventualSequence {
 public:
  EventualSequence();
  EventualSequence(std::vector<Rational> prefix, std::vector<Rational> period);
  static EventualSequence constant(const Rational& c);
  /// The sequence with f_0 = 0 and f_n = 1 for n > 0.
  static EventualSequence shifted_unit();

  const std::vector<Rational>& prefix() const { return prefix_; }
  const std::vector<Rational>& period() const { return period_; }
  Rational at(std::size_t n) const;
  bool is_zero() const;
  bool is_eventually_constant() const { return period_.size() == 1; }
  /// Membership in the ideal b of finitely supported sequences.
  bool in_finite_support_ideal() const;
  /// Copy with the entry at index n replaced.
  EventualSequence with_entry(std::size_t n, const Rational& value) const;

  EventualSequence operator-() const;
  friend EventualSequence operator+(const EventualSequence& a, const EventualSequence& b);
  friend EventualSequence operator-(const EventualSequence& a, const EventualSequence& b);
  friend EventualSequence operator*(const EventualSequence& a, const EventualSequence& b);
  EventualSequence pow(std::uint32_t n) const;
  friend bool operator==(const EventualSequence&, const EventualSequence&) = default;

  std::string to_string() const;
  json to_json() const;
  static EventualSequence from_json(const json& j);

 private:
  void canonicalize();
  template <class Op>
  static EventualSequence combine(const EventualSequence& a, const EventualSequence& b, Op op);

  std::vector<Rational> prefix_;
  std::vector<Rational> period_;
};

/// Element of Q^k with componentwise operations.
class FiniteProductElement {
 public:
  explicit FiniteProductElement(std::vector<Rational> components);

  std::size_t arity() const { return c_.size(); }
  const std::vector<Rational>& components() const { return c_; }
  bool is_zero() const;

  FiniteProductElement operator-() const;
  friend FiniteProductElement operator+(const FiniteProductElement& a, const FiniteProductElement& b);
  friend FiniteProductElement operator-(const FiniteProductElement& a, const FiniteProductElement& b);
  friend FiniteProductElement operator*(const FiniteProductElement& a, const FiniteProductElement& b);
  FiniteProductElement pow(std::uint32_t n) const;
  friend bool operator==(const FiniteProductElement&, const FiniteProductElement&) = default;

  std::string to_string() const;
  json to_json() const;
  static FiniteProductElement from_json(const json& j);

 private:
  std::vector<Rational> c_;
};

}  // namespace torlab::rings
