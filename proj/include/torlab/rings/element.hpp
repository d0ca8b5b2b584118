#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "torlab/rings/idealization.hpp"
#include "torlab/rings/monoid.hpp"
#include "torlab/rings/poly.hpp"
#include "torlab/rings/sequences.hpp"
#include "torlab/rings/st_model.hpp"
#include "torlab/rings/tensor_level.hpp"

namespace torlab::rings {

enum class Family {
  Polynomial,
  MonoidAlgebra,
  MonomialQuotient,
  ST,
  SnLocalized,
  Idealization,
  TensorLevel,
  EventualSequence,
  FiniteProduct,
};

std::string to_string(Family f);
Family parse_family(const std::string& name);

using RingElement = std::variant<Poly, MonoidElement, STElement, SnFraction, IdealizationElement,
                                 TensorLevelElement, EventualSequence, FiniteProductElement>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Parsed ring descriptor: {"family", "scalar", "params"}.
class Ring {
 public:
  static RingPtr from_json(const json& descriptor);
  static RingPtr monomial(MonomialRing ring);
  static RingPtr monoid(std::optional<AlphaCut> quotient = std::nullopt);
  static RingPtr st(std::uint32_t p);
  static RingPtr sn(std::uint32_t p);
  static RingPtr idealization(std::uint32_t p);
  static RingPtr tensor(std::uint32_t p, std::uint32_t level);
  static RingPtr sequences();
  static RingPtr product(std::size_t arity);

  Family family() const { return family_; }
  std::uint32_t prime() const { return prime_; }
  std::uint32_t level() const { return level_; }
  std::size_t arity() const { return arity_; }
  const MonomialRingPtr& monomial_ring() const { return monomial_; }
  const std::optional<AlphaCut>& quotient() const { return quotient_; }

  RingElement zero() const;
  RingElement one() const;
  RingElement element(const json& literal) const;
  /// Family check for an element (ring-mismatch otherwise).
  void require_member(const RingElement& x) const;

  json descriptor() const;
  std::string scalar() const;

 private:
  Ring() = default;

  Family family_ = Family::Polynomial;
  std::uint32_t prime_ = 0;
  std::uint32_t level_ = 0;
  std::size_t arity_ = 0;
  MonomialRingPtr monomial_;
  std::optional<AlphaCut> quotient_;
};

RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_sub(const RingElement& x, const RingElement& y);
RingElement ring_mul(const RingElement& x, const RingElement& y);
RingElement ring_neg(const RingElement& x);
RingElement ring_pow(const RingElement& x, std::uint32_t n);
/// Every constructor already produces the canonical form; this re-canonicalizes a copy.
RingElement ring_normalize(const RingElement& x);
bool ring_is_zero(const RingElement& x);
bool ring_equal(const RingElement& x, const RingElement& y);
std::string element_to_string(const RingElement& x);
json element_to_json(const RingElement& x);

// ---------------------------------------------------------------------------
// Ideals

/// Ideal generated by the power products of degree `power` in the variables
/// of `range` (the maximal ideal of a monomial ring and its powers).
struct VariableSchema {
  IndexRange range;
  std::uint32_t power = 1;
  friend bool operator==(const VariableSchema&, const VariableSchema&) = default;
};

/// {f : v(f) >= value} in S_n, ordered by divisibility.
struct LexCut {
  LexValue value;
  friend bool operator==(const LexCut&, const LexCut&) = default;
};

/// Ideal of finitely supported sequences.
struct TailZero {
  friend bool operator==(const TailZero&, const TailZero&) = default;
};

using Closure = std::variant<AlphaCut, LexCut, VariableSchema, TailZero>;

struct IdealHandle {
  RingPtr ring;
  std::vector<RingElement> generators;
  std::optional<Closure> closure;

  /// Ideal membership; throws family-not-decidable where no test exists.
  bool contains(const RingElement& x) const;
  std::string to_string() const;
  json to_json() const;
};

IdealHandle make_ideal(RingPtr ring, std::vector<RingElement> generators);
/// The ideal of all variables of a monomial ring; generators enumerated up to the ring's index bound.
IdealHandle variable_ideal(RingPtr ring);
IdealHandle cut_ideal(RingPtr ring, AlphaCut cut);

struct AlphaInvariant {
  Rational alpha;
  bool attained = true;
};
AlphaInvariant alpha_invariant(const IdealHandle& c);

/// Generators of c^n (n-fold products, zeros dropped, duplicates removed) and the scaled closure.
IdealHandle ideal_power(const IdealHandle& c, std::uint32_t n);

}  // namespace torlab::rings
