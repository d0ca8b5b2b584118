#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"
#include "torlab/graded.hpp"
#include "torlab/report.hpp"
#include "torlab/rings/element.hpp"

namespace torlab::torsion {

using json = nlohmann::json;
using rings::IdealHandle;
using rings::Monomial;
using rings::RingElement;
using rings::RingPtr;
using linalg::Matrix;

/// Least n with a^n x = 0, or unknown up to `bound`.
struct TorsionCertificate {
  RingElement element;
  IdealHandle ideal;
  std::optional<std::uint32_t> exponent;
  std::uint32_t bound = 0;
  /// A nonzero element of a^{n-1} x (minimality) or of a^bound x (unknown).
  std::optional<RingElement> witness;

  bool certified() const { return exponent.has_value(); }
  json to_json() const;
};

/// A nonzero element of a^n x (read modulo `modulo` when given), or nullopt
/// when a^n x = 0. Schematic ideals use variables up to max(index bound, n).
std::optional<RingElement> power_times_witness(const IdealHandle& a, std::uint32_t n, const RingElement& x,
                                               const std::optional<IdealHandle>& modulo = std::nullopt);

/// x is read in R/modulo when `modulo` is given.
TorsionCertificate is_torsion_element(const RingElement& x, const IdealHandle& a, std::uint32_t bound,
                                      const std::optional<IdealHandle>& modulo = std::nullopt);

struct NilpotencyResult {
  std::optional<std::uint32_t> index;
  std::uint32_t bound = 0;
  std::optional<RingElement> witness;  // nonzero element of a^{index-1} or a^bound
  json to_json() const;
};
NilpotencyResult is_nilpotent(const IdealHandle& a, std::uint32_t bound);

struct IdempotencyResult {
  bool idempotent = false;
  std::optional<RingElement> witness;  // generator of a outside a^2
  json to_json() const;
};
/// a = a^2. Cut ideals compare cuts; finitely generated ideals test a ⊆ a^2
/// generator by generator. Throws family-not-decidable otherwise.
IdempotencyResult is_idempotent(const IdealHandle& a);

/// Least n with x_0 x_1 ... x_n = 0 (indices from 0) for monomials of a
/// monomial ring, or nullopt when the whole product is nonzero.
std::optional<std::size_t> t_nilpotency_check(const std::vector<RingElement>& family);

struct AdicResult {
  bool empty = true;                      // no sample lies in a^N
  std::optional<RingElement> witness;     // nonzero sample in every a^n, n <= N
  std::vector<std::uint32_t> exit_level;  // per sample: least n with x not in a^n (0 if none)
  std::uint32_t bound = 0;
  json to_json() const;
};
AdicResult adic_separated_up_to(const IdealHandle& a, std::uint32_t N, const std::vector<RingElement>& samples);

// ---------------------------------------------------------------------------
// Monomial ideals of a polynomial ring (minimal generator lists).

using MonomialIdeal = std::vector<Monomial>;

MonomialIdeal minimalize(MonomialIdeal gens);
MonomialIdeal colon(const MonomialIdeal& j, const Monomial& m);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
bool ideal_contains(const MonomialIdeal& j, const Monomial& m);
bool same_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
/// Generators of a^n for a monomial ideal a.
MonomialIdeal monomial_power(const MonomialIdeal& a, std::uint32_t n);
/// j : a^n.
MonomialIdeal colon_power(const MonomialIdeal& j, const MonomialIdeal& a, std::uint32_t n);

struct Saturation {
  MonomialIdeal ideal;
  std::optional<std::uint32_t> stabilized_at;
};
/// j : a^∞, the preimage of Γ_a(S/j); stabilization searched up to `bound`.
Saturation saturate(const MonomialIdeal& j, const MonomialIdeal& a, std::uint32_t bound);

/// Relations of a finite-variable (or truncated) monomial ring and the monomials of a generator list.
MonomialIdeal relation_ideal(const rings::MonomialRing& ring);
MonomialIdeal monomial_generators(const IdealHandle& a);

// ---------------------------------------------------------------------------

struct RadicalDefect {
  bool found = false;
  json witness;      // class of 1 in R/Γ with its certificates
  json certificate;  // computed Γ and supporting evidence
  json to_json() const;
};
/// Γ_a(R/Γ_a(R)) ≠ 0? Finite-variable monomial rings compute Γ by saturation;
/// otherwise `gamma` must describe Γ_a(R) schematically and is certified
/// generator by generator (gamma-not-schematic when absent).
RadicalDefect radical_defect(const IdealHandle& a, std::uint32_t bound,
                             const std::optional<IdealHandle>& gamma = std::nullopt);

struct MinimalPrimeWitness {
  std::vector<std::uint32_t> prime;
  RingElement element;
  MonomialIdeal annihilator;
  /// For each variable of the prime, a generator of the annihilator whose
  /// support meets the prime only in that variable.
  std::vector<std::pair<std::uint32_t, Monomial>> evidence;
  json to_json() const;
};

struct WeakAssassinResult {
  bool member = false;
  bool contains_annihilator = false;
  std::optional<std::uint32_t> failing_variable;  // dropping it keeps containment
  MinimalPrimeWitness witness;
  json to_json() const;
};

/// Annihilator of a monomial element of a monomial ring: (J : x) / J.
MonomialIdeal annihilator(const RingElement& x);
/// Is the variable prime P minimal over (0 : x)?
WeakAssassinResult weak_assassin_membership(const RingElement& x, const std::vector<std::uint32_t>& prime);
/// All minimal variable primes over (0 : x) among variables 0..max_index.
std::vector<std::vector<std::uint32_t>> weak_assassin(const RingElement& x);

/// Torsion versus weak assassin on a monomial ring: for every normal-form monomial of degree
/// <= degree_bound, torsion (bounded) iff every weak-assassin prime contains a.
Report torsion_chain_instance_check(const IdealHandle& a, std::uint32_t degree_bound, std::uint32_t torsion_bound);

// ---------------------------------------------------------------------------
// Graded truncations

struct ColonResult {
  std::uint32_t n = 0;
  std::vector<std::pair<graded::Degree, Matrix<Rational>>> pieces;  // basis columns per degree
  std::size_t total_dim() const;
  json to_json() const;
};

/// (0 :_M a^n) degreewise on the window, a given by monomial terms.
ColonResult colon_submodule(const graded::GradedModule& m, const graded::Sequence& a, std::uint32_t n,
                            const graded::Window& window);

struct GammaResult {
  ColonResult submodule;
  std::optional<std::uint32_t> stabilized_at;
  std::uint32_t bound = 0;
  std::vector<std::size_t> dims_by_n;  // total dimension of (0 : a^n) for n = 0..bound
  json to_json() const;
};

GammaResult gamma_truncated(const graded::GradedModule& m, const graded::Sequence& a, std::uint32_t N,
                            const graded::Window& window);

}  // namespace torlab::torsion
