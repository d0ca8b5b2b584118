#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torlab/graded.hpp"
#include "torlab/linalg.hpp"
#include "torlab/report.hpp"
#include "torlab/rings/element.hpp"

namespace torlab::homology {

using json = nlohmann::json;
using graded::Degree;
using graded::GradedModule;
using graded::ModulePtr;
using graded::PieceInfo;
using graded::Sequence;
using graded::Term;
using graded::Window;
using linalg::Matrix;

/// Product of the u-th powers of the terms of `seq` selected by `subset`.
Term subset_power(const Sequence& seq, std::uint32_t subset, std::uint32_t u);

/// One multidegree of K_•(a^u, M) (homological) or of K^•(a^u, M)
/// (cohomological, stored with index n - k so that out[k] always lowers the
/// stored index). Basis of C_k: the subsets S in `subsets[k]`, each carrying
/// a basis of the module piece `component_degree(S)`.
struct Slice {
  Degree degree;
  std::uint32_t power = 1;
  bool cohomological = false;
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> dims;
  std::vector<Matrix<Rational>> out;  // out[k]: C_k -> C_{k-1}; out[0] has 0 rows

  std::size_t length() const { return dims.size() - 1; }
  /// Incoming differential at k (zero-width when k is the top).
  Matrix<Rational> d_in(std::size_t k) const;
  linalg::FieldHomology<Rational> homology(std::size_t k) const;
};

/// K_•(a^u, M) at degree d; component of e_S is M_{d - u deg a_S}. Checks d∘d = 0.
Slice koszul_slice(const GradedModule& m, const Sequence& a, std::uint32_t u, const Degree& d);
/// K^•(a^u, M) at degree d; component of e_S is M_{d + u deg a_S}. Checks d∘d = 0.
Slice koszul_coslice(const GradedModule& m, const Sequence& a, std::uint32_t u, const Degree& d);

/// Chain map K_•(a^v) -> K_•(a^u) at stored index k, e_S -> a_S^{v-u} e_S.
Matrix<Rational> chain_transition(const GradedModule& m, const Sequence& a, std::uint32_t u, std::uint32_t v,
                                  const Degree& d, std::size_t k);
/// Cochain map K^•(a^u) -> K^•(a^v) at cohomological degree i, e_S -> a_S^{v-u} e_S.
Matrix<Rational> cochain_transition(const GradedModule& m, const Sequence& a, std::uint32_t u, std::uint32_t v,
                                    const Degree& d, std::size_t i);

struct HomologyPiece {
  Degree degree;
  std::size_t dim = 0;
  json to_json() const { return {{"degree", degree}, {"dim", dim}}; }
};

/// dim H_i(a^u, M) on each degree of the window.
std::vector<HomologyPiece> koszul_homology(const GradedModule& m, const Sequence& a, std::uint32_t u, std::size_t i,
                                           const Window& window);
/// dim H^i(K^•(a^u, M)) on each degree of the window.
std::vector<HomologyPiece> koszul_cohomology(const GradedModule& m, const Sequence& a, std::uint32_t u,
                                             std::size_t i, const Window& window);
/// H_i(a^u, M)_d over Z; the module and sequence must have integral coefficients.
linalg::IntegerHomology koszul_homology_integers(const GradedModule& m, const Sequence& a, std::uint32_t u,
                                                 std::size_t i, const Degree& d);

/// Matrix of H_i(a^v, M)_d -> H_i(a^u, M)_d in the representative bases.
struct InverseSystemMap {
  Degree degree;
  std::uint32_t u = 1;
  std::uint32_t v = 1;
  linalg::FieldHomology<Rational> source;
  linalg::FieldHomology<Rational> target;
  Matrix<Rational> matrix;
  bool is_zero() const;
};
InverseSystemMap koszul_inverse_system(const GradedModule& m, const Sequence& a, std::size_t i, std::uint32_t u,
                                       std::uint32_t v, const Degree& d);

// ---------------------------------------------------------------------------

/// Ȟ^i(a, M) as a graded module: the colimit of H^i(K^•(a^u, M)) over u.
/// A piece counts as settled once two consecutive transition maps are
/// isomorphisms; pieces that never settle by `max_power` are flagged.
class CechModule : public GradedModule {
 public:
  CechModule(ModulePtr base, Sequence a, std::size_t i, std::uint32_t max_power = 24);

  std::size_t num_variables() const override { return base_->num_variables(); }
  std::size_t dim(const Degree& d) const override;
  Matrix<Rational> multiply(const Degree& e, const Degree& d) const override;
  Degree stable_from() const override { return base_->stable_from(); }

  PieceInfo piece_info(const Degree& d) const;
  std::uint32_t start_power(const Degree& d) const;

 private:
  struct Piece {
    std::uint32_t power = 1;
    bool stabilized = false;
    linalg::FieldHomology<Rational> h;
  };
  const Piece& piece(const Degree& d) const;
  linalg::FieldHomology<Rational> cohomology_at(const Degree& d, std::uint32_t u) const;
  Matrix<Rational> transition_on_cohomology(const Degree& d, std::uint32_t u) const;

  ModulePtr base_;
  Sequence a_;
  std::size_t i_;
  std::uint32_t max_power_;
  mutable std::mutex mutex_;
  mutable std::map<Degree, Piece> cache_;
};

/// Graded dimensions of Ȟ^i(a, M) on the window with stabilization powers.
std::vector<PieceInfo> cech_cohomology(ModulePtr m, const Sequence& a, std::size_t i, const Window& window,
                                       std::uint32_t max_power = 24);
json pieces_to_json(const std::vector<PieceInfo>& pieces);

// ---------------------------------------------------------------------------
// Weak proregularity

enum class WprKind { ProZeroCertified, NotProZeroUpTo, Unknown };
std::string to_string(WprKind k);

struct WprVerdict {
  WprKind kind = WprKind::Unknown;
  std::uint32_t u_bound = 0;
  std::uint32_t v_bound = 0;
  json certificates = json::array();  // per (i, u): the v with zero map
  json witness;                       // surviving cycle for NotProZeroUpTo
  std::string path;                   // "graded" or "principal"
  json to_json() const;
};

/// Graded path: for every i >= 1 and u <= U some v in [u, V] gives the zero
/// map H_i(a^v, M) -> H_i(a^u, M) on every degree of the window.
WprVerdict wpr_test(const GradedModule& m, const Sequence& a, std::uint32_t U, std::uint32_t V, const Window& window);
/// Principal path for a = (a) in any ring: the map is multiplication by
/// a^{v-u} on (0 : a^v).
WprVerdict wpr_test_principal(const rings::RingElement& a, std::uint32_t U, std::uint32_t V);

// ---------------------------------------------------------------------------
// Instance checks

Report gamma0_isomorphism_check(ModulePtr m, const Sequence& a, const Window& window, std::uint32_t bound = 12);
Report torsion_acyclicity_check(ModulePtr m, const Sequence& a, const Window& window, std::uint32_t bound = 12);
/// dim Ȟ^n_{a+b}(M) = dim Ȟ^1_b(Ȟ^{n-1}_a(M)) + dim Γ_b(Ȟ^n_a(M)) degreewise.
Report comparison_sequence_check(ModulePtr m, const Sequence& a, const Term& b, std::size_t n, const Window& window);
/// Ȟ^i over S = R/J computed for M against the same cohomology of M viewed over R.
Report base_independence_check(std::size_t nvars, const std::vector<Degree>& ring_relations,
                               const std::vector<Degree>& module_relations, const Sequence& a, std::size_t i,
                               const Window& window);
/// Ȟ^i_a(M)_f against Ȟ^i_{aR_f}(M_f), f a variable.
Report flat_base_change_check(const graded::MonomialModule& m, const Sequence& a, std::size_t f, std::size_t i,
                              const Window& window);
/// Ȟ^1(e, M) = 0 for an idempotent e of a finite product or sequence ring.
Report idempotent_vanishing_check(const rings::RingElement& e, const std::vector<rings::RingElement>& samples);
/// The functional supported on {X_i^i} is killed by the relations, not by any power of the variables.
Report functional_witness_check(std::uint32_t V);

}  // namespace torlab::homology
