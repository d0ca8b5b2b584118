// One line per acceptance criterion. Exit status is nonzero when a criterion
// fails, except for the deviations listed in kKnownDeviations, which still
// print FAIL but only count as expected when the observed value is exactly the
// one recorded in the decisions ledger.
#include <chrono>
#include <cstdio>
#include <bit>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "torlab/corpus.hpp"
#include "torlab/homology.hpp"
#include "torlab/linalg.hpp"
#include "torlab/torsion.hpp"

using namespace torlab;
using graded::Degree;
using graded::MonomialModule;
using graded::Sequence;
using graded::Window;
using json = nlohmann::json;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
  bool known_deviation = false;  // failure matches the ledgered value exactly
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

graded::Term var_term(std::size_t n, std::size_t j) {
  Degree d(n, 0);
  d[j] = 1;
  return {d, 1};
}

std::shared_ptr<MonomialModule> share(MonomialModule m) { return std::make_shared<MonomialModule>(std::move(m)); }

// ---------------------------------------------------------------------------

bool is_unimodular(const linalg::Matrix<Integer>& m) {
  auto det = linalg::determinant(m);
  return det == 1 || det == -1;
}

bool snf_ok(const linalg::Matrix<Integer>& m) {
  auto s = linalg::smith_normal_form(m);
  if (linalg::multiply(linalg::multiply(s.u, m), s.v) != s.d) return false;
  if (!is_unimodular(s.u) || !is_unimodular(s.v)) return false;
  for (std::size_t r = 0; r < s.d.rows(); ++r)
    for (std::size_t c = 0; c < s.d.cols(); ++c)
      if (r != c && s.d(r, c) != 0) return false;
  auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) return false;
    if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] % diag[i] != 0) return false;
  }
  return true;
}

using Bits = std::uint32_t;

// Matrix over F_2 as column bitmasks.
Bits apply_f2(const std::vector<Bits>& cols, Bits x) {
  Bits out = 0;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (x >> c & 1U) out ^= cols[c];
  return out;
}

linalg::Matrix<std::uint32_t> to_matrix(std::size_t rows, const std::vector<Bits>& cols) {
  linalg::Matrix<std::uint32_t> m(rows, cols.size(), 0U);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c] >> r & 1U;
  return m;
}

std::size_t log2_exact(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

Outcome criterion_1() {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> dim(1, 8), entry(-9, 9);
  std::size_t snf_bad = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = dim(rng), c = dim(rng);
    linalg::Matrix<Integer> m(r, c, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
    if (!snf_ok(m)) ++snf_bad;
  }

  // Random composable pairs C_{i+1} -> C_i -> C_{i-1} over F_2, dims <= 6.
  std::uniform_int_distribution<int> small(0, 6), mid(1, 6);
  std::size_t f2_bad = 0;
  const PrimeField f2(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = mid(rng), m_in = small(rng), m_out = small(rng);
    std::vector<Bits> d_in(m_in);
    for (auto& col : d_in) col = static_cast<Bits>(rng() & ((1U << n) - 1));
    // Rows of d_out are drawn from the left kernel of d_in.
    std::vector<Bits> left_kernel;
    for (Bits row = 0; row < (1U << n); ++row) {
      bool kills = true;
      for (auto col : d_in) kills = kills && std::popcount(row & col) % 2 == 0;
      if (kills) left_kernel.push_back(row);
    }
    std::vector<Bits> out_rows(m_out);
    for (auto& row : out_rows) row = left_kernel[rng() % left_kernel.size()];
    std::vector<Bits> d_out(n, 0);
    for (std::size_t i = 0; i < m_out; ++i)
      for (std::size_t c = 0; c < n; ++c)
        if (out_rows[i] >> c & 1U) d_out[c] |= Bits{1} << i;

    std::size_t cycles = 0;
    for (Bits x = 0; x < (1U << n); ++x)
      if (apply_f2(d_out, x) == 0) ++cycles;
    std::set<Bits> boundaries;
    for (Bits w = 0; w < (1U << m_in); ++w) boundaries.insert(apply_f2(d_in, w));
    const std::size_t expected = log2_exact(cycles) - log2_exact(boundaries.size());

    auto h = linalg::homology_over_field(f2, to_matrix(n, d_in), to_matrix(m_out, d_out));
    if (h.dimension != expected) ++f2_bad;
  }
  return {snf_bad == 0 && f2_bad == 0,
          "snf mismatches " + std::to_string(snf_bad) + "/100, F2 homology mismatches " + std::to_string(f2_bad) + "/200"};
}

Outcome criterion_2() {
  auto r = MonomialModule::quotient(2, {});
  Sequence xy = {var_term(2, 0), var_term(2, 1)};
  auto w = Window::nonnegative(2, 12);
  std::size_t nonzero = 0, pieces = 0;
  for (std::uint32_t u = 1; u <= 3; ++u) {
    for (std::size_t i = 1; i <= 2; ++i) {
      for (const auto& p : homology::koszul_homology(r, xy, u, i, w)) {
        ++pieces;
        if (p.dim != 0) ++nonzero;
      }
    }
  }
  return {nonzero == 0 && pieces > 0,
          std::to_string(pieces) + " pieces, " + std::to_string(nonzero) + " nonzero"};
}

Outcome criterion_3() {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> count(1, 3), exp(0, 3), pick(0, 2);
  const std::vector<Sequence> seqs = {{var_term(2, 0)}, {var_term(2, 1)}, {var_term(2, 0), var_term(2, 1)}};
  std::size_t bad = 0, total_dim = 0;
  std::string failing;
  for (int t = 0; t < 10; ++t) {
    std::vector<Degree> rels;
    const int k = count(rng);
    while (static_cast<int>(rels.size()) < k) {
      Degree d = {exp(rng), exp(rng)};
      if (d[0] + d[1] > 0) rels.push_back(d);
    }
    auto m = share(MonomialModule::quotient(2, rels));
    const auto& a = seqs[pick(rng)];
    auto rep = homology::gamma0_isomorphism_check(m, a, Window::nonnegative(2, 8));
    if (rep.status != Status::Pass) {
      ++bad;
      failing = json(rels).dump();
    }
    for (const auto& as : rep.assertions)
      if (as.contains("detail") && as["detail"].contains("lhs_total")) total_dim += as["detail"]["lhs_total"].get<std::size_t>();
  }
  return {bad == 0, "10 instances, " + std::to_string(bad) + " not passing" + (failing.empty() ? "" : " e.g. " + failing) +
                        ", total torsion dimension " + std::to_string(total_dim)};
}

Outcome criterion_4() {
  using homology::WprKind;
  auto k2 = MonomialModule::quotient(2, {});
  Sequence xy = {var_term(2, 0), var_term(2, 1)};
  std::vector<std::pair<std::string, bool>> cases;
  auto poly = homology::wpr_test(k2, xy, 3, 8, Window::box(2, -4, 4));
  cases.emplace_back("(x,y)", poly.kind == WprKind::ProZeroCertified);
  auto idem = homology::wpr_test_principal(rings::FiniteProductElement({1, 0}), 3, 8);
  cases.emplace_back("(1,0)", idem.kind == WprKind::ProZeroCertified);
  auto sn = homology::wpr_test_principal(rings::SnFraction(rings::STElement::constant(2, 2)), 3, 8);
  cases.emplace_back("<p>", sn.kind == WprKind::ProZeroCertified);
  auto fixture = rings::Ring::from_json(corpus::nonwpr_descriptor(8));
  auto non = homology::wpr_test_principal(fixture->element("x"), 1, 8);
  cases.emplace_back("fixture", non.kind == WprKind::NotProZeroUpTo && non.witness.is_object() &&
                                    non.to_json()["verdict"] == "NotProZeroUpTo(8)");
  bool ok = true;
  std::string detail;
  for (const auto& [name, pass] : cases) {
    ok = ok && pass;
    detail += name + (pass ? " ok; " : " WRONG; ");
  }
  return {ok, detail + "witness " + non.witness.dump()};
}

Outcome criterion_5() {
  auto k2 = share(MonomialModule::quotient(2, {}));
  auto rep = homology::comparison_sequence_check(k2, {var_term(2, 0)}, var_term(2, 1), 2, Window::box(2, -6, 6));
  std::size_t lhs = 0, upper = 1;
  for (const auto& a : rep.assertions) {
    if (!a.contains("detail")) continue;
    if (a["detail"].contains("lhs_total")) lhs = a["detail"]["lhs_total"];
    if (a["name"] == "H^n_a total dimension on window") upper = a["detail"]["dim"];
  }
  return {rep.status == Status::Pass && upper == 0 && lhs > 0,
          "identity " + to_string(rep.status) + ", total dim " + std::to_string(lhs) + ", dim H^2_a " + std::to_string(upper)};
}

Outcome criterion_6() {
  const auto t0 = Clock::now();
  auto reports = corpus::verify_all(corpus::check_ids(), corpus::Options{});
  const double secs = seconds_since(t0);
  std::string detail;
  bool ok = secs < 300;
  for (const auto& r : reports) {
    ok = ok && r.status == Status::Pass;
    detail += r.check_id + "=" + to_string(r.status) + " ";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", secs);
  return {ok, detail + buf};
}

// The ledger records exponent(Y_i) = i for this ring; anything else is a new failure.
Outcome criterion_7a() {
  const std::uint32_t V = 12;
  auto ring = corpus::functional_ring(V);
  auto m = rings::variable_ideal(ring);
  bool spec_value = true, ledger_value = true;
  std::string exps;
  for (std::uint32_t i = 1; i <= V; ++i) {
    auto c = torsion::is_torsion_element(rings::Poly::variable(ring->monomial_ring(), i, 1), m, V + 2);
    const long e = c.exponent ? static_cast<long>(*c.exponent) : -1;
    spec_value = spec_value && e == static_cast<long>(i + 1);
    ledger_value = ledger_value && e == static_cast<long>(i);
    exps += std::to_string(e) + (i < V ? "," : "");
  }
  return {spec_value, "exponents for i=1..12: " + exps + " (required i+1)", !spec_value && ledger_value};
}

Outcome criterion_7b() {
  auto ring = corpus::functional_ring(12);
  auto c = torsion::is_torsion_element(ring->one(), rings::variable_ideal(ring), 14);
  return {!c.certified(), c.certified() ? "unit certified" : "no certificate up to 14"};
}

Outcome criterion_7c() {
  const std::uint32_t V = 12;
  auto ring = corpus::functional_ring(V);
  std::mt19937_64 rng(707);
  std::uniform_int_distribution<std::uint32_t> index(1, V), power(1, 2);
  std::size_t bad = 0;
  for (int t = 0; t < 50; ++t) {
    const auto k = index(rng);
    std::vector<rings::RingElement> fam;
    // Long enough initial segment: Y_k^{k+1} = 0, so k+1 factors always suffice.
    const auto len = std::uniform_int_distribution<std::uint32_t>(k + 2, 30)(rng);
    for (std::uint32_t j = 0; j < len; ++j) fam.emplace_back(rings::Poly::variable(ring->monomial_ring(), k, power(rng)));
    auto n = torsion::t_nilpotency_check(fam);
    if (!n || *n > k + 2) ++bad;
  }
  return {bad == 0, "50 families, " + std::to_string(bad) + " over k+2"};
}

Outcome criterion_8() {
  auto ids = corpus::check_ids();
  auto a = corpus::suite_json(corpus::verify_all(ids, corpus::Options{}), false).dump();
  auto b = corpus::suite_json(corpus::verify_all(ids, corpus::Options{}), false).dump();
  return {a == b, "suite json " + std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "differs")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 exact linear algebra", criterion_1},
      {"2 regular-sequence acyclicity", criterion_2},
      {"3 degree-0 isomorphism", criterion_3},
      {"4 weak proregularity tester", criterion_4},
      {"5 comparison sequence", criterion_5},
      {"6 corpus suite", criterion_6},
      {"7a torsion exponent i+1", criterion_7a},
      {"7b unit has no certificate", criterion_7b},
      {"7c T-nilpotency bound", criterion_7c},
      {"8 determinism", criterion_8},
  };
  int unexpected = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.2fs]", seconds_since(t0));
    std::cout << (o.ok ? "PASS " : "FAIL ") << name << ": " << o.detail << buf
              << (o.known_deviation ? " (known deviation, see decisions ledger)" : "") << "\n";
    if (!o.ok && !o.known_deviation) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
