#include "torlab/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>

#include "torlab/homology.hpp"
#include "torlab/torsion.hpp"

namespace torlab::corpus {

using namespace rings;
using graded::Degree;
using graded::MonomialModule;
using graded::Sequence;
using graded::Window;

namespace {

const std::vector<ReferenceEntry> kIndex = {
    {"1.200A",
     "Example 1.200 A, \"that ass_R(M) = ∅\" and \"M is not an a-torsion module\"",
     "idempotent f, non-nilpotent <f>, R/b not <f>-torsion, non-prime annihilators"},
    {"2.20",
     "Prop 2.20, \"α(cⁿ) = nα(c)\"; \"m is an idempotent maximal ideal\"; \"p = (0:_T e₁/1 + b) is not of finite "
     "type\"; \"non-maximal ideals of T are nilpotent\"",
     "alpha identity, idempotent maximal ideal, non-coherence witnesses, nilpotent cuts"},
    {"2.50", "Prop 2.50, \"f = Σ v_iᵖ ⊗ w_iᵖ = (Σ v_i⊗w_i)ᵖ\"",
     "Frobenius roots of nilpotents, unbounded nilpotency index across levels"},
    {"2.90",
     "Prop 2.90, \"f = up^nY_i^k\"; \"spec(S_n) = {0, c_n, n_n}\"; \"contains no power of p\"; \"Y_i = pY_{i+1}\"",
     "model relations, valuation normal form, comparability, pY_0 in every power of n_n"},
    {"2.100",
     "Prop 2.100, \"the canonical injection ⟨(0,Z_0)⟩_U ↪ U is essential\" and \"⋂_{n∈ℕ} qⁿ = … = 0 ⊕ M ≠ 0\"",
     "essential multipliers, powers of q, intersection of powers, q not nilpotent"},
    {"2.110+2.120",
     "Lemma 2.110 and Prop 2.120, \"therefore, m is not nilpotent\"; \"m is not idempotent\"; \"m is T-nilpotent\"; "
     "\"R is m-adically separated\"; \"Γ_m is not a radical\"",
     "functional witness, m not nilpotent or idempotent, T-nilpotency, separatedness, radical defect"},
    {"3.x",
     "Prop 3.10 \"H^i_a(Γ_a(M)) = 0\"; Prop 3.30 sequence; Prop 3.50/3.60 displays; Prop 3.80 \"H^i_a = 0 for every i "
     "> 0\"; wpr20 chain \"Ȟⁱ(a,▪) ≅ H_{n−i}(a^∞,▪)\"",
     "Cech and Koszul instance checks and weak proregularity verdicts"},
};

/// Per-check generator; the offset keeps checks independent of each other.
std::mt19937_64 rng_for(const Options& o, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : id) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return std::mt19937_64(o.seed ^ h);
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  // Fixed arithmetic instead of std::uniform_int_distribution keeps reports identical across standard libraries.
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational rq(const std::string& s) { return Rational(s); }

// ---------------------------------------------------------------------------

Report check_1200a(const Options& o, json& bounds) {
  Report r;
  auto rng = rng_for(o, "1.200A");
  bounds = {{"bound", o.bound}, {"samples", o.samples}, {"seed", o.seed}};
  auto ring = Ring::sequences();
  const EventualSequence f = EventualSequence::shifted_unit();
  r.expect("f is idempotent", f * f == f, {{"f", f.to_json()}});
  bool stable = true;
  for (std::uint32_t n = 1; n <= o.bound; ++n) stable = stable && f.pow(n) == f && !f.pow(n).is_zero();
  r.expect("<f> is not nilpotent", stable, {{"reason", "f^n = f != 0 since f^2 = f"}, {"checked_up_to", o.bound}});
  r.expect("f has infinite support", !f.in_finite_support_ideal());

  IdealHandle a = make_ideal(ring, {f});
  IdealHandle b{ring, {}, Closure{TailZero{}}};
  auto cert = torsion::is_torsion_element(ring->one(), a, o.bound, b);
  r.expect("class of 1 in R/b has no torsion certificate", !cert.certified(),
           {{"bound", o.bound},
            {"reason", "f^n * 1 = f for every n and f is not of finite support"},
            {"certificate", cert.to_json()}});

  // x' = f x agrees with x off index 0; x' in b forces x in b.
  std::vector<EventualSequence> xs;
  for (std::size_t s = 0; s < o.samples; ++s) {
    std::vector<Rational> prefix;
    const auto len = uniform(rng, 0, 4);
    for (std::int64_t k = 0; k < len; ++k) prefix.emplace_back(uniform(rng, -3, 3));
    xs.emplace_back(prefix, std::vector<Rational>{Rational(uniform(rng, -2, 2))});
  }
  bool reproduced = true;
  std::size_t nonzero_tail = 0;
  json first;
  for (const auto& x : xs) {
    EventualSequence xp = x.with_entry(0, 0);
    reproduced = reproduced && xp == f * x && (xp.in_finite_support_ideal() == x.in_finite_support_ideal());
    if (!x.in_finite_support_ideal()) {
      ++nonzero_tail;
      if (first.is_null()) first = {{"x", x.to_json()}, {"x_prime", xp.to_json()}};
    }
  }
  r.expect("x' construction: f x in b iff x in b", reproduced,
           {{"samples", xs.size()}, {"non_torsion_classes", nonzero_tail}, {"example", first}});

  // ann(class of x) = {r : r x in b} is not prime: g h x in b with g x, h x not in b.
  std::vector<EventualSequence> candidates;
  for (int p0 = 0; p0 <= 1; ++p0)
    for (int c0 = 0; c0 <= 1; ++c0)
      for (int c1 = 0; c1 <= 1; ++c1) {
        std::vector<Rational> prefix;
        if (p0) prefix.emplace_back(1);
        candidates.emplace_back(prefix, std::vector<Rational>{Rational(c0), Rational(c1)});
      }
  bool nonprime = true;
  json pairs = json::array();
  for (const auto& x : xs) {
    if (x.in_finite_support_ideal()) continue;
    bool found = false;
    for (std::size_t i = 0; i < candidates.size() && !found; ++i)
      for (std::size_t j = i; j < candidates.size() && !found; ++j) {
        const auto& g = candidates[i];
        const auto& h = candidates[j];
        if ((g * x).in_finite_support_ideal() || (h * x).in_finite_support_ideal()) continue;
        if (!(g * h * x).in_finite_support_ideal()) continue;
        found = true;
        if (pairs.size() < 3) pairs.push_back({{"x", x.to_json()}, {"g", g.to_json()}, {"h", h.to_json()}});
      }
    nonprime = nonprime && found;
  }
  r.expect("sampled annihilators are not prime", nonprime, {{"witness_pairs", pairs}});
  r.witnesses.push_back({{"f", f.to_json()}, {"non_prime", pairs.empty() ? json() : pairs[0]}});
  return r;
}

// ---------------------------------------------------------------------------

Report check_220(const Options& o, json& bounds) {
  Report r;
  auto rng = rng_for(o, "2.20");
  bounds = {{"bound", o.bound}, {"samples", o.samples}, {"seed", o.seed}};
  auto local = Ring::monoid();
  auto random_alpha = [&](std::int64_t max_num) {
    return make_rational(uniform(rng, 1, max_num), uniform(rng, 1, 6));
  };

  bool identity = true;
  json first_fail;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RingElement> gens;
    const auto k = uniform(rng, 1, 3);
    for (std::int64_t g = 0; g < k; ++g) {
      auto alpha = random_alpha(12);
      auto e = MonoidElement::basis(alpha) + MonoidElement::basis(alpha + random_alpha(6), Rational(uniform(rng, 1, 5)));
      gens.emplace_back(e);
    }
    IdealHandle c = make_ideal(local, gens);
    const Rational a1 = alpha_invariant(c).alpha;
    for (std::uint32_t n = 1; n <= 5; ++n) {
      const Rational an = alpha_invariant(ideal_power(c, n)).alpha;
      if (an != a1 * n) {
        identity = false;
        if (first_fail.is_null()) first_fail = {{"ideal", c.to_json()}, {"n", n}, {"alpha_n", an.get_str()}};
      }
    }
  }
  r.expect("alpha(c^n) = n alpha(c) on 50 sampled ideals, n <= 5", identity, first_fail);
  const Rational a3 = alpha_invariant(ideal_power(make_ideal(local, {MonoidElement::basis(rq("1/2"))}), 3)).alpha;
  r.expect("alpha(<e_1/2>^3) = 3/2", a3 == rq("3/2"), {{"alpha", a3.get_str()}});

  auto m = cut_ideal(local, {0, false});
  auto mi = torsion::is_idempotent(m);
  r.expect("m is idempotent", mi.idempotent, mi.to_json());
  auto ma = alpha_invariant(m);
  r.expect("alpha(m) = 0, not attained", sgn(ma.alpha) == 0 && !ma.attained);

  auto t = Ring::monoid(AlphaCut{1, false});
  const auto q = t->quotient();
  const auto e1 = MonoidElement::basis(1, 1, q);
  r.expect("e_1 is nonzero in T", !e1.is_zero());
  bool noncoherent = true;
  json sub_witness = json::array();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RingElement> gens;
    Rational lowest = 1;
    const auto k = uniform(rng, 1, 4);
    for (std::int64_t g = 0; g < k; ++g) {
      const Rational alpha = make_rational(uniform(rng, 1, 12), 12);
      lowest = std::min(lowest, alpha);
      gens.emplace_back(MonoidElement::basis(alpha, 1, q));
    }
    for (const auto& g : gens) noncoherent = noncoherent && ring_is_zero(ring_mul(g, e1));
    const Rational beta = lowest / 2;
    const auto eb = MonoidElement::basis(beta, 1, q);
    const bool in_p = ring_is_zero(ring_mul(eb, e1));
    const bool outside = !make_ideal(t, gens).contains(eb);
    noncoherent = noncoherent && in_p && outside;
    if (sub_witness.size() < 3) {
      json g = json::array();
      for (const auto& x : gens) g.push_back(element_to_json(x));
      sub_witness.push_back({{"subfamily", g}, {"outside", eb.to_json()}});
    }
  }
  r.expect("p = (0 : e_1) is not finitely generated: every finite subfamily misses some e_beta", noncoherent,
           {{"subfamilies", 20}, {"examples", sub_witness}});

  bool nilpotent = true;
  json cuts = json::array();
  for (int trial = 0; trial < 20; ++trial) {
    AlphaCut cut{make_rational(uniform(rng, 1, 12), uniform(rng, 1, 12)), uniform(rng, 0, 1) == 1};
    if (cut.alpha > 1) cut.alpha = 1;
    std::uint32_t oracle = 1;
    while (!cut.power(oracle).subset_of(AlphaCut{1, false})) ++oracle;
    auto res = torsion::is_nilpotent(cut_ideal(t, cut), std::max(o.bound, oracle + 1));
    const bool ok = res.index && *res.index == oracle;
    nilpotent = nilpotent && ok;
    if (cuts.size() < 5) cuts.push_back({{"cut", cut.to_json()}, {"index", res.to_json()}, {"oracle", oracle}});
  }
  auto quarter = torsion::is_nilpotent(cut_ideal(t, {rq("1/4"), true}), o.bound);
  r.expect("cut ideal alpha = 1/4 in T is nilpotent with n = 5", quarter.index && *quarter.index == 5,
           quarter.to_json());
  r.expect("sampled non-maximal ideals of T are nilpotent", nilpotent, cuts);
  return r;
}

// ---------------------------------------------------------------------------

TensorLevelElement random_tensor(std::mt19937_64& rng, std::uint32_t p, std::uint32_t level) {
  TensorLevelElement out(p, level);
  const std::uint32_t q = out.q();
  const auto terms = uniform(rng, 1, 3);
  for (std::int64_t k = 0; k < terms; ++k) {
    std::vector<std::uint32_t> c = {static_cast<std::uint32_t>(uniform(rng, 1, p - 1)),
                                    static_cast<std::uint32_t>(uniform(rng, 0, p - 1))};
    out = out + TensorLevelElement::basis(p, level, static_cast<std::uint32_t>(uniform(rng, 0, q - 1)),
                                          static_cast<std::uint32_t>(uniform(rng, 0, q - 1)),
                                          FpRational(FpPoly(p, c)));
  }
  return out;
}

Report check_250(const Options& o, json& bounds) {
  Report r;
  auto rng = rng_for(o, "2.50");
  std::vector<std::uint32_t> primes = o.p ? std::vector{*o.p} : std::vector<std::uint32_t>{2, 3};
  bounds = {{"levels", o.levels}, {"primes", primes}, {"seed", o.seed}};
  for (auto p : primes) {
    const std::string tag = "p=" + std::to_string(p);
    std::uint32_t previous_index = 0;
    for (std::uint32_t n = 1; n <= o.levels; ++n) {
      const std::string at = tag + " level " + std::to_string(n);
      auto delta = TensorLevelElement::delta(p, n);
      const auto q = delta.q();
      const auto index = tensor_nilpotency_index(delta, q + 1);
      r.expect(at + ": s^{1/q} (x) 1 - 1 (x) s^{1/q} is nonzero and nilpotent", !delta.is_zero() && index > 0,
               {{"index", index}});
      r.expect(at + ": its nilpotency index is q = p^n", index == q, {{"index", index}, {"q", q}});
      if (n == 1) r.expect(at + ": index <= p", index <= p);
      r.expect(at + ": index grows across levels", index > previous_index);
      previous_index = index;

      auto root = frobenius_root(delta);
      r.expect(at + ": Frobenius root of delta", root.pow(p) == delta.include() && root.level() == n + 1,
               {{"root", root.to_json()}});
      bool all = true;
      const std::size_t count = std::min<std::size_t>(o.samples, p == 2 ? 10 : 5);
      for (std::size_t s = 0; s < count; ++s) {
        auto f = delta * random_tensor(rng, p, n);
        if (!tensor_is_nilpotent(f)) {
          all = false;
          continue;
        }
        auto g = frobenius_root(f);
        all = all && g.pow(p) == f.include();
      }
      r.expect(at + ": sampled nilpotents acquire Frobenius roots", all, {{"samples", count}});
    }
    auto zero = frobenius_root(TensorLevelElement(p, 1));
    r.expect(tag + ": root of 0 is 0", zero.is_zero());
    if (p == 2) {
      auto d = TensorLevelElement::delta(2, 1);
      r.expect(tag + ": delta^2 = 0 at level 1", d.pow(2).is_zero());
      auto sq_root = frobenius_root(d.pow(2));
      r.expect(tag + ": root of delta^2 squares to its image", sq_root.pow(2) == d.pow(2).include());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

Report check_290(const Options& o, json& bounds) {
  Report r;
  auto rng = rng_for(o, "2.90");
  const std::uint32_t p = o.p.value_or(2);
  bounds = {{"bound", o.bound}, {"p", p}, {"pairs", 200}, {"seed", o.seed}};
  auto pc = [&](const Integer& c) { return STElement::constant(p, c); };
  auto y = [&](std::uint32_t i) { return STElement::y(p, i); };
  Integer pz = p;

  bool relations = true;
  for (std::uint32_t i = 0; i < o.bound; ++i)
    for (std::uint32_t j = i + 1; j <= o.bound; ++j) {
      Integer pj;
      mpz_pow_ui(pj.get_mpz_t(), pz.get_mpz_t(), j - i);
      relations = relations && pc(pj) * y(j) == y(i);
    }
  r.expect("p^{j-i} Y_j = Y_i for i < j <= bound", relations);

  const SnFraction sp(pc(pz));
  bool divisible = true;
  for (std::uint32_t i = 0; i <= o.bound; ++i) divisible = divisible && sn_divides(sp, SnFraction(y(i)));
  r.expect("n_n = <p>: p divides every Y_i", divisible);

  const SnFraction py0(pc(pz) * y(0));
  bool deep = true, no_power = true;
  for (std::uint32_t n = 1; n <= o.bound; ++n) {
    deep = deep && sn_divides(sp.pow(n), py0);
    no_power = no_power && !sn_divides(py0, sp.pow(n));
  }
  r.expect("pY_0 lies in n_n^N for every N <= bound", deep);
  r.expect("no power of p is divisible by pY_0", no_power);

  r.expect("v(p) = (0, 1)", sn_valuation(sp) == LexValue{0, 1});
  r.expect("v(pY_0) = (1, 1)", sn_valuation(py0) == LexValue{1, 1});
  bool yv = true;
  for (std::uint32_t i = 0; i <= o.bound; ++i) {
    yv = yv && sn_valuation(SnFraction(y(i))) == LexValue{1, -static_cast<std::int64_t>(i)};
  }
  r.expect("v(Y_i) = (1, -i)", yv);

  auto unit = [&]() {
    auto prime_to_p = [&]() {
      Integer c;
      do c = uniform(rng, 1, 40);
      while (c % p == 0);
      return c;
    };
    return SnFraction(pc(prime_to_p()) + pc(Integer(uniform(rng, 0, 3))) * y(1), pc(prime_to_p()));
  };
  auto normal_form = [&](std::uint32_t n, std::uint32_t i, std::uint32_t k) {
    Integer pn;
    mpz_pow_ui(pn.get_mpz_t(), pz.get_mpz_t(), n);
    return unit() * SnFraction(pc(pn) * y(i).pow(k));
  };
  bool extraction = true;
  std::vector<std::pair<SnFraction, LexValue>> sample;
  for (int s = 0; s < 200; ++s) {
    const auto n = static_cast<std::uint32_t>(uniform(rng, 0, 4));
    const auto i = static_cast<std::uint32_t>(uniform(rng, 0, 4));
    const auto k = static_cast<std::uint32_t>(uniform(rng, 0, 2));
    auto f = normal_form(n, i, k);
    const LexValue expect{k, static_cast<std::int64_t>(n) - static_cast<std::int64_t>(i * k)};
    extraction = extraction && sn_valuation(f) == expect;
    sample.emplace_back(f, expect);
  }
  r.expect("valuation of u p^n Y_i^k is (k, n - ik)", extraction, {{"samples", 200}});

  bool comparable = true;
  json example;
  for (std::size_t s = 0; s + 1 < sample.size(); s += 1) {
    const auto& f = sample[s].first;
    const auto& g = sample[(s * 7 + 3) % sample.size()].first;
    const bool fg = sn_divides(f, g), gf = sn_divides(g, f);
    comparable = comparable && (fg || gf);
    if (fg) comparable = comparable && sn_quotient(g, f) * f == g;
    if (example.is_null() && fg && !gf) {
      example = {{"f", f.to_json()}, {"g", g.to_json()}, {"g/f", sn_quotient(g, f).to_json()}};
    }
  }
  r.expect("200 sampled pairs are comparable under divisibility", comparable, example);
  r.witnesses.push_back({{"pY_0", py0.to_json()}, {"valuation", sn_valuation(py0).to_json()}});
  return r;
}

// ---------------------------------------------------------------------------

Report check_2100(const Options& o, json& bounds) {
  Report r;
  auto rng = rng_for(o, "2.100");
  const std::uint32_t p = o.p.value_or(2);
  bounds = {{"bound", o.bound}, {"p", p}, {"samples", o.samples}, {"seed", o.seed}};
  const Rational pq(p);
  auto ppow = [&](std::int64_t n) {
    Rational out = 1;
    for (std::int64_t k = 0; k < n; ++k) out *= pq;
    return out;
  };
  const IdealizationElement z0(p, 0, Rational(1, p));
  auto sample = [&]() {
    Rational scalar = 0;
    if (uniform(rng, 0, 3) != 0) {
      Integer den;
      do den = uniform(rng, 1, 15);
      while (den % p == 0);
      scalar = make_rational(Integer(uniform(rng, 1, 9)) * ppow(uniform(rng, 0, 3)).get_num(), den);
      if (uniform(rng, 0, 1)) scalar = -scalar;
    }
    const Rational torsion = make_rational(uniform(rng, 0, 20), ppow(uniform(rng, 1, 4)).get_num());
    IdealizationElement x(p, scalar, torsion);
    if (x.is_zero()) x = z0;
    return x;
  };
  std::vector<IdealizationElement> xs;
  for (std::size_t s = 0; s < o.samples; ++s) xs.push_back(sample());

  bool essential = true;
  for (const auto& u : xs) essential = essential && u * idealization_essential_multiplier(u) == z0;
  r.expect("essential multiplier for every sampled nonzero element", essential, {{"samples", xs.size()}});
  const IdealizationElement up(p, pq, 0);
  r.expect("(p, 0) -> (0, 1/p^2)", idealization_essential_multiplier(up) == IdealizationElement(p, 0, 1 / (pq * pq)));
  r.expect("(0, Z_0) -> (1, 0)", idealization_essential_multiplier(z0) == IdealizationElement(p, 1, 0));
  bool zi = true;
  for (std::uint32_t i = 0; i <= 4; ++i) {
    zi = zi && idealization_essential_multiplier(IdealizationElement::z(p, i)) == IdealizationElement(p, ppow(i), 0);
  }
  r.expect("(0, Z_i) -> (p^i, 0)", zi);

  // q^n = <(p^n, 0)> = p^n Z_(p) + M: membership means v_p(scalar) >= n.
  auto valuation = [&](const Rational& x) {
    std::int64_t v = 0;
    Integer num = x.get_num();
    while (num % p == 0) {
      num /= p;
      ++v;
    }
    return v;
  };
  bool powers = true;
  for (const auto& x : xs)
    for (std::uint32_t n = 1; n <= o.bound; ++n) {
      const bool oracle = sgn(x.scalar()) == 0 || valuation(x.scalar()) >= n;
      powers = powers && x.in_maximal_power(n) == oracle;
      powers = powers && (IdealizationElement(p, ppow(n), 0) * x).in_maximal_power(n);
    }
  r.expect("q^n = <(p^n, 0)> on samples", powers);

  bool intersection = true;
  for (std::uint32_t i = 0; i <= o.bound; ++i)
    for (std::uint32_t n = 1; n <= o.bound; ++n) intersection = intersection && IdealizationElement::z(p, i).in_maximal_power(n);
  r.expect("(0, Z_i) lies in every q^n, n <= bound", intersection);
  bool scalars_leave = true;
  for (const auto& x : xs) {
    if (sgn(x.scalar()) == 0) continue;
    const auto exit = static_cast<std::uint32_t>(valuation(x.scalar()) + 1);
    scalars_leave = scalars_leave && exit <= o.bound && !x.in_maximal_power(exit);
  }
  r.expect("no (a, x) with a != 0 lies in every q^n", scalars_leave);
  bool not_nilpotent = true;
  for (std::uint32_t n = 1; n <= o.bound; ++n) {
    auto qn = IdealizationElement(p, pq, 0).pow(n);
    not_nilpotent = not_nilpotent && !qn.is_zero() && qn == IdealizationElement(p, ppow(n), 0);
  }
  r.expect("q is not nilpotent: (p, 0)^n = (p^n, 0) != 0", not_nilpotent, {{"checked_up_to", o.bound}});
  r.witnesses.push_back({{"socle", z0.to_json()}});
  return r;
}

// ---------------------------------------------------------------------------

}  // namespace

RingPtr functional_ring(std::uint32_t bound) {
  MonomialRing mr;
  mr.variable_bound = bound;
  mr.prefix = "Y";
  mr.relations = RewriteSystem({}, {SchemaRule{Schema::DistinctPairs, {0, std::nullopt}, 1},
                                    SchemaRule{Schema::IndexedPower, {0, std::nullopt}, 1}});
  return Ring::monomial(std::move(mr));
}

namespace {

Report check_2120(const Options& o, json& bounds) {
  Report r;
  auto rng = rng_for(o, "2.110+2.120");
  const std::uint32_t V = o.bound;
  bounds = {{"V", V}, {"torsion_bound", V + 2}, {"families", 50}, {"seed", o.seed}};
  r.merge("functional", homology::functional_witness_check(V));

  auto ring = functional_ring(V);
  auto mr = ring->monomial_ring();
  auto y = [&](std::uint32_t i, std::uint32_t e = 1) { return Poly::variable(mr, i, e); };
  auto m = variable_ideal(ring);

  bool powers = true;
  for (std::uint32_t n = 1; n <= V; ++n) powers = powers && !y(n, n).is_zero();
  r.expect("m^N != 0 via Y_N^N", powers, {{"witness", y(V, V).to_string()}});
  auto m2 = ideal_power(m, 2);
  bool outside = true;
  for (const auto& g : m2.generators) {
    auto mono = std::get<Poly>(g).as_monomial();
    outside = outside && mono && mono->degree() == 2 && !mono->divides(Monomial::variable(1));
  }
  r.expect("Y_1 is not in m^2 (generators have degree 2)", outside, {{"m^2", m2.to_string()}});
  auto id = torsion::is_idempotent(m);
  r.expect("m is not idempotent", !id.idempotent, id.to_json());

  bool certified = true;
  json exps = json::array();
  for (std::uint32_t i = 1; i <= V; ++i) {
    auto c = torsion::is_torsion_element(y(i), m, V + 2);
    certified = certified && c.certified();
    exps.push_back({{"i", i}, {"exponent", c.exponent ? json(*c.exponent) : json()}});
  }
  r.expect("every Y_i is m-torsion", certified, exps);
  auto unit = torsion::is_torsion_element(ring->one(), m, V + 2);
  r.record("1 has no torsion certificate up to V+2", unit.certified() ? Status::Fail : Status::Pass,
           unit.to_json());

  bool tnil = true;
  json worst_case;
  for (int trial = 0; trial < 50; ++trial) {
    const auto k = static_cast<std::uint32_t>(uniform(rng, 1, V));
    std::vector<RingElement> fam;
    for (int j = 0; j < 30; ++j) fam.emplace_back(y(k, static_cast<std::uint32_t>(uniform(rng, 1, 2))));
    auto n = torsion::t_nilpotency_check(fam);
    const bool ok = n && *n <= k + 2;
    tnil = tnil && ok;
    if (!ok && worst_case.is_null()) worst_case = {{"index", k}};
  }
  r.expect("m is T-nilpotent on 50 seeded families (index <= k + 2)", tnil, worst_case);

  std::vector<RingElement> samples;
  for (std::uint32_t i = 1; i <= V; ++i)
    for (std::uint32_t k = 1; k <= i; ++k) samples.emplace_back(y(i, k));
  auto sep = torsion::adic_separated_up_to(m, V + 1, samples);
  r.expect("R is m-adically separated on samples", sep.empty, sep.to_json());

  auto defect = torsion::radical_defect(m, V + 2, m);
  r.expect("Gamma_m is not a radical: 1 + Gamma_m(R) is nonzero and torsion", defect.found, defect.to_json());
  r.witnesses.push_back({{"radical_defect", defect.witness}});
  return r;
}

// ---------------------------------------------------------------------------

graded::Term var_term(std::size_t n, std::size_t j) {
  Degree d(n, 0);
  d[j] = 1;
  return {d, 1};
}

graded::ModulePtr share(MonomialModule m) { return std::make_shared<MonomialModule>(std::move(m)); }

Report check_3x(const Options& o, json& bounds) {
  Report r;
  const std::int64_t w = std::max<std::int64_t>(o.window, 2);
  const std::int64_t half = std::max<std::int64_t>(w / 2, 1);
  const auto box1 = Window::box(1, -w, w);
  const auto box2 = Window::box(2, -half, half);
  const auto pos2 = Window::nonnegative(2, w);
  bounds = {{"window", w}, {"window_1var", box1.to_json()}, {"window_2var", box2.to_json()},
            {"wpr", {{"U", 3}, {"V", 8}}}, {"max_power", 24}};
  const Sequence x1 = {var_term(1, 0)};
  const Sequence x = {var_term(2, 0)};
  const Sequence xy = {var_term(2, 0), var_term(2, 1)};
  auto k1 = share(MonomialModule::quotient(1, {}));
  auto k2 = share(MonomialModule::quotient(2, {}));

  {
    Report c;
    auto sq = share(MonomialModule::quotient(1, {{2}}));
    std::size_t total = 0;
    for (const auto& p : homology::cech_cohomology(sq, x1, 0, box1)) total += p.dim;
    c.expect("H^0((x), Q[x]/(x^2)) has dim 2", total == 2);
    bool tail = true;
    for (const auto& p : homology::cech_cohomology(k1, x1, 1, box1)) tail = tail && p.dim == (p.degree[0] < 0 ? 1U : 0U);
    c.expect("H^1((x), Q[x]) is spanned by x^{-k}", tail);
    homology::CechModule top(k2, xy, 2);
    c.expect("H^2((x,y), Q[x,y]) has dim 1 at (-1,-1)", top.dim({-1, -1}) == 1 && top.dim({0, -1}) == 0);
    bool duality = true;
    for (const auto& d : pos2.degrees()) {
      auto s = homology::koszul_slice(*k2, xy, 2, d);
      auto t = homology::koszul_coslice(*k2, xy, 2, graded::operator-(d, Degree{2, 2}));
      for (std::size_t i = 0; i <= 2; ++i) duality = duality && s.homology(i).dimension == t.homology(i).dimension;
    }
    c.expect("H_i(a^u, R) matches H^{n-i}(K^(a^u, R)) dimensionwise", duality);
    r.merge("cech", c);
  }

  r.merge("gamma0/Q[x]/(x^3)", homology::gamma0_isomorphism_check(share(MonomialModule::quotient(1, {{3}})), x1,
                                                                  Window::box(1, 0, w)));
  r.merge("gamma0/Q[x,y]/(x^2y)", homology::gamma0_isomorphism_check(share(MonomialModule::quotient(2, {{2, 1}})), x,
                                                                     Window::nonnegative(2, std::min<std::int64_t>(w, 6))));
  r.merge("gamma0/Q[x]", homology::gamma0_isomorphism_check(k1, x1, Window::box(1, 0, w)));
  r.merge("gamma0/Q[x,y]/(x^2y,xy^2)",
          homology::gamma0_isomorphism_check(share(MonomialModule::quotient(2, {{2, 1}, {1, 2}})), xy, pos2));

  r.merge("torsion/Q[x]/(x^2)",
          homology::torsion_acyclicity_check(share(MonomialModule::quotient(1, {{2}})), x1, Window::box(1, 0, w)));
  r.merge("torsion/Q[x,y]/(x^2,y^2)",
          homology::torsion_acyclicity_check(share(MonomialModule::quotient(2, {{2, 0}, {0, 2}})), xy, pos2));
  r.merge("torsion/zero", homology::torsion_acyclicity_check(share(MonomialModule::zero(2)), xy, pos2));

  r.merge("comparison/R,n=2", homology::comparison_sequence_check(k2, x, var_term(2, 1), 2, box2));
  r.merge("comparison/R,n=1", homology::comparison_sequence_check(k2, x, var_term(2, 1), 1, box2));
  r.merge("comparison/R/(x),n=1", homology::comparison_sequence_check(share(MonomialModule::quotient(2, {{1, 0}})), x,
                                                                      var_term(2, 1), 1, box2));

  r.merge("base/S=R/(y^2)", homology::base_independence_check(2, {{0, 2}}, {}, x, 1, box2));
  r.merge("base/M=0", homology::base_independence_check(2, {{0, 2}}, {{0, 0}}, x, 1, box2));
  r.merge("base/S=R", homology::base_independence_check(2, {}, {}, x, 1, box2));

  r.merge("flat/f=y", homology::flat_base_change_check(MonomialModule::quotient(2, {}), x, 1, 1, box2));
  r.merge("flat/f=x", homology::flat_base_change_check(MonomialModule::quotient(2, {}), x, 0, 1, box2));
  r.merge("flat/M=0", homology::flat_base_change_check(MonomialModule::zero(2), x, 1, 1, box2));

  {
    std::vector<RingElement> prod_samples;
    for (int a = -2; a <= 2; ++a) prod_samples.emplace_back(FiniteProductElement({Rational(a), Rational(3 - a)}));
    r.merge("idempotent/(1,0)", homology::idempotent_vanishing_check(FiniteProductElement({1, 0}), prod_samples));
    r.merge("idempotent/e=1", homology::idempotent_vanishing_check(FiniteProductElement({1, 1}), prod_samples));
    r.merge("idempotent/e=0", homology::idempotent_vanishing_check(FiniteProductElement({0, 0}), prod_samples));
    std::vector<RingElement> seq_samples = {EventualSequence({1, 2}, {3}), EventualSequence({}, {1, -1}),
                                            EventualSequence({5}, {0})};
    r.merge("idempotent/shifted unit",
            homology::idempotent_vanishing_check(EventualSequence::shifted_unit(), seq_samples));
  }

  auto expect_wpr = [&](const std::string& name, const homology::WprVerdict& v, homology::WprKind kind) {
    r.expect("wpr/" + name, v.kind == kind, v.to_json());
    r.witnesses.push_back({{"wpr", name}, {"verdict", v.to_json()}});
  };
  expect_wpr("(x,y) in Q[x,y]", homology::wpr_test(*k2, xy, 3, 8, box2), homology::WprKind::ProZeroCertified);
  expect_wpr("(1,0) in QxQ", homology::wpr_test_principal(FiniteProductElement({1, 0}), 3, 8),
             homology::WprKind::ProZeroCertified);
  const std::uint32_t p = o.p.value_or(2);
  expect_wpr("<p> in S_n", homology::wpr_test_principal(SnFraction(STElement::constant(p, p)), 3, 8),
             homology::WprKind::ProZeroCertified);
  auto fixture = Ring::from_json(nonwpr_descriptor(8));
  expect_wpr("(x) in K[x,y_1..y_8]/({x^i y_i} + {y_i y_j})",
             homology::wpr_test_principal(fixture->element("x"), 1, 8), homology::WprKind::NotProZeroUpTo);
  return r;
}

using CheckFn = Report (*)(const Options&, json&);

const std::map<std::string, CheckFn>& registry() {
  static const std::map<std::string, CheckFn> m = {
      {"1.200A", check_1200a}, {"2.20", check_220},        {"2.50", check_250}, {"2.90", check_290},
      {"2.100", check_2100},   {"2.110+2.120", check_2120}, {"3.x", check_3x},
  };
  return m;
}

}  // namespace

const std::vector<ReferenceEntry>& reference_index() { return kIndex; }

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const auto& e : kIndex) out.push_back(e.check_id);
  return out;
}

bool known_check(const std::string& id) { return registry().count(id) > 0; }

json VerdictReport::to_json(bool timing) const {
  return {{"check_id", check_id},     {"status", to_string(status)}, {"paper_ref", paper_ref},
          {"bounds", bounds},         {"witnesses", witnesses},      {"assertions", assertions},
          {"runtime_ms", timing ? runtime_ms : 0}};
}

VerdictReport verify(const std::string& check_id, const Options& options) {
  auto it = registry().find(check_id);
  if (it == registry().end()) throw Error(ErrorKind::InvalidArgument, "unknown check id '" + check_id + "'");
  VerdictReport out;
  out.check_id = check_id;
  for (const auto& e : kIndex) {
    if (e.check_id == check_id) out.paper_ref = e.paper_ref;
  }
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = it->second(options, out.bounds);
  } catch (const Error& e) {
    r.record("computation", e.kind() == ErrorKind::BoundExhausted ? Status::Unknown : Status::Fail,
             {{"error", e.what()}});
  }
  out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  out.status = r.status;
  out.assertions = r.assertions;
  out.witnesses = r.witnesses;
  json exhausted = json::array();
  for (const auto& a : r.assertions) {
    if (a["status"] == "unknown") exhausted.push_back(a["name"]);
  }
  if (!exhausted.empty()) out.bounds["exhausted"] = exhausted;
  return out;
}

std::vector<VerdictReport> verify_all(const std::vector<std::string>& ids, const Options& options) {
  std::vector<std::future<VerdictReport>> jobs;
  for (const auto& id : ids) jobs.push_back(std::async(std::launch::async, [id, &options] { return verify(id, options); }));
  std::vector<VerdictReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

json suite_json(const std::vector<VerdictReport>& reports, bool timing) {
  json checks = json::array();
  for (const auto& r : reports) checks.push_back(r.to_json(timing));
  return {{"version", 1}, {"checks", checks}};
}

int exit_code(const std::vector<VerdictReport>& reports) {
  Status s = Status::Pass;
  for (const auto& r : reports) s = worst(s, r.status);
  return s == Status::Pass ? 0 : s == Status::Fail ? 1 : 2;
}

json nonwpr_descriptor(std::uint32_t V) {
  json names = json::array({"x"});
  json monomials = json::array();
  for (std::uint32_t i = 1; i <= V; ++i) {
    names.push_back("y_" + std::to_string(i));
    monomials.push_back(json::array({{{"var", 0}, {"exp", i}}, {{"var", i}, {"exp", 1}}}));
    for (std::uint32_t j = i + 1; j <= V; ++j) {
      monomials.push_back(json::array({{{"var", i}, {"exp", 1}}, {{"var", j}, {"exp", 1}}}));
    }
  }
  return {{"family", "monomial-quotient"},
          {"params", {{"variables", V + 1}, {"names", names}, {"relations", {{"monomials", monomials}}}}}};
}

}  // namespace torlab::corpus
