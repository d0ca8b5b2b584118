#include "torlab/graded.hpp"

#include <algorithm>
#include <functional>

namespace torlab::graded {

namespace {

void require_same_length(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ShapeMismatch, "multidegrees of different length");
}

}  // namespace

Degree operator+(const Degree& a, const Degree& b) {
  require_same_length(a, b);
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Degree operator-(const Degree& a, const Degree& b) {
  require_same_length(a, b);
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Degree scaled(const Degree& a, std::int64_t k) {
  Degree out(a);
  for (auto& x : out) x *= k;
  return out;
}

std::int64_t total(const Degree& d) {
  std::int64_t s = 0;
  for (auto x : d) s += x;
  return s;
}

std::string to_string(const Degree& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

Term Term::pow(std::uint32_t k) const {
  Rational c = 1;
  for (std::uint32_t i = 0; i < k; ++i) c *= coeff;
  return {scaled(exponent, k), c};
}

Term term_from_poly(const rings::Poly& f, std::size_t nvars) {
  auto m = f.as_monomial();
  if (!m) throw Error(ErrorKind::NonMonomial, "sequence element " + f.to_string() + " is not a monomial");
  auto top = m->max_variable();
  if (top && *top >= nvars) throw Error(ErrorKind::InvalidArgument, "monomial uses a variable beyond the module");
  return {m->exponents(nvars), f.terms().begin()->second};
}

Degree subset_degree(const Sequence& seq, std::uint32_t subset) {
  Degree out(seq.empty() ? 0 : seq.front().exponent.size(), 0);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (subset >> j & 1U) out = out + seq[j].exponent;
  }
  return out;
}

Rational subset_coeff(const Sequence& seq, std::uint32_t subset, std::uint32_t u) {
  Rational c = 1;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (subset >> j & 1U) c *= seq[j].pow(u).coeff;
  }
  return c;
}

// ---------------------------------------------------------------------------

Window Window::box(std::size_t n, std::int64_t lo, std::int64_t hi) {
  return {Degree(n, lo), Degree(n, hi), std::nullopt};
}

Window Window::nonnegative(std::size_t n, std::int64_t max_total) {
  return {Degree(n, 0), Degree(n, max_total), max_total};
}

std::vector<Degree> Window::degrees() const {
  require_same_length(lo, hi);
  std::vector<Degree> out;
  Degree d = lo;
  if (d.empty()) return {d};
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t k, std::int64_t sum) {
    if (k == d.size()) {
      if (!max_total || sum <= *max_total) out.push_back(d);
      return;
    }
    for (std::int64_t x = lo[k]; x <= hi[k]; ++x) {
      d[k] = x;
      walk(k + 1, sum + x);
    }
  };
  walk(0, 0);
  return out;
}

json Window::to_json() const {
  json j = {{"lo", lo}, {"hi", hi}};
  if (max_total) j["max_total"] = *max_total;
  return j;
}

Matrix<Rational> GradedModule::multiply(const Term& t, const Degree& d) const {
  auto m = multiply(t.exponent, d);
  if (t.coeff != 1) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= t.coeff;
  }
  return m;
}

bool is_isomorphism(const Matrix<Rational>& m) {
  return m.rows() == m.cols() && linalg::rank(RationalField{}, m) == m.rows();
}

json PieceInfo::to_json() const {
  json j = {{"degree", degree}, {"dim", dim}};
  j["stabilized_at"] = stabilized_at ? json(*stabilized_at) : json("bound-exhausted");
  return j;
}

// ---------------------------------------------------------------------------

bool Cone::contains(const Degree& d) const {
  for (std::size_t j = 0; j < lower.size(); ++j) {
    if (lower[j] && d[j] < *lower[j]) return false;
  }
  return true;
}

MonomialModule::MonomialModule(std::size_t n, std::vector<Cone> present, std::vector<Cone> killed)
    : n_(n), present_(std::move(present)), killed_(std::move(killed)) {
  for (const auto* list : {&present_, &killed_}) {
    for (const auto& c : *list) {
      if (c.lower.size() != n_) throw Error(ErrorKind::ShapeMismatch, "cone of wrong dimension");
    }
  }
}

MonomialModule MonomialModule::quotient(std::size_t n, const std::vector<Degree>& relations) {
  std::vector<Cone> killed;
  for (const auto& g : relations) {
    if (g.size() != n) throw Error(ErrorKind::ShapeMismatch, "relation of wrong dimension");
    Cone c;
    for (auto x : g) c.lower.emplace_back(x);
    killed.push_back(std::move(c));
  }
  Cone all;
  all.lower.assign(n, std::int64_t{0});
  return {n, {all}, std::move(killed)};
}

MonomialModule MonomialModule::zero(std::size_t n) { return {n, {}, {}}; }

MonomialModule MonomialModule::from_ring(const rings::MonomialRing& ring) {
  const std::uint32_t top = ring.max_index();
  std::vector<Degree> rel;
  for (const auto& m : ring.relations.instances(top)) rel.push_back(m.exponents(top + 1));
  return quotient(top + 1, rel);
}

MonomialModule MonomialModule::localize(std::size_t var) const {
  if (var >= n_) throw Error(ErrorKind::InvalidArgument, "localization at a missing variable");
  auto relax = [var](std::vector<Cone> cones) {
    for (auto& c : cones) c.lower[var].reset();
    return cones;
  };
  return {n_, relax(present_), relax(killed_)};
}

bool MonomialModule::supports(const Degree& d) const {
  if (d.size() != n_) throw Error(ErrorKind::ShapeMismatch, "degree of wrong dimension");
  auto in = [&](const Cone& c) { return c.contains(d); };
  return std::any_of(present_.begin(), present_.end(), in) && std::none_of(killed_.begin(), killed_.end(), in);
}

Matrix<Rational> MonomialModule::multiply(const Degree& e, const Degree& d) const {
  const Degree target = d + e;
  Matrix<Rational> m(dim(target), dim(d), Rational(0));
  if (m.rows() == 1 && m.cols() == 1) m(0, 0) = 1;
  return m;
}

Degree MonomialModule::stable_from() const {
  Degree out(n_, 0);
  for (const auto* list : {&present_, &killed_}) {
    for (const auto& c : *list) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (c.lower[j]) out[j] = std::max(out[j], *c.lower[j]);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LocalizedModule::LocalizedModule(ModulePtr base, std::size_t var, std::uint32_t max_power)
    : base_(std::move(base)), var_(var), max_power_(max_power) {
  if (var_ >= base_->num_variables()) throw Error(ErrorKind::InvalidArgument, "localization at a missing variable");
}

Degree LocalizedModule::shifted(const Degree& d, std::uint32_t k) const {
  Degree out = d;
  out[var_] += k;
  return out;
}

Matrix<Rational> LocalizedModule::push(const Degree& d, std::uint32_t from, std::uint32_t to) const {
  Degree e(d.size(), 0);
  e[var_] = static_cast<std::int64_t>(to - from);
  return base_->multiply(e, shifted(d, from));
}

const LocalizedModule::Piece& LocalizedModule::piece(const Degree& d) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(d); it != cache_.end()) return it->second;
  }
  Piece p;
  const std::int64_t start = std::max<std::int64_t>(0, base_->stable_from()[var_] - d[var_]);
  for (auto k = static_cast<std::uint32_t>(start); k <= max_power_; ++k) {
    if (is_isomorphism(push(d, k, k + 1)) && is_isomorphism(push(d, k + 1, k + 2))) {
      p = {k, base_->dim(shifted(d, k)), true};
      break;
    }
  }
  if (!p.stabilized) p = {max_power_, base_->dim(shifted(d, max_power_)), false};
  std::lock_guard lock(mutex_);
  return cache_.emplace(d, p).first->second;
}

std::size_t LocalizedModule::dim(const Degree& d) const { return piece(d).dim; }

PieceInfo LocalizedModule::piece_info(const Degree& d) const {
  const auto& p = piece(d);
  return {d, p.dim, p.stabilized ? std::optional(p.power) : std::nullopt};
}

Matrix<Rational> LocalizedModule::multiply(const Degree& e, const Degree& d) const {
  const auto& src = piece(d);
  const auto& dst = piece(d + e);
  const std::uint32_t w = std::max(src.power, dst.power);
  const RationalField f;
  // Basis of piece d at power w is the image of the standard basis at src.power.
  auto image = linalg::multiply(f, base_->multiply(e, shifted(d, w)), push(d, src.power, w));
  auto basis = push(d + e, dst.power, w);
  Matrix<Rational> out(dst.dim, src.dim, Rational(0));
  for (std::size_t c = 0; c < src.dim; ++c) {
    auto col = image.column(c);
    auto x = linalg::solve(f, basis, std::span<const Rational>(col));
    if (!x) throw Error(ErrorKind::BoundExhausted, "localized piece did not stabilize at " + to_string(d + e));
    for (std::size_t r = 0; r < dst.dim; ++r) out(r, c) = (*x)[r];
  }
  return out;
}

}  // namespace torlab::graded
