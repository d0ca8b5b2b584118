#include "torlab/rings/tensor_level.hpp"

#include <algorithm>

#include "torlab/scalar.hpp"

namespace torlab::rings {

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return FpPoly(p, {static_cast<std::uint32_t>(r)});
}

FpPoly FpPoly::s_power(std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> c(k + 1, 0);
  c[k] = 1;
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t FpPoly::inverse(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero in F_p");
  std::uint64_t result = 1, base = a % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

FpPoly FpPoly::operator-() const {
  FpPoly out = *this;
  for (auto& x : out.c_) x = (p_ - x) % p_;
  return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::RingMismatch, "polynomials over different primes");
  std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = (c[i] + b.c_[i]) % a.p_;
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.p_ != b.p_) throw Error(ErrorKind::RingMismatch, "polynomials over different primes");
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % a.p_;
  }
  return FpPoly(a.p_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  std::vector<std::uint32_t> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = static_cast<std::uint32_t>(std::uint64_t{c_[i]} * c % p_);
  return FpPoly(p_, std::move(out));
}

FpPoly FpPoly::pow(std::uint32_t n) const {
  FpPoly out = constant(p_, 1), base = *this;
  while (n > 0) {
    if (n & 1U) out = out * base;
    base = base * base;
    n >>= 1U;
  }
  return out;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroElement, "polynomial division by zero");
  FpPoly rem = *this;
  if (degree() < divisor.degree()) return {FpPoly(p_), rem};
  std::vector<std::uint32_t> quot(c_.size() - divisor.c_.size() + 1, 0);
  const std::uint32_t inv = inverse(divisor.leading());
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
    auto factor = static_cast<std::uint32_t>(std::uint64_t{rem.leading()} * inv % p_);
    quot[shift] = factor;
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) {
      auto sub = std::uint64_t{factor} * divisor.c_[i] % p_;
      rem.c_[i + shift] = static_cast<std::uint32_t>((rem.c_[i + shift] + p_ - sub) % p_);
    }
    rem.trim();
  }
  return {FpPoly(p_, std::move(quot)), rem};
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse(leading()));
}

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string FpPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(c_[k]);
      continue;
    }
    if (c_[k] != 1) out += std::to_string(c_[k]) + "*";
    out += k == 1 ? "s" : "s^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------

FpRational::FpRational(std::uint32_t p) : num_(p), den_(FpPoly::constant(p, 1)) {}

FpRational::FpRational(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.prime(), 1)) {}

FpRational::FpRational(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroElement, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = FpPoly::constant(num_.prime(), 1);
    return;
  }
  FpPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  auto inv = den_.inverse(den_.leading());
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

FpRational operator+(const FpRational& a, const FpRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

FpRational operator-(const FpRational& a, const FpRational& b) { return a + (-b); }

FpRational operator*(const FpRational& a, const FpRational& b) {
  if (a.is_zero() || b.is_zero()) return FpRational(a.prime());
  return {a.num_ * b.num_, a.den_ * b.den_};
}

FpRational FpRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroElement, "inverse of zero rational function");
  return {den_, num_};
}

std::string FpRational::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

json FpRational::to_json() const {
  return {{"num", num_.coefficients()}, {"den", den_.coefficients()}};
}

FpRational FpRational::from_json(std::uint32_t p, const json& j) {
  if (j.is_number_integer()) return FpRational(FpPoly::constant(p, j.get<std::int64_t>()));
  if (j.is_array()) return FpRational(FpPoly(p, j.get<std::vector<std::uint32_t>>()));
  return {FpPoly(p, j.at("num").get<std::vector<std::uint32_t>>()),
          FpPoly(p, j.value("den", std::vector<std::uint32_t>{1}))};
}

// ---------------------------------------------------------------------------

TensorLevelElement::TensorLevelElement(std::uint32_t p, std::uint32_t level) : p_(p), level_(level), q_(1) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  for (std::uint32_t i = 0; i < level; ++i) q_ *= p;
}

TensorLevelElement TensorLevelElement::basis(std::uint32_t p, std::uint32_t level, std::uint32_t i, std::uint32_t j,
                                             const FpRational& coeff) {
  TensorLevelElement out(p, level);
  if (i >= out.q_ || j >= out.q_) throw Error(ErrorKind::InvalidArgument, "tensor basis index out of range");
  out.add(i, j, coeff);
  return out;
}

TensorLevelElement TensorLevelElement::one(std::uint32_t p, std::uint32_t level) {
  return basis(p, level, 0, 0, FpRational(FpPoly::constant(p, 1)));
}

TensorLevelElement TensorLevelElement::delta(std::uint32_t p, std::uint32_t level) {
  if (level == 0) throw Error(ErrorKind::InvalidArgument, "delta needs level >= 1");
  FpRational one(FpPoly::constant(p, 1));
  return basis(p, level, 1, 0, one) - basis(p, level, 0, 1, one);
}

void TensorLevelElement::add(std::uint32_t i, std::uint32_t j, const FpRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = grid_.emplace(Index{i, j}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) grid_.erase(it);
  }
}

void TensorLevelElement::require_same_ring(const TensorLevelElement& a, const TensorLevelElement& b) {
  if (a.p_ != b.p_ || a.level_ != b.level_) throw Error(ErrorKind::RingMismatch, "tensor elements at different levels");
}

TensorLevelElement TensorLevelElement::operator-() const {
  TensorLevelElement out = *this;
  for (auto& [ij, c] : out.grid_) c = -c;
  return out;
}

TensorLevelElement operator+(const TensorLevelElement& a, const TensorLevelElement& b) {
  TensorLevelElement::require_same_ring(a, b);
  TensorLevelElement out = a;
  for (const auto& [ij, c] : b.grid_) out.add(ij.first, ij.second, c);
  return out;
}

TensorLevelElement operator-(const TensorLevelElement& a, const TensorLevelElement& b) { return a + (-b); }

TensorLevelElement operator*(const TensorLevelElement& a, const TensorLevelElement& b) {
  TensorLevelElement::require_same_ring(a, b);
  TensorLevelElement out(a.p_, a.level_);
  const FpRational s(FpPoly::s_power(a.p_, 1));
  for (const auto& [ia, ca] : a.grid_) {
    for (const auto& [ib, cb] : b.grid_) {
      FpRational c = ca * cb;
      std::uint32_t i = ia.first + ib.first, j = ia.second + ib.second;
      // z^q = s and w^q = s.
      if (i >= a.q_) i -= a.q_, c = c * s;
      if (j >= a.q_) j -= a.q_, c = c * s;
      out.add(i, j, c);
    }
  }
  return out;
}

TensorLevelElement TensorLevelElement::pow(std::uint32_t n) const {
  TensorLevelElement out = one(p_, level_), base = *this;
  while (n > 0) {
    if (n & 1U) out = out * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return out;
}

TensorLevelElement TensorLevelElement::include() const {
  TensorLevelElement out(p_, level_ + 1);
  for (const auto& [ij, c] : grid_) out.add(ij.first * p_, ij.second * p_, c);
  return out;
}

std::vector<FpRational> TensorLevelElement::multiplication_image() const {
  std::vector<FpRational> out(q_, FpRational(p_));
  const FpRational s(FpPoly::s_power(p_, 1));
  for (const auto& [ij, c] : grid_) {
    std::uint32_t k = ij.first + ij.second;
    FpRational term = c;
    if (k >= q_) k -= q_, term = term * s;
    out[k] = out[k] + term;
  }
  return out;
}

std::string TensorLevelElement::to_string() const {
  if (grid_.empty()) return "0";
  std::string out;
  const std::string root = "s^(1/" + std::to_string(q_) + ")";
  for (const auto& [ij, c] : grid_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]";
    out += " " + (ij.first == 0 ? std::string("1") : root + "^" + std::to_string(ij.first));
    out += "⊗" + (ij.second == 0 ? std::string("1") : root + "^" + std::to_string(ij.second));
  }
  return out;
}

json TensorLevelElement::to_json() const {
  json terms = json::array();
  for (const auto& [ij, c] : grid_) terms.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", c.to_json()}});
  return {{"level", level_}, {"terms", terms}};
}

TensorLevelElement TensorLevelElement::from_json(std::uint32_t p, std::uint32_t level, const json& j) {
  TensorLevelElement out(p, j.is_object() ? j.value("level", level) : level);
  const json& terms = j.is_object() ? j.at("terms") : j;
  for (const auto& t : terms) {
    auto i = t.at("i").get<std::uint32_t>(), jj = t.at("j").get<std::uint32_t>();
    if (i >= out.q_ || jj >= out.q_) throw Error(ErrorKind::Parse, "tensor basis index out of range");
    out.add(i, jj, FpRational::from_json(p, t.at("coeff")));
  }
  return out;
}

bool tensor_is_nilpotent(const TensorLevelElement& f) { return f.pow(f.q()).is_zero(); }

std::uint32_t tensor_nilpotency_index(const TensorLevelElement& f, std::uint32_t bound) {
  if (f.is_zero()) return 1;
  TensorLevelElement power = f;
  for (std::uint32_t k = 2; k <= bound; ++k) {
    power = power * f;
    if (power.is_zero()) return k;
  }
  return 0;
}

TensorLevelElement frobenius_root(const TensorLevelElement& f) {
  if (!tensor_is_nilpotent(f)) {
    throw Error(ErrorKind::NotNilpotent, "element is not nilpotent at level " + std::to_string(f.level()));
  }
  const std::uint32_t p = f.prime(), q = f.q();
  TensorLevelElement g(p, f.level() + 1);
  for (const auto& [ij, c] : f.grid()) {
    // c^{1/p} = a(σ) b(σ)^{p-1} / b(s) with σ = s^{1/p}; since Frobenius fixes F_p,
    // a(σ) has the same coefficient list as a(s).
    const auto& a = c.numerator();
    const auto& b = c.denominator();
    FpPoly prod = a * b.pow(p - 1);
    std::vector<std::vector<std::uint32_t>> parts(p);
    const auto& d = prod.coefficients();
    for (std::size_t m = 0; m < d.size(); ++m) {
      auto& part = parts[m % p];
      if (part.size() <= m / p) part.resize(m / p + 1, 0);
      part[m / p] = d[m];
    }
    for (std::uint32_t r = 0; r < p; ++r) {
      FpRational coeff(FpPoly(p, parts[r]), b);
      if (coeff.is_zero()) continue;
      // σ^r = z_{n+1}^{r q}; the basis tensor z_n^i ⊗ w_n^j has root z_{n+1}^i ⊗ w_{n+1}^j.
      g = g + TensorLevelElement::basis(p, f.level() + 1, ij.first + r * q, ij.second, coeff);
    }
  }
  if (!(g.pow(p) == f.include())) {
    throw Error(ErrorKind::RootDoesNotExist, "p-th power of the constructed root differs from the input");
  }
  return g;
}

}  // namespace torlab::rings
