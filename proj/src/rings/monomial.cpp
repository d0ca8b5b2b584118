#include "torlab/rings/monomial.hpp"

#include <algorithm>

namespace torlab::rings {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(v, e);
    }
  }
}

Monomial Monomial::variable(std::uint32_t var, std::uint32_t exp) { return Monomial({{var, exp}}); }

Monomial Monomial::from_exponents(const std::vector<std::int64_t>& exps) {
  std::vector<Factor> f;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw Error(ErrorKind::InvalidArgument, "negative monomial exponent");
    if (exps[i] > 0) f.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(exps[i]));
  }
  return Monomial(std::move(f));
}

std::uint32_t Monomial::exponent(std::uint32_t var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{var, 0});
  return it != factors_.end() && it->first == var ? it->second : 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::optional<std::uint32_t> Monomial::max_variable() const {
  if (factors_.empty()) return std::nullopt;
  return factors_.back().first;
}

std::vector<std::int64_t> Monomial::exponents(std::size_t nvars) const {
  std::vector<std::int64_t> out(nvars, 0);
  for (const auto& [v, e] : factors_) {
    if (v >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index beyond exponent vector");
    out[v] = e;
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return other.exponent(f.first) >= f.second; });
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw Error(ErrorKind::InvalidArgument, "monomial does not divide");
  std::vector<Factor> out;
  for (const auto& [v, e] : factors_) out.emplace_back(v, e - divisor.exponent(v));
  return Monomial(std::move(out));
}

Monomial Monomial::pow(std::uint32_t n) const {
  std::vector<Factor> out = factors_;
  for (auto& f : out) f.second *= n;
  return Monomial(std::move(out));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return Monomial(std::move(all));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> out;
  for (const auto& [v, e] : a.factors_) {
    if (auto f = std::min(e, b.exponent(v)); f > 0) out.emplace_back(v, f);
  }
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Factor> out = a.factors_;
  for (const auto& [v, e] : b.factors_) {
    if (e > a.exponent(v)) out.emplace_back(v, e - a.exponent(v));
  }
  return Monomial(std::move(out));
}

std::string Monomial::to_string(const std::string& prefix, const std::vector<std::string>& names) const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += v < names.size() ? names[v] : prefix + "_" + std::to_string(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

json Monomial::to_json() const {
  json out = json::array();
  for (const auto& [v, e] : factors_) out.push_back({{"var", v}, {"exp", e}});
  return out;
}

Monomial Monomial::from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "monomial must be an array of {var, exp}");
  std::vector<Factor> f;
  for (const auto& x : j) {
    if (!x.contains("var")) throw Error(ErrorKind::Parse, "monomial factor without var");
    f.emplace_back(x.at("var").get<std::uint32_t>(), x.value("exp", 1U));
  }
  return Monomial(std::move(f));
}

bool SchemaRule::kills(const Monomial& m) const {
  switch (kind) {
    case Schema::DistinctPairs: {
      int count = 0;
      for (const auto& f : m.factors()) count += range.contains(f.first) ? 1 : 0;
      return count >= 2;
    }
    case Schema::AllPairs: {
      std::uint64_t deg = 0;
      for (const auto& f : m.factors()) deg += range.contains(f.first) ? f.second : 0;
      return deg >= 2;
    }
    case Schema::IndexedPower:
      for (const auto& [v, e] : m.factors()) {
        if (!range.contains(v)) continue;
        std::int64_t bound = std::max<std::int64_t>(1, static_cast<std::int64_t>(v) + offset);
        if (static_cast<std::int64_t>(e) >= bound) return true;
      }
      return false;
  }
  return false;
}

RewriteSystem::RewriteSystem(std::vector<Monomial> monomials, std::vector<SchemaRule> schemas)
    : monomials_(std::move(monomials)), schemas_(std::move(schemas)) {
  for (const auto& m : monomials_) {
    if (m.is_one()) throw Error(ErrorKind::InvalidArgument, "rewrite rule kills the unit");
  }
}

std::vector<Monomial> RewriteSystem::instances(std::uint32_t max_var) const {
  std::vector<Monomial> all;
  for (const auto& m : monomials_) {
    auto top = m.max_variable();
    if (!top || *top <= max_var) all.push_back(m);
  }
  for (const auto& rule : schemas_) {
    const std::uint32_t hi = rule.range.hi ? std::min(*rule.range.hi, max_var) : max_var;
    for (std::uint32_t i = rule.range.lo; i <= hi; ++i) {
      switch (rule.kind) {
        case Schema::DistinctPairs:
        case Schema::AllPairs:
          for (std::uint32_t j = (rule.kind == Schema::AllPairs ? i : i + 1); j <= hi; ++j) {
            all.push_back(Monomial::variable(i) * Monomial::variable(j));
          }
          break;
        case Schema::IndexedPower: {
          auto e = std::max<std::int64_t>(1, static_cast<std::int64_t>(i) + rule.offset);
          all.push_back(Monomial::variable(i, static_cast<std::uint32_t>(e)));
          break;
        }
      }
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Monomial> minimal;
  for (const auto& m : all) {
    bool redundant = std::any_of(all.begin(), all.end(), [&](const Monomial& g) { return g != m && g.divides(m); });
    if (!redundant) minimal.push_back(m);
  }
  return minimal;
}

bool RewriteSystem::kills(const Monomial& m) const {
  for (const auto& g : monomials_) {
    if (g.divides(m)) return true;
  }
  for (const auto& s : schemas_) {
    if (s.kills(m)) return true;
  }
  return false;
}

namespace {

const char* schema_name(Schema s) {
  switch (s) {
    case Schema::DistinctPairs: return "distinct_pairs";
    case Schema::AllPairs: return "all_pairs";
    case Schema::IndexedPower: return "indexed_power_offset";
  }
  return "?";
}

}  // namespace

json RewriteSystem::to_json() const {
  json rules = json::array();
  for (const auto& m : monomials_) rules.push_back(m.to_json());
  json schemas = json::array();
  for (const auto& s : schemas_) {
    json j = {{"schema", schema_name(s.kind)}, {"from", s.range.lo}};
    if (s.range.hi) j["to"] = *s.range.hi;
    if (s.kind == Schema::IndexedPower) j["offset"] = s.offset;
    schemas.push_back(std::move(j));
  }
  return {{"monomials", rules}, {"schemas", schemas}};
}

RewriteSystem RewriteSystem::from_json(const json& j) {
  std::vector<Monomial> monomials;
  for (const auto& m : j.value("monomials", json::array())) monomials.push_back(Monomial::from_json(m));
  std::vector<SchemaRule> schemas;
  for (const auto& s : j.value("schemas", json::array())) {
    SchemaRule rule;
    auto name = s.at("schema").get<std::string>();
    if (name == "distinct_pairs") {
      rule.kind = Schema::DistinctPairs;
    } else if (name == "all_pairs") {
      rule.kind = Schema::AllPairs;
    } else if (name == "indexed_power_offset") {
      rule.kind = Schema::IndexedPower;
      rule.offset = s.value("offset", std::int64_t{1});
    } else {
      throw Error(ErrorKind::Parse, "unknown rewrite schema '" + name + "'");
    }
    rule.range.lo = s.value("from", 0U);
    if (s.contains("to")) rule.range.hi = s.at("to").get<std::uint32_t>();
    schemas.push_back(rule);
  }
  return {std::move(monomials), std::move(schemas)};
}

}  // namespace torlab::rings
