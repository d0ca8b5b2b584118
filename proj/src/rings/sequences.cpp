#include "torlab/rings/sequences.hpp"

#include <algorithm>
#include <numeric>

namespace torlab::rings {

EventualSequence::EventualSequence() : period_{Rational(0)} {}

EventualSequence::EventualSequence(std::vector<Rational> prefix, std::vector<Rational> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::InvalidArgument, "eventual sequence needs a nonempty period");
  canonicalize();
}

EventualSequence EventualSequence::constant(const Rational& c) { return {{}, {c}}; }

EventualSequence EventualSequence::shifted_unit() { return {{Rational(0)}, {Rational(1)}}; }

void EventualSequence::canonicalize() {
  // Shortest period: smallest divisor d of |period| with period[i] = period[i mod d].
  const std::size_t n = period_.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = period_[i] == period_[i - d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  // Absorb prefix entries that continue the periodic pattern backwards.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    prefix_.pop_back();
  }
}

Rational EventualSequence::at(std::size_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return period_[(n - prefix_.size()) % period_.size()];
}

bool EventualSequence::is_zero() const {
  auto zero = [](const Rational& x) { return sgn(x) == 0; };
  return std::all_of(prefix_.begin(), prefix_.end(), zero) && std::all_of(period_.begin(), period_.end(), zero);
}

bool EventualSequence::in_finite_support_ideal() const {
  return std::all_of(period_.begin(), period_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

EventualSequence EventualSequence::with_entry(std::size_t n, const Rational& value) const {
  std::vector<Rational> prefix;
  for (std::size_t i = 0; i <= std::max(n, prefix_.size() ? prefix_.size() - 1 : 0); ++i) prefix.push_back(at(i));
  prefix[n] = value;
  std::vector<Rational> period;
  for (std::size_t i = 0; i < period_.size(); ++i) period.push_back(at(prefix.size() + i));
  return {std::move(prefix), std::move(period)};
}

template <class Op>
EventualSequence EventualSequence::combine(const EventualSequence& a, const EventualSequence& b, Op op) {
  const std::size_t start = std::max(a.prefix_.size(), b.prefix_.size());
  const std::size_t len = std::lcm(a.period_.size(), b.period_.size());
  std::vector<Rational> prefix, period;
  for (std::size_t i = 0; i < start; ++i) prefix.push_back(op(a.at(i), b.at(i)));
  for (std::size_t i = 0; i < len; ++i) period.push_back(op(a.at(start + i), b.at(start + i)));
  return {std::move(prefix), std::move(period)};
}

EventualSequence EventualSequence::operator-() const {
  EventualSequence out = *this;
  for (auto& x : out.prefix_) x = -x;
  for (auto& x : out.period_) x = -x;
  return out;
}

EventualSequence operator+(const EventualSequence& a, const EventualSequence& b) {
  return EventualSequence::combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}

EventualSequence operator-(const EventualSequence& a, const EventualSequence& b) { return a + (-b); }

EventualSequence operator*(const EventualSequence& a, const EventualSequence& b) {
  return EventualSequence::combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}

EventualSequence EventualSequence::pow(std::uint32_t n) const {
  EventualSequence out = constant(1);
  for (std::uint32_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string EventualSequence::to_string() const {
  std::string out = "(";
  for (const auto& x : prefix_) out += x.get_str() + ", ";
  out += "[";
  for (std::size_t i = 0; i < period_.size(); ++i) out += (i ? ", " : "") + period_[i].get_str();
  return out + "]...)";
}

json EventualSequence::to_json() const {
  json prefix = json::array(), period = json::array();
  for (const auto& x : prefix_) prefix.push_back(x.get_str());
  for (const auto& x : period_) period.push_back(x.get_str());
  return {{"prefix", prefix}, {"period", period}};
}

EventualSequence EventualSequence::from_json(const json& j) {
  auto read = [](const json& arr) {
    std::vector<Rational> out;
    for (const auto& x : arr) out.push_back(parse_rational(x.get<std::string>()));
    return out;
  };
  std::vector<Rational> period;
  if (j.contains("period")) {
    period = read(j.at("period"));
  } else {
    period = {parse_rational(j.at("tail").get<std::string>())};
  }
  return {read(j.value("prefix", json::array())), std::move(period)};
}

// ---------------------------------------------------------------------------

FiniteProductElement::FiniteProductElement(std::vector<Rational> components) : c_(std::move(components)) {
  if (c_.empty()) throw Error(ErrorKind::InvalidArgument, "finite product needs at least one factor");
}

bool FiniteProductElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

FiniteProductElement FiniteProductElement::operator-() const {
  auto out = c_;
  for (auto& x : out) x = -x;
  return FiniteProductElement(std::move(out));
}

namespace {

void require_same_arity(const FiniteProductElement& a, const FiniteProductElement& b) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::RingMismatch, "finite products of different arity");
}

}  // namespace

FiniteProductElement operator+(const FiniteProductElement& a, const FiniteProductElement& b) {
  require_same_arity(a, b);
  auto out = a.c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.c_[i];
  return FiniteProductElement(std::move(out));
}

FiniteProductElement operator-(const FiniteProductElement& a, const FiniteProductElement& b) { return a + (-b); }

FiniteProductElement operator*(const FiniteProductElement& a, const FiniteProductElement& b) {
  require_same_arity(a, b);
  auto out = a.c_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= b.c_[i];
  return FiniteProductElement(std::move(out));
}

FiniteProductElement FiniteProductElement::pow(std::uint32_t n) const {
  FiniteProductElement out(std::vector<Rational>(c_.size(), Rational(1)));
  for (std::uint32_t i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string FiniteProductElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + c_[i].get_str();
  return out + ")";
}

json FiniteProductElement::to_json() const {
  json out = json::array();
  for (const auto& x : c_) out.push_back(x.get_str());
  return out;
}

FiniteProductElement FiniteProductElement::from_json(const json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
  return FiniteProductElement(std::move(c));
}

}  // namespace torlab::rings
