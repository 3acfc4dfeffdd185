#include "sdom/numeric.hpp"

#include <sstream>

#include "sdom/errors.hpp"

namespace sdom {

namespace mp = boost::multiprecision;

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  return Rational(Integer(num), Integer(den));
}

Real to_real(const Rational& q) {
  return Real(mp::numerator(q)) / Real(mp::denominator(q));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

namespace {

std::optional<Integer> integer_root(const Integer& x, unsigned degree) {
  if (x < 0) return std::nullopt;
  if (x < 2 || degree == 1) return x;
  // Float estimate, then correct by local search.
  Real est = mp::pow(Real(x), Real(1) / Real(degree));
  Integer guess(mp::round(est));
  for (Integer c = guess > 2 ? guess - 2 : Integer(0); c <= guess + 2; ++c) {
    Integer p = 1;
    for (unsigned i = 0; i < degree; ++i) p *= c;
    if (p == x) return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> exact_root(const Rational& q, unsigned degree) {
  if (degree == 0) throw DomainError("root of degree 0");
  if (q < 0) return std::nullopt;
  auto num = integer_root(mp::numerator(q), degree);
  auto den = integer_root(mp::denominator(q), degree);
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

std::int64_t floor_to_int(const Rational& q) {
  Integer num = mp::numerator(q);
  Integer den = mp::denominator(q);
  Integer quo = num / den;
  if (num % den != 0 && num < 0) quo -= 1;
  return quo.convert_to<std::int64_t>();
}

std::int64_t ceil_to_int(const Rational& q) { return -floor_to_int(-q); }

std::int64_t round_half_up_units(const Real& x, unsigned places) {
  Real scale = mp::pow(Real(10), places);
  Real shifted = mp::floor(x * scale + Real(0.5));
  return shifted.convert_to<std::int64_t>();
}

std::string format_fixed(const Real& x, unsigned places) {
  std::int64_t units = round_half_up_units(x, places);
  std::int64_t scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  std::string sign = units < 0 ? "-" : "";
  if (units < 0) units = -units;
  std::string frac = std::to_string(units % scale);
  frac.insert(0, places - frac.size(), '0');
  return sign + std::to_string(units / scale) + (places > 0 ? "." + frac : "");
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << mp::numerator(q);
  if (mp::denominator(q) != 1) os << '/' << mp::denominator(q);
  return os.str();
}

Value::Value(Rational q) : exact_(std::move(q)) { approx_ = to_real(*exact_); }

Value Value::irrational(Real x) {
  Value v;
  v.exact_.reset();
  v.approx_ = std::move(x);
  return v;
}

const Rational& Value::rational() const {
  if (!exact_) throw DomainError("value is not exactly rational");
  return *exact_;
}

double Value::to_double() const { return approx_.convert_to<double>(); }

std::int64_t Value::floor() const {
  if (exact_) return floor_to_int(*exact_);
  return mp::floor(approx_).convert_to<std::int64_t>();
}

std::int64_t Value::ceil() const {
  if (exact_) return ceil_to_int(*exact_);
  return mp::ceil(approx_).convert_to<std::int64_t>();
}

Value Value::scaled(const Rational& factor) const {
  if (exact_) return Value(*exact_ * factor);
  return irrational(approx_ * to_real(factor));
}

bool Value::less_than(const Value& other) const {
  if (exact_ && other.exact_) return *exact_ < *other.exact_;
  return approx_ < other.approx_;
}

bool Value::less_equal(const Value& other) const {
  if (exact_ && other.exact_) return *exact_ <= *other.exact_;
  return approx_ <= other.approx_;
}

std::string Value::str() const {
  if (exact_) return to_string(*exact_);
  return format_fixed(approx_, 10);
}

}  // namespace sdom
