#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace sdom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits (about 166 bits).
using Real = boost::multiprecision::cpp_bin_float_50;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Real to_real(const Rational& q);

/// Rational power with a non-negative integer exponent.
Rational pow(const Rational& base, unsigned exponent);

/// Exact root of a non-negative rational when it exists, e.g. 4/9 with
/// degree 2 gives 2/3.
std::optional<Rational> exact_root(const Rational& q, unsigned degree);

std::int64_t floor_to_int(const Rational& q);
std::int64_t ceil_to_int(const Rational& q);

/// Half-up rounding to `places` decimals, returned as the integer count
/// of units 10^-places.
std::int64_t round_half_up_units(const Real& x, unsigned places);
std::string format_fixed(const Real& x, unsigned places);

/// A number that is exact whenever the underlying formula is rational and
/// otherwise a high-precision real.  Comparisons against integers never
/// use the double approximation.
class Value {
 public:
  Value() : Value(Rational(0)) {}
  Value(Rational q);  // NOLINT(google-explicit-constructor)
  static Value irrational(Real x);

  bool is_exact() const noexcept { return exact_.has_value(); }
  /// Throws DomainError when the value is not exact.
  const Rational& rational() const;
  const Real& real() const noexcept { return approx_; }
  double to_double() const;

  std::int64_t floor() const;
  std::int64_t ceil() const;

  Value scaled(const Rational& factor) const;
  Value scaled(std::size_t factor) const { return scaled(Rational(factor)); }

  /// Exact when both sides are exact.
  bool less_than(const Value& other) const;
  bool less_equal(const Value& other) const;

  /// "5/9" for exact values, a 10-decimal rendering otherwise.
  std::string str() const;

 private:
  std::optional<Rational> exact_;
  Real approx_;
};

std::string to_string(const Rational& q);

}  // namespace sdom
