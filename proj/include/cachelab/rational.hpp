#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cachelab {

// Exact rational arithmetic on 64-bit numerator/denominator, always stored in
// reduced form with a positive denominator. Intermediates are computed in
// 128-bit integers; a result that does not fit back into 64 bits throws
// std::overflow_error instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // "p/q", or just "p" when the value is an integer.
  std::string to_string() const;

  // Locale-independent decimal rendering with the given number of significant
  // digits (CLI output only; comparisons always stay exact).
  std::string to_decimal(int significant_digits = 12) const;

  double to_double() const;

  // Accepts "p/q", plain integers, and terminating decimals ("2.12" -> 53/25).
  static Rational parse(std::string_view text);

 private:
  static Rational make(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& r);

}  // namespace cachelab
