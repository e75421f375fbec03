#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rquant {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit from integers is intended
  Rational(int value) : value_(value) {}   // NOLINT
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// "p/q", or "p" when the denominator is one.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

[[nodiscard]] Rational inverse(const Rational& r);

}  // namespace rquant
