#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "legms/errors.hpp"

namespace legms {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with positive
/// denominator.  All arithmetic is exact; there is no rounding anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}        // NOLINT: implicit by design
  Rational(long n) : v_(n) {}       // NOLINT
  Rational(const Integer& n) : v_(n) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  Rational(long num, long den);
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses "p/q", an integer literal, or a finite decimal ("-3.25") exactly.
  static std::optional<Rational> parse(std::string_view s);
  static Rational parse_or_throw(std::string_view s);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const;
  Integer floor() const;
  Integer ceil() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Exact form: "p/q", or just "p" for integers.
  std::string str() const;
  /// Display-only decimal rendering, rounded (half-to-even) at `max_frac`
  /// fractional digits, trailing zeros trimmed.
  std::string decimal(int max_frac = 12) const;
  double to_double() const { return v_.get_d(); }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace legms
