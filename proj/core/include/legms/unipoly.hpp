#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "legms/rational.hpp"

namespace legms {

/// Univariate polynomial with exact rational coefficients, stored densely by
/// exponent.  The zero polynomial has an empty coefficient vector and
/// degree() == -1 (standing in for "minus infinity").  The variable name is
/// for display only and plays no role in arithmetic or comparison.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational constant, std::string var = "x");
  UniPoly(std::vector<Rational> coeffs, std::string var = "x");
  UniPoly(std::initializer_list<Rational> coeffs, std::string var = "x");

  static UniPoly zero(std::string var = "x") { return UniPoly(std::vector<Rational>{}, std::move(var)); }
  static UniPoly monomial(int k, Rational a = Rational(1), std::string var = "x");
  /// The identity polynomial x.
  static UniPoly variable(std::string var = "x") { return monomial(1, Rational(1), std::move(var)); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i (zero outside the stored range).
  const Rational& coeff(int i) const;
  Rational leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  const std::string& var() const { return var_; }
  UniPoly with_var(std::string var) const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(unsigned e) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly operator-() const;
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);

  /// Mathematical equality; variable names are ignored.
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Exact division with remainder: *this = q * d + r, deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
  std::string var_ = "x";
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// GCD over Q, normalized primitive with positive leading coefficient;
/// gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Positive integer content of the primitive integer representative.
Rational content(const UniPoly& p);
/// p scaled to integer coefficients with content 1; sign of the leading
/// coefficient is preserved.
UniPoly primitive_part(const UniPoly& p);

/// fg' - f'g.
UniPoly wronskian(const UniPoly& f, const UniPoly& g);

/// Sylvester-matrix resultant.  Rejects zero polynomials.
Rational resultant(const UniPoly& p, const UniPoly& q);
/// (-1)^{d(d-1)/2} res(p, p') / lc(p); deg p >= 1 required.
Rational discriminant(const UniPoly& p);

}  // namespace legms
