#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "legms/unipoly.hpp"

namespace legms {

/// Bivariate polynomial with exact rational coefficients, stored sparsely as
/// a map from exponent pairs (i, j) to coefficients.  Zero coefficients are
/// never stored.  Variable names are display-only.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;

  BiPoly() = default;
  explicit BiPoly(std::array<std::string, 2> vars) : vars_(std::move(vars)) {}

  static BiPoly constant(Rational c, std::array<std::string, 2> vars = {"x", "y"});

  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i, int j) const;
  void set_coeff(int i, int j, Rational a);
  void add_coeff(int i, int j, const Rational& a);
  const std::map<Exponents, Rational>& terms() const { return c_; }

  const std::array<std::string, 2>& vars() const { return vars_; }
  void set_vars(std::array<std::string, 2> vars) { vars_ = std::move(vars); }

  int degree_x() const;
  int degree_y() const;
  int total_degree() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& s, const BiPoly& p);

  /// Mathematical equality; variable names are ignored.
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

  BiPoly d_dx() const;
  BiPoly d_dy() const;
  Rational eval(const Rational& x, const Rational& y) const;

  /// Substitute univariate polynomials (in a common variable) for x and y.
  UniPoly substituted(const UniPoly& for_x, const UniPoly& for_y) const;
  /// Restrict y to a polynomial in x, keeping x.
  UniPoly substitute_y(const UniPoly& y_of_x) const;
  /// Restrict x to a fixed value, producing a polynomial in y.
  UniPoly at_x(const Rational& x) const;

  std::string str() const;

 private:
  std::map<Exponents, Rational> c_;
  std::array<std::string, 2> vars_ = {"x", "y"};
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace legms
