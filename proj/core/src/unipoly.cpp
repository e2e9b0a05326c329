#include "legms/unipoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace legms {

UniPoly::UniPoly(Rational constant, std::string var) : var_(std::move(var)) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : c_(std::move(coeffs)), var_(std::move(var)) {
  trim();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs, std::string var)
    : c_(coeffs), var_(std::move(var)) {
  trim();
}

UniPoly UniPoly::monomial(int k, Rational a, std::string var) {
  if (k < 0) throw precondition_error("UniPoly::monomial: negative exponent");
  std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
  c.back() = std::move(a);
  return UniPoly(std::move(c), std::move(var));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
  static const Rational kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

Rational UniPoly::leading() const {
  return c_.empty() ? Rational(0) : c_.back();
}

UniPoly UniPoly::with_var(std::string var) const {
  UniPoly p = *this;
  p.var_ = std::move(var);
  return p;
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return zero(var_);
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc = zero(inner.var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner;
    acc += UniPoly(*it, inner.var_);
  }
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result(Rational(1), var_);
  UniPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = (e >>= 1) ? base * base : base;
  }
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& a : p.c_) a = -a;
  return p;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.var_);
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c), a.var_);
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  if (s.is_zero()) return UniPoly::zero(p.var());
  UniPoly q = p;
  for (auto& a : q.c_) a *= s;
  return q;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw precondition_error("UniPoly::divmod: division by zero polynomial");
  UniPoly r = *this;
  if (degree() < d.degree()) return {zero(var_), r};
  std::vector<Rational> q(static_cast<size_t>(degree() - d.degree()) + 1, Rational(0));
  const Rational lc = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Rational f = r.leading() / lc;
    q[static_cast<size_t>(shift)] = f;
    // r -= f * x^shift * d
    for (int i = 0; i <= d.degree(); ++i)
      r.c_[static_cast<size_t>(i + shift)] -= f * d.c_[static_cast<size_t>(i)];
    r.trim();
  }
  return {UniPoly(std::move(q), var_), r};
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[static_cast<size_t>(i)];
    if (a.is_zero()) continue;
    if (!first) os << (a.sign() > 0 ? " + " : " - ");
    else if (a.sign() < 0) os << "-";
    first = false;
    const Rational mag = a.abs();
    if (i == 0 || !(mag == Rational(1))) os << mag.str();
    if (i > 0) {
      if (!(mag == Rational(1))) os << "*";
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

Rational content(const UniPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd(0), den_lcm(1);
  for (const auto& a : p.coeffs()) {
    if (a.is_zero()) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), a.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  return c.abs();
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / content(p)) * p;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly f = primitive_part(a), g = primitive_part(b);
  while (!g.is_zero()) {
    UniPoly r = f.divmod(g).second;
    f = std::move(g);
    g = primitive_part(r);
  }
  if (f.is_zero()) return f;
  if (f.leading().sign() < 0) f = -f;
  return f;
}

UniPoly wronskian(const UniPoly& f, const UniPoly& g) {
  return f * g.derivative() - f.derivative() * g;
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw precondition_error("resultant: zero polynomial");
  const int m = p.degree(), n = q.degree();
  if (m == 0) return p.leading().pow(n);
  if (n == 0) return q.leading().pow(m);
  // Sylvester matrix, fraction-destroying Gaussian elimination.
  const int dim = m + n;
  std::vector<std::vector<Rational>> a(static_cast<size_t>(dim),
                                       std::vector<Rational>(static_cast<size_t>(dim), Rational(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) a[r][r + i] = p.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = q.coeff(n - i);

  Rational det(1);
  for (int col = 0; col < dim; ++col) {
    int piv = -1;
    for (int r = col; r < dim; ++r)
      if (!a[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = Rational(1) / a[col][col];
    for (int r = col + 1; r < dim; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational f = a[r][col] * inv;
      for (int cc = col; cc < dim; ++cc) a[r][cc] -= f * a[col][cc];
    }
  }
  return det;
}

Rational discriminant(const UniPoly& p) {
  if (p.degree() < 1) throw precondition_error("discriminant: degree must be >= 1");
  const int d = p.degree();
  const UniPoly dp = p.derivative();
  Rational res = dp.is_zero() ? Rational(0) : resultant(p, dp);
  const long exp = static_cast<long>(d) * (d - 1) / 2;
  Rational sign = (exp % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * res / p.leading();
}

}  // namespace legms
