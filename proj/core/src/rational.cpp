#include "legms/rational.hpp"

#include <cctype>
#include <ostream>

namespace legms {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
  if (sgn(den) == 0) throw precondition_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw precondition_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw precondition_error("Rational: 0 to a negative power");
    return Rational(0);
  }
  mpz_class n, d;
  const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), ae);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), ae);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

std::optional<Rational> Rational::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    i = 1;
  }
  std::string intpart, fracpart, denpart;
  bool seen_dot = false, seen_slash = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.') {
      if (seen_dot || seen_slash) return std::nullopt;
      seen_dot = true;
    } else if (c == '/') {
      if (seen_slash || seen_dot) return std::nullopt;
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? denpart : seen_dot ? fracpart : intpart) += c;
    } else {
      return std::nullopt;
    }
  }
  if (intpart.empty() && fracpart.empty()) return std::nullopt;
  if (seen_slash && denpart.empty()) return std::nullopt;
  Integer num(intpart.empty() ? "0" : intpart);
  if (seen_slash) {
    Integer den(denpart);
    if (sgn(den) == 0) return std::nullopt;
    Rational r(num, den);
    return neg ? -r : r;
  }
  Integer den(1);
  for (char c : fracpart) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  return neg ? -r : r;
}

Rational Rational::parse_or_throw(std::string_view s) {
  auto r = parse(s);
  if (!r) throw precondition_error("not a rational literal: '" + std::string(s) + "'");
  return *r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int max_frac) const {
  if (max_frac < 0) max_frac = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(max_frac));
  // round half to even on |value| * 10^max_frac
  Integer n = num() * scale, d = den(), q, r;
  const bool neg = sgn(n) < 0;
  if (neg) n = -n;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  const Integer twice = r * 2;
  if (twice > d || (twice == d && mpz_odd_p(q.get_mpz_t()))) q += 1;
  std::string digits = q.get_str();
  if (static_cast<int>(digits.size()) <= max_frac)
    digits.insert(0, max_frac + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - max_frac);
  std::string frac = digits.substr(digits.size() - max_frac);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  if (neg && (out.find_first_not_of("0.") != std::string::npos)) out.insert(0, "-");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace legms
