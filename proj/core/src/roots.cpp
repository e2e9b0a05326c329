#include "legms/roots.hpp"

#include <algorithm>

namespace legms {
namespace {

// -rem(f, g) up to a positive scalar, primitive.  Uses the pseudo-remainder
// so all intermediate arithmetic stays on integer polynomials.
UniPoly neg_prem_primitive(const UniPoly& f, const UniPoly& g) {
  // lc(g)^(deg f - deg g + 1) * f = q*g + r  =>  r = lc^k * (f mod g).
  const int k = f.degree() - g.degree() + 1;
  const Rational lck = g.leading().pow(k);
  UniPoly r = (lck * f).divmod(g).second;   // exact: still integer-free of divisions by non-lc
  if (r.is_zero()) return r;
  // r is lck * (f mod g); we need -(f mod g) up to positive scale.
  if (lck.sign() < 0) r = -r;
  r = primitive_part(r);
  return -r;
}

int sign_at(const UniPoly& p, const Rational& x) { return p.eval(x).sign(); }

int sign_at_infinity(const UniPoly& p, bool minus) {
  if (p.is_zero()) return 0;
  int s = p.leading().sign();
  if (minus && p.degree() % 2 == 1) s = -s;
  return s;
}

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& squarefree) {
  UniPoly p0 = primitive_part(squarefree);
  if (p0.is_zero()) throw precondition_error("SturmChain: zero polynomial");
  chain_.push_back(p0);
  if (p0.degree() == 0) return;
  chain_.push_back(primitive_part(p0.derivative()));
  while (chain_.back().degree() > 0) {
    UniPoly next = neg_prem_primitive(chain_[chain_.size() - 2], chain_.back());
    if (next.is_zero()) break;  // input not squarefree; chain still usable for its squarefree part
    chain_.push_back(std::move(next));
  }
}

int SturmChain::variations_at(const std::optional<Rational>& x, bool minus_infinity) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_)
    signs.push_back(x ? sign_at(p, *x) : sign_at_infinity(p, minus_infinity));
  return count_variations(signs);
}

int SturmChain::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
  // Zero entries are dropped when counting variations, which makes
  // V(lo) - V(hi) count roots in the half-open interval (lo, hi] even when
  // an endpoint is itself a root.
  return variations_at(lo, /*minus_infinity=*/true) - variations_at(hi, /*minus_infinity=*/false);
}

int sturm_count(const UniPoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  if (p.is_zero()) throw precondition_error("sturm_count: zero polynomial");
  if (lo && hi && !(*lo < *hi)) return 0;
  SturmChain chain(squarefree_part(p));
  return chain.count(lo, hi);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw precondition_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return UniPoly(Rational(1), p.var());
  UniPoly g = gcd(p, p.derivative());
  UniPoly q = p.divmod(g).first;
  q = primitive_part(q);
  if (q.leading().sign() < 0) q = -q;
  return q;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw precondition_error("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  // Yun's algorithm.
  UniPoly g = gcd(p, p.derivative());
  UniPoly c = p.divmod(g).first;
  UniPoly d = p.derivative().divmod(g).first - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UniPoly a = gcd(c, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    c = c.divmod(a).first;
    d = d.divmod(a).first - c.derivative();
    ++i;
  }
  return out;
}

int real_root_count_with_multiplicity(const UniPoly& p) {
  if (p.is_zero())
    throw precondition_error("real_root_count_with_multiplicity: zero polynomial");
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    total += mult * sturm_count(factor);
  return total;
}

Rational cauchy_root_bound(const UniPoly& p) {
  if (p.is_zero() || p.degree() == 0) return Rational(1);
  Rational maxratio(0);
  const Rational lc = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = p.coeff(i).abs() / lc;
    if (maxratio < r) maxratio = r;
  }
  return Rational(1) + maxratio;
}

namespace {

// Bisection isolator.  All interval bookkeeping is on OPEN intervals whose
// root counts are tracked explicitly, so a bisection point landing exactly on
// a root is recorded once and never recounted.
struct Isolator {
  const SturmChain& chain;
  const UniPoly& q;  // squarefree part
  Rational precision;
  RootIsolation out;

  bool is_root(const Rational& x) const { return q.eval(x).is_zero(); }

  static int multiplicity_at(const UniPoly& p, const Rational& r) {
    int m = 0;
    UniPoly d = p;
    while (!d.is_zero() && d.eval(r).is_zero()) {
      ++m;
      d = d.derivative();
    }
    return m;
  }

  // Exactly one root of q strictly inside (lo, hi).  Shrinks until the
  // bracket is narrow enough and its right endpoint is not itself a root
  // (it can be one recorded earlier, and the reported interval is (lo, hi]).
  void refine(Rational lo, Rational hi) {
    while (hi - lo > precision || is_root(hi)) {
      const Rational mid = (lo + hi) / Rational(2);
      if (is_root(mid)) {
        out.exact_roots.push_back({mid, 1});
        return;
      }
      if (chain.count(lo, mid) == 1)
        hi = mid;
      else
        lo = mid;
    }
    out.intervals.push_back({lo, hi, 1});
  }

  // n roots of q strictly inside (lo, hi).
  void split(const Rational& lo, const Rational& hi, int n) {
    if (n <= 0) return;
    if (n == 1) {
      refine(lo, hi);
      return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    int mid_root = 0;
    if (is_root(mid)) {
      out.exact_roots.push_back({mid, 1});
      mid_root = 1;
    }
    const int nl = chain.count(lo, mid) - mid_root;
    split(lo, mid, nl);
    split(mid, hi, n - nl - mid_root);
  }
};

}  // namespace

RootIsolation isolate_real_roots(const UniPoly& p, const Rational& precision) {
  if (p.is_zero()) throw precondition_error("isolate_real_roots: zero polynomial");
  if (!(Rational(0) < precision)) throw precondition_error("isolate_real_roots: precision must be > 0");
  RootIsolation out;
  if (p.degree() == 0) return out;

  const UniPoly q = squarefree_part(p);
  SturmChain chain(q);
  const Rational bound = cauchy_root_bound(q);  // strict: every root in (-bound, bound)
  const int total = chain.count(-bound, bound);

  Isolator iso{chain, q, precision, {}};
  iso.split(-bound, bound, total);
  out = std::move(iso.out);

  const auto decomp = squarefree_decomposition(p);
  for (auto& er : out.exact_roots) er.multiplicity = Isolator::multiplicity_at(p, er.root);
  for (auto& iv : out.intervals) {
    for (const auto& [factor, mult] : decomp) {
      if (sturm_count(factor, iv.lo, iv.hi) == 1) {
        iv.multiplicity = mult;
        break;
      }
    }
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const auto& a, const auto& b) { return a.lo < b.lo; });
  std::sort(out.exact_roots.begin(), out.exact_roots.end(),
            [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

namespace {

bool semidefinite(const UniPoly& p, int wanted_sign) {
  if (p.is_zero()) return true;
  if (p.degree() == 0) {
    const int s = p.leading().sign();
    return s == 0 || s == wanted_sign;
  }
  if (p.degree() % 2 != 0) return false;
  if (p.leading().sign() != wanted_sign) return false;
  // sign can only cross zero at a real root of odd multiplicity
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    if (mult % 2 == 1 && sturm_count(factor) > 0) return false;
  }
  return true;
}

}  // namespace

bool nonpositive_on_reals(const UniPoly& p) { return semidefinite(p, -1); }
bool nonnegative_on_reals(const UniPoly& p) { return semidefinite(p, +1); }

}  // namespace legms
