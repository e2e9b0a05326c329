#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "legms/unipoly.hpp"

namespace legms {

/// Sturm chain of a squarefree polynomial, with pseudo-remainders kept
/// primitive so coefficients stay small.  Counts distinct real roots on
/// half-open intervals (lo, hi]; an absent endpoint means -inf / +inf.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& squarefree);

  int variations_at(const std::optional<Rational>& x, bool minus_infinity) const;
  /// Number of distinct real roots in (lo, hi].
  int count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

/// Distinct real roots of p in (lo, hi]; nullopt endpoints are infinite.
/// Rejects the zero polynomial.
int sturm_count(const UniPoly& p,
                const std::optional<Rational>& lo = std::nullopt,
                const std::optional<Rational>& hi = std::nullopt);

/// p / gcd(p, p'), primitive with positive leading coefficient.
UniPoly squarefree_part(const UniPoly& p);

/// Yun decomposition: pairwise-coprime squarefree factors a_i with
/// p = c * prod a_i^{m_i}, multiplicities strictly increasing.
/// Constant factors are dropped.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Total number of real roots counted with multiplicity.  Rejects zero.
int real_root_count_with_multiplicity(const UniPoly& p);

/// 1 + max |a_i| / |lc|; every real root lies in (-bound, bound).
Rational cauchy_root_bound(const UniPoly& p);

/// Result of exact real-root isolation.
struct RootIsolation {
  struct Interval {
    Rational lo, hi;  // open-left, closed-right bracket containing one root
    int multiplicity = 1;
  };
  struct ExactRoot {
    Rational root;
    int multiplicity = 1;
  };
  std::vector<Interval> intervals;     // roots not identified exactly
  std::vector<ExactRoot> exact_roots;  // rational roots found during bisection
  int total_distinct() const { return static_cast<int>(intervals.size() + exact_roots.size()); }
};

/// Disjoint rational intervals of width <= precision, each containing exactly
/// one distinct real root of p, with multiplicities.  Rational roots hit by
/// the bisection are reported exactly.  Rejects zero; precision must be > 0.
RootIsolation isolate_real_roots(const UniPoly& p, const Rational& precision);

/// Exact semidefiniteness on all of R (no sampling): decided from the leading
/// coefficient, degree parity, and odd-multiplicity real roots.
bool nonpositive_on_reals(const UniPoly& p);
bool nonnegative_on_reals(const UniPoly& p);

}  // namespace legms
