#pragma once

#include "prf/poly.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace prf {

/// Sturm sequence of a square-free polynomial with primitive integer members.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  /// Sign variations at x (zeros skipped).
  int variations(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Number of distinct roots in (lo, hi]; endpoints may be roots.
  int count_half_open(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

  int sign_of_first(const Rational& x) const;

 private:
  std::vector<std::vector<Integer>> seq_;
};

/// Sign of an integer polynomial (coefficients low to high) at a rational.
int sign_at(const std::vector<Integer>& coeffs, const Rational& x);

/// Roots of square-free p in the open interval (lo, hi). Throws EndpointIsRoot
/// if p(lo) == 0 or p(hi) == 0.
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// A real root of a square-free, primitive integer polynomial together with an
/// isolating interval. Rational values are kept exactly (linear defining
/// polynomial). Irrational values keep an open interval (lo, hi) whose
/// endpoints are not roots. Values are immutable; refinement returns a copy.
class RealAlgebraicNumber {
 public:
  RealAlgebraicNumber() : RealAlgebraicNumber(Rational(0)) {}
  /* implicit */ RealAlgebraicNumber(const Rational& q);

  /// The unique root of `defining` in (lo, hi]; throws InvalidArgument unless
  /// there is exactly one.
  RealAlgebraicNumber(const UniPoly& defining, const Rational& lo, const Rational& hi);

  /// k-th (1-based) real root of p.
  static RealAlgebraicNumber root_of(const UniPoly& p, int k);

  const UniPoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_rational() const { return rational_.has_value(); }
  /// Throws InvalidArgument if irrational.
  const Rational& rational_value() const;

  /// Lower / upper rational bounds (both equal the value for rationals).
  const Rational& lower_bound() const { return rational_ ? *rational_ : lo_; }
  const Rational& upper_bound() const { return rational_ ? *rational_ : hi_; }

  RealAlgebraicNumber refined(const Rational& width) const;
  /// One bisection step (no-op for rationals).
  RealAlgebraicNumber bisected() const;

  double to_double() const;
  /// Decimal rounded to `digits` fractional digits.
  std::string to_decimal(int digits = 6) const;
  /// 1-based index among the real roots of defining().
  int root_index() const;

  /// "RootOf(<poly>, k)" or the rational.
  std::string to_string() const;

  /// Stand-alone constructor used by isolation: interval already verified.
  /// known_irrational skips the search for a rational root in the interval.
  static RealAlgebraicNumber trusted(UniPoly defining, Rational lo, Rational hi,
                                     std::shared_ptr<const SturmSequence> sturm, bool known_irrational = false);

 private:
  struct Trusted {};
  RealAlgebraicNumber(Trusted, UniPoly defining, Rational lo, Rational hi, std::shared_ptr<const SturmSequence> sturm,
                      bool known_irrational = false);
  void settle(bool known_irrational = false);

  UniPoly defining_;
  Rational lo_, hi_;
  std::optional<Rational> rational_;
  std::shared_ptr<const SturmSequence> sturm_;
};

/// Sample points on the parameter line carry either tag; the rational tag is
/// the exact fast path of RealAlgebraicNumber.
using CellPoint = RealAlgebraicNumber;

/// All real roots of p (made square-free), increasing, pairwise disjoint
/// intervals; rational roots exact. Throws ZeroPolynomial.
std::vector<RealAlgebraicNumber> isolate_roots(const UniPoly& p);

RealAlgebraicNumber refine(const RealAlgebraicNumber& a, const Rational& width);

std::strong_ordering compare(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);

inline bool operator==(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b) {
  return compare(a, b);
}

/// Exact sign (-1, 0, 1) of p at a.
int sign_at(const UniPoly& p, const RealAlgebraicNumber& a);

/// A rational strictly between a < b: the midpoint of a's upper and b's lower
/// bound after refining the two to disjoint intervals.
Rational rational_between(const RealAlgebraicNumber& a, const RealAlgebraicNumber& b);

/// Radical rendering for roots of quadratics and biquadratics (e.g.
/// "1+sqrt(2)", "sqrt(3)/2", "sqrt(5/2*(3-2*sqrt(2)))"), rationals as "p/q";
/// nullopt otherwise.
std::optional<std::string> radical_form(const RealAlgebraicNumber& a);

/// radical_form when available, else "RootOf(<poly>, k)".
std::string display(const RealAlgebraicNumber& a);

/// Cauchy root bound rounded up to a power of two.
Rational root_bound(const UniPoly& p);

}  // namespace prf
