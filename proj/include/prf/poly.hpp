#pragma once

#include "prf/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace prf {

/// Exponent vector positional w.r.t. a variable universe.
using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// A total, multiplicative well-order on monomials over an explicit variable
/// ranking (first = largest). Block orders compare the eliminated block first,
/// graded-reverse-lexicographically, then the kept block the same way.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, Block };

  static MonomialOrder lex(std::vector<std::string> ranking);
  static MonomialOrder grevlex(std::vector<std::string> ranking);
  static MonomialOrder block(std::vector<std::string> eliminated, std::vector<std::string> kept);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& ranking() const { return ranking_; }
  /// Number of variables in the eliminated block (Block only).
  std::size_t block_size() const { return block_size_; }

  /// Compares exponent vectors laid out in ranking() order (the vectors may be
  /// shorter than the ranking; missing entries are zero).
  int compare(const Exponents& a, const Exponents& b) const;

 private:
  MonomialOrder(Kind kind, std::vector<std::string> ranking, std::size_t block)
      : kind_(kind), ranking_(std::move(ranking)), block_size_(block) {}

  Kind kind_;
  std::vector<std::string> ranking_;
  std::size_t block_size_ = 0;
};

int compare_lex(const Exponents& a, const Exponents& b);
int compare_grevlex(const Exponents& a, const Exponents& b, std::size_t begin, std::size_t end);

class UniPoly;

/// Sparse multivariate polynomial over Q. Terms are keyed by exponent vectors
/// positional w.r.t. `vars()`; zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars);
  MultiPoly(std::vector<std::string> vars, TermMap terms);

  static MultiPoly constant(const Rational& c, std::vector<std::string> vars = {});
  static MultiPoly variable(const std::string& name, std::vector<std::string> vars = {});

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (0 when absent).
  Rational constant_term() const;
  std::uint32_t degree() const;
  std::uint32_t degree_in(const std::string& var) const;
  /// Variables that actually occur, in universe order.
  std::vector<std::string> support() const;
  bool depends_on(const std::string& var) const;

  /// Re-embeds into a different universe; every occurring variable must be present.
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned k) const;

  MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
  MultiPoly substitute(const std::string& var, const Rational& value) const;
  MultiPoly derivative(const std::string& var) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;
  double evaluate(const std::map<std::string, double>& point) const;

  /// Drops variables that do not occur (keeps relative order).
  MultiPoly compact() const;

  /// Converts to a univariate polynomial; throws unless support ⊆ {var}.
  UniPoly to_uni(const std::string& var) const;

  /// Leading term w.r.t. `order` (this must be nonzero).
  std::pair<Exponents, Rational> leading_term(const MonomialOrder& order) const;

  /// Multiplies by the positive rational making coefficients coprime integers.
  MultiPoly primitive() const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Universe merge: a's variables in order, then b's missing ones.
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Normal form of p modulo `divisors` by multivariate division.
MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> divisors, const MonomialOrder& order);

/// Exact quotient a / b; throws if b does not divide a.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);

/// det(∂fs[i]/∂vars[j]) by fraction-free Bareiss elimination.
MultiPoly partial_jacobian_det(std::span<const MultiPoly> fs, const std::vector<std::string>& vars);

/// Pads each term with powers of `fresh` up to the maximal degree in `wrt`.
MultiPoly homogenize(const MultiPoly& p, const std::string& fresh, const std::set<std::string>& wrt);

/// Dense univariate polynomial over Q, coefficients low-to-high.
class UniPoly {
 public:
  UniPoly() : var_("x") {}
  explicit UniPoly(std::string var, std::vector<Rational> coeffs = {});

  static UniPoly monomial(std::string var, const Rational& c, std::size_t degree);
  static UniPoly linear_root(std::string var, const Rational& root);

  const std::string& var() const { return var_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& lc() const;
  Rational coeff(std::size_t i) const;

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  int sign_at(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive() const;
  /// True when p(-x) = p(x).
  bool is_even() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  MultiPoly to_multi() const;
  UniPoly renamed(std::string var) const { return UniPoly(std::move(var), coeffs_); }
  std::string to_string() const;

 private:
  void trim();
  std::string var_;
  std::vector<Rational> coeffs_;
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), monic. Throws ZeroPolynomial on p == 0.
UniPoly square_free_part(const UniPoly& p);

/// Composition p(q) where q is a polynomial in another variable; the result
/// lives in q's variable.
UniPoly compose(const UniPoly& p, const UniPoly& q);

}  // namespace prf
