#pragma once

#include "prf/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace prf {

/// Limits after which buchberger() gives up with ResourceBudgetExceeded.
struct GroebnerCaps {
  std::size_t max_pair_reductions = 100000;
  std::uint32_t max_degree = 60;
  double time_limit_seconds = 60.0;
};

struct Ideal {
  std::vector<MultiPoly> generators;
  /// Variable universe; occurring variables not listed here are appended.
  std::vector<std::string> vars;

  Ideal() = default;
  Ideal(std::vector<MultiPoly> gens, std::vector<std::string> universe = {});
};

namespace detail {
struct IntBasis;
}

/// Reduced Gröbner basis: monic, inter-reduced, sorted by increasing leading
/// monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<MultiPoly> basis, MonomialOrder order, std::shared_ptr<const detail::IntBasis> engine);

  const std::vector<MultiPoly>& basis() const { return basis_; }
  const MonomialOrder& order() const { return order_; }
  bool is_unit() const;

  /// Leading monomial of basis element i, positional w.r.t. order().ranking().
  Exponents leading_monomial(std::size_t i) const;

  MultiPoly normal_form(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return normal_form(p).is_zero(); }

  /// Every variable of the universe has a pure power among the leading
  /// monomials (finitely many complex solutions). False for the unit ideal.
  bool is_zero_dimensional() const;

  /// Monic minimal polynomial (coefficients low to high) of multiplication by
  /// f on the quotient ring: its roots are the values of f at the solutions.
  /// Throws NotZeroDimensional.
  std::vector<Rational> minimal_polynomial(const MultiPoly& f) const;

 private:
  std::vector<MultiPoly> basis_;
  MonomialOrder order_;
  std::shared_ptr<const detail::IntBasis> engine_;
};

/// Buchberger with the normal selection strategy (smallest lcm degree, then
/// smallest lcm in the order, then pair index) and the Gebauer-Möller update,
/// which applies both Buchberger criteria.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const GroebnerCaps& caps = {});

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& order);

/// Generators of I ∩ Q[keep]. A single kept variable of a zero-dimensional
/// ideal gets its minimal polynomial over a grevlex basis; otherwise a
/// block-order basis (eliminated ≻ keep) is computed.
std::vector<MultiPoly> elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep,
                                         const GroebnerCaps& caps = {});

/// I : h^∞ computed as ⟨I, t·h − 1⟩ ∩ Q[universe] with a fresh t.
Ideal saturate(const Ideal& ideal, const MultiPoly& h, const GroebnerCaps& caps = {});

/// Substitutes var = 0 everywhere and drops the zeros.
std::vector<MultiPoly> specialize_to_zero(const std::vector<MultiPoly>& gens, const std::string& var);

/// Fresh identifier not present in `taken`, derived from `base`.
std::string fresh_variable(const std::string& base, const std::vector<std::string>& taken);

}  // namespace prf
