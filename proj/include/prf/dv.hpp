#pragma once

#include "prf/execution.hpp"
#include "prf/groebner.hpp"
#include "prf/poly.hpp"

#include <string>
#include <vector>

namespace prf {

/// Equations f_i = 0 and strict conditions g_j > 0 over bound variables and
/// one parameter.
struct ParametricSystem {
  std::string parameter = "m";
  std::vector<std::string> bound_vars;
  std::vector<MultiPoly> equations;
  std::vector<MultiPoly> positives;

  /// Bound variables followed by the parameter.
  std::vector<std::string> universe() const;
  bool is_square() const { return equations.size() == bound_vars.size(); }
  /// Throws InvalidArgument on a malformed system (parameter bound, foreign
  /// variables, zero equations).
  void validate() const;
  /// Throws NonSquareSystem unless #equations == #bound variables.
  void require_square() const;

  /// Positives whose support is exactly the parameter (constants excluded).
  std::vector<UniPoly> parameter_conditions() const;
  /// Remaining positives.
  std::vector<MultiPoly> bound_conditions() const;

  std::string to_string() const;
};

struct DiscriminantVariety {
  std::vector<UniPoly> crit;
  std::vector<UniPoly> in;
  std::vector<UniPoly> inf;
  /// Square-free part of the product of all members (1 when there are none).
  UniPoly combined;
};

/// Critical values: ⟨f, det J, t·∏g − 1⟩ ∩ Q[m].
std::vector<UniPoly> o_crit(const ParametricSystem& sys, const GroebnerCaps& caps = {});

/// Inequality-boundary values: (⟨f, ∏g − u, u·t − 1⟩ ∩ Q[m, u]) at u = 0.
std::vector<UniPoly> o_in(const ParametricSystem& sys, const GroebnerCaps& caps = {});

/// Non-properness values: leading coefficients (in m) of the block-order basis
/// elements whose leading monomial is a pure power of a bound variable.
std::vector<UniPoly> o_inf(const ParametricSystem& sys, const GroebnerCaps& caps = {});

DiscriminantVariety discriminant_variety(const ParametricSystem& sys, const GroebnerCaps& caps = {},
                                         Execution exec = Execution::Parallel);

}  // namespace prf
