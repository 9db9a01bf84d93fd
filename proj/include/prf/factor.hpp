#pragma once

#include "prf/poly.hpp"

#include <vector>

namespace prf {

/// Irreducible factors over Q of the square-free part of p (Zassenhaus:
/// Cantor-Zassenhaus modulo a small prime, Hensel lifting, recombination).
/// Factors are primitive with positive leading coefficient, sorted by degree
/// then coefficients. Constants yield no factors.
std::vector<UniPoly> factor_square_free(const UniPoly& p);

/// "(f1)*(f2)*..." using factor_square_free; single factors unparenthesised.
std::string factored_string(const UniPoly& p);

}  // namespace prf
