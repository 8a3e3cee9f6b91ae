#pragma once

#include <vector>

#include "pib4/poly.hpp"

namespace pib4 {

struct PolyFactorization {
    BigInt content;               // signed; content * product(factors) == input
    std::vector<UniPoly> factors; // irreducible over Q, integer coefficients, positive lc
};

/// Factor a nonzero integer polynomial of degree <= 4 into irreducible factors:
/// rational-root candidates for the linear part, bounded coefficient matching
/// for quadratic splittings.
PolyFactorization factor_univariate_deg_le4(const UniPoly& p);

bool is_irreducible_deg_le4(const UniPoly& p);

}  // namespace pib4
