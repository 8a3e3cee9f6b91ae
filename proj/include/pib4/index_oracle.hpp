#pragma once

#include "pib4/reduction.hpp"

namespace pib4 {

struct IndexVerdict {
    bool generates = false;            // alpha generates the quartic field
    std::optional<BigInt> index;       // defined when generates
};

/// Degree-4 characteristic polynomial of c1 xi + c2 xi^2 + c3 xi^3 over Q,
/// computed as the resultant in s of f(s) and T - (c1 s + c2 s^2 + c3 s^3).
/// Monic with integer coefficients; the minimal polynomial divides it.
UniPoly element_minpoly(const QuarticPoly& f, const ElementTriple& e);

/// Index via the discriminant ratio: index^2 = disc(charpoly) / disc(f).
/// For monogenic f this is I(alpha); in general it is the index of Z[alpha]
/// relative to Z[xi].
IndexVerdict element_index(const QuarticPoly& f, const ElementTriple& e);

/// True iff both routes agree that the index is 1; a route disagreement is an
/// internal_error (bug detector).
bool verify_generator(const QuarticPoly& f, const ElementTriple& e);

}  // namespace pib4
