#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pib4/binary_form.hpp"

namespace pib4 {

enum class Completeness { Exact, BoundedSearch };

/// Primitive solution pairs of F(p,q) = +-c, one representative per +-(p,q)
/// class (first nonzero coordinate positive), sorted, with a completeness
/// certificate. Every insert re-verifies the equation.
struct ThueSolutionSet {
    std::vector<std::pair<BigInt, BigInt>> solutions;
    Completeness completeness = Completeness::BoundedSearch;
    unsigned long bound = 0;  // meaningful for BoundedSearch
    BigInt rhs;

    void insert_verified(const BinaryForm& f, const BigInt& p, const BigInt& q);
    void finalize();  // sort + dedupe
    bool contains(const BigInt& p, const BigInt& q) const;
};

/// Strategy dispatch: fully reducible forms and linear x quadratic cubics are
/// solved exactly, positive-definite quartics by a certified bound, anything
/// else by bounded exhaustive search. deg F in {3, 4}, c != 0.
ThueSolutionSet solve(const BinaryForm& f, const BigInt& c, unsigned long bound,
                      unsigned threads = 1);

/// Product of linear forms = +-c via divisor splittings. Needs at least two
/// pairwise independent forms among the factors.
ThueSolutionSet solve_reducible(const std::vector<BinaryForm>& linear_factors, const BigInt& c);

/// lin * quad = +-c with quad irreducible: substitute the linear constraint
/// and solve the resulting univariate quadratics exactly.
ThueSolutionSet solve_linear_quadratic(const BinaryForm& lin, const BinaryForm& quad,
                                       const BigInt& c);

/// AM-GM certificate for a positive definite quartic: a bound B with
/// |p|,|q| <= B for every solution of |F| = |c|, when certifiable.
std::optional<unsigned long> definite_bound(const BinaryForm& f, const BigInt& c);

/// Exhaustive scan over canonical coprime pairs with max-norm <= bound.
ThueSolutionSet solve_bounded(const BinaryForm& f, const BigInt& c, unsigned long bound,
                              unsigned threads = 1);

}  // namespace pib4
