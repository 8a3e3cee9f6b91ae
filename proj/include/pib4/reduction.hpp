#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>

#include "pib4/binary_form.hpp"
#include "pib4/ternary_quadratic.hpp"

namespace pib4 {

/// Raised when the two index routes disagree or an internal exactness
/// guarantee breaks; always indicates a bug, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when a conic point search exhausts its escalation ladder without a
/// certificate either way.
struct escalation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monic quartic x^4 + a1 x^3 + a2 x^2 + a3 x + a4.
struct QuarticPoly {
    BigInt a1, a2, a3, a4;

    UniPoly to_unipoly() const { return UniPoly(std::vector<BigInt>{a4, a3, a2, a1, BigInt(1)}); }
    bool is_irreducible() const { return is_irreducible_deg_le4(to_unipoly()); }
    bool operator==(const QuarticPoly&) const = default;
};

/// alpha = c1 xi + c2 xi^2 + c3 xi^3 (the rational part is index-irrelevant).
struct ElementTriple {
    BigInt c1, c2, c3;

    ElementTriple negated() const { return {-c1, -c2, -c3}; }
    /// Sign representative with the first nonzero coordinate positive.
    ElementTriple canonical() const {
        if (c1 != 0) return c1 > 0 ? *this : negated();
        if (c2 != 0) return c2 > 0 ? *this : negated();
        if (c3 < 0) return negated();
        return *this;
    }
    bool operator==(const ElementTriple&) const = default;
    bool operator<(const ElementTriple& o) const {
        if (int c = cmp(c1, o.c1); c != 0) return c < 0;
        if (int c = cmp(c2, o.c2); c != 0) return c < 0;
        return cmp(c3, o.c3) < 0;
    }
};

/// Index problem I(alpha) = m for elements with common denominator d over a
/// field generated by a root of f with I(xi) = n. Families always use
/// d = n = m = 1. Construction checks i_m = d^6 m / n integral.
struct ReductionProblem {
    QuarticPoly f;
    BigInt m{1}, d{1}, n{1};
    BigInt i_m{1};

    ReductionProblem(QuarticPoly poly, BigInt m_ = 1, BigInt d_ = 1, BigInt n_ = 1);
};

/// Cubic resolvent form of Eq. (3).
BinaryForm cubic_resolvent(const QuarticPoly& f);
inline BinaryForm cubic_resolvent(const ReductionProblem& prob) { return cubic_resolvent(prob.f); }

/// The quadratic forms Q1, Q2 attached to f.
std::pair<TernaryQuadratic, TernaryQuadratic> quadratic_forms(const QuarticPoly& f);

/// Q0 = u Q2 - v Q1; (u,v) != (0,0).
TernaryQuadratic q_zero(const BigInt& u, const BigInt& v, const TernaryQuadratic& q1,
                        const TernaryQuadratic& q2);

/// Smallest primitive nontrivial zero of Q0 within max-norm <= bound, ordered
/// by (fewer nonzero coordinates, max-norm, lexicographic), sign-canonical.
std::optional<std::array<BigInt, 3>> nontrivial_zero(const TernaryQuadratic& q0, unsigned long bound);

/// Certificate that Q0 = 0 has no primitive solution modulo some prime power
/// (hence no rational point); returns the killing modulus.
std::optional<unsigned long> certify_no_zero(const TernaryQuadratic& q0);

/// The conic parametrization of Eq. (7): all solutions of Q0 = 0 not handled
/// by the base direction are (fx, fy, fz)(p,q)/k with coprime (p,q) and k a
/// divisor of det(C)/D^2.
struct ParamForms {
    BinaryForm fx, fy, fz;            // degree 2 in (p, q)
    std::vector<BigInt> k_candidates; // positive divisors of |det(C)/D^2|; signs handled by callers
    BigInt det_c;                     // det of the coefficient matrix
    BigInt entry_gcd;                 // D, the gcd of its entries
};

ParamForms parametrize(const TernaryQuadratic& q0, const std::array<BigInt, 3>& zero);

struct QuarticForms {
    BinaryForm f1, f2;   // Q1 and Q2 composed with the parametrization
    bool f2_zero;
    bool proportional;   // degenerate pair flag (one a multiple of the other)
};

QuarticForms quartic_forms(const TernaryQuadratic& q1, const TernaryQuadratic& q2,
                           const ParamForms& pf);

/// F(Q1(e), Q2(e)) - the index form value; |.| = I(alpha) when d = n = 1.
BigInt index_form_value(const ReductionProblem& prob, const ElementTriple& e);

struct BranchDiagnostics {
    std::optional<std::array<BigInt, 3>> zero;
    std::optional<unsigned long> insoluble_modulus;
    std::optional<ParamForms> params;
    std::optional<QuarticForms> forms;
    std::vector<std::pair<BigInt, BigInt>> pq_solutions;
};

/// Full per-branch pipeline for the cubic solution pair +-(u, v): find a conic
/// point, parametrize, sweep coprime (p,q) with the k-divisor scaling, test the
/// base direction, verify every result against the index form.
std::set<ElementTriple> generators_for_uv(const ReductionProblem& prob, const BigInt& u,
                                          const BigInt& v, unsigned long search_bound,
                                          BranchDiagnostics* diag = nullptr);

}  // namespace pib4
