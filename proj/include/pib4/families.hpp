#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pib4/reduction.hpp"

namespace pib4 {

enum class FamilyId { X2, X3, X4, X5, C4 };

const char* family_name(FamilyId id);
std::optional<FamilyId> parse_family(const std::string& s);

/// Exact template instantiation of the family's quartic at parameter t.
QuarticPoly family_poly(FamilyId id, const BigInt& t);

struct MonogenicityResult {
    bool monogenic = false;
    std::vector<std::pair<BigInt, bool>> witnesses;  // (condition integer, squarefree verdict)
};

/// Evaluates the family's square-freeness criterion with witness integers.
MonogenicityResult monogenicity_condition(FamilyId id, const BigInt& t);

struct FamilyInstance {
    FamilyId id;
    BigInt t;
    QuarticPoly f;
    bool monogenic;
    std::vector<std::pair<BigInt, bool>> witnesses;
};

FamilyInstance make_instance(FamilyId id, const BigInt& t);

/// Unimodular (a,b) -> (p,q) substitution, row-major [m11, m12, m21, m22].
std::array<BigInt, 4> family_substitution(FamilyId id, const BigInt& t);

/// The (1,0)-branch conic parametrization used by reconstruct_generator.
ParamForms family_param_forms(FamilyId id, const BigInt& t);

/// The quartic Thue form in (a,b) the family sweep solves: F1 composed with
/// the family substitution. Equals homogenize(family_poly, 4) for X2..X5.
BinaryForm family_ab_form(FamilyId id, const BigInt& t);

/// Map a solution (a,b) of the family form to its element triple.
ElementTriple reconstruct_generator(FamilyId id, const BigInt& t, const BigInt& a, const BigInt& b);

/// (a, b) = (64t^4 - 12t^2 + 1, 4t), a solution of the C4 form for every t.
std::pair<BigInt, BigInt> c4_parametric_solution(const BigInt& t);

ElementTriple canonical_triple(const ElementTriple& e);

struct CatalogEntry {
    ElementTriple triple;                  // canonical
    std::string condition;                 // provenance tag
    std::optional<ElementTriple> paper_variant;  // where the printed theorem differs
};

/// The known-generator catalog instantiated at t: the theorems' entries with
/// the oracle-resolved corrections, deduplicated and sorted.
std::vector<CatalogEntry> expected_generators(FamilyId id, const BigInt& t);

}  // namespace pib4
