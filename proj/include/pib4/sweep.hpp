#pragma once

#include <map>

#include "pib4/families.hpp"
#include "pib4/index_oracle.hpp"
#include "pib4/thue.hpp"

namespace pib4 {

struct SweepOptions {
    unsigned long bound = 1000;       // Thue search bound (cubic and quartic stages)
    unsigned threads = 1;
    bool include_non_monogenic = false;
    bool run_oracle = true;           // disc-ratio confirmation per generator
};

struct GeneratorRecord {
    ElementTriple triple;
    BigInt index_form_abs;            // |F(Q1, Q2)|
    std::optional<BigInt> oracle_index;
    bool oracle_confirmed = false;    // both routes say index 1
    bool pib = false;                 // power integral basis claim (needs monogenic)
};

struct BranchRecord {
    BigInt u, v;
    bool family_route = false;                        // (1,0) branch solved in (a,b)
    std::optional<BinaryForm> ab_form;                // family route
    std::optional<ThueSolutionSet> ab_solutions;      // family route
    std::optional<std::array<BigInt, 3>> zero;        // generic route
    std::optional<BinaryForm> f1, f2;                 // generic route
    std::vector<std::pair<BigInt, BigInt>> pq_solutions;
    std::optional<unsigned long> insoluble_modulus;
    std::vector<ElementTriple> elements;
};

struct TRecord {
    BigInt t;
    bool monogenic = false;
    std::vector<std::pair<BigInt, bool>> witnesses;
    bool processed = false;           // Diophantine stages ran
    std::optional<ThueSolutionSet> cubic;
    std::vector<BranchRecord> branches;
    std::vector<GeneratorRecord> generators;
    bool catalog_checked = false;
    bool catalog_match = false;
    std::vector<ElementTriple> catalog_missing, catalog_extra;
    std::vector<CatalogEntry> catalog;
};

struct SweepReport {
    FamilyId family;
    BigInt t_min, t_max;
    unsigned long bound = 0;
    std::string tool_version;
    std::vector<TRecord> records;     // sorted by t

    bool all_matched() const;
};

/// Full pipeline for one parameter value.
TRecord run_instance(FamilyId id, const BigInt& t, const SweepOptions& opts);

/// Family sweep over [t_min, t_max], records sorted by t; distribution over
/// threads does not affect the result.
SweepReport sweep_family(FamilyId id, const BigInt& t_min, const BigInt& t_max,
                         const SweepOptions& opts);

}  // namespace pib4
