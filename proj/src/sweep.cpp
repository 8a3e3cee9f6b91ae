#include "pib4/sweep.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace pib4 {

namespace {

constexpr const char* kToolVersion = "pib4 0.1.0";

void attach_generators(TRecord& rec, const FamilyInstance& inst, const std::set<ElementTriple>& all,
                       const SweepOptions& opts) {
    ReductionProblem prob(inst.f);
    for (const ElementTriple& e : all) {
        GeneratorRecord g;
        g.triple = e;
        g.index_form_abs = pib4::abs(index_form_value(prob, e));
        if (opts.run_oracle) {
            IndexVerdict v = element_index(inst.f, e);
            g.oracle_index = v.index;
            bool via_disc = v.generates && v.index && *v.index == 1;
            bool via_form = g.index_form_abs == 1;
            if (via_disc != via_form) throw internal_error("sweep: oracle route disagreement");
            g.oracle_confirmed = via_disc;
        } else {
            g.oracle_confirmed = g.index_form_abs == 1;
        }
        g.pib = inst.monogenic && g.oracle_confirmed;
        rec.generators.push_back(std::move(g));
    }
}

}  // namespace

bool SweepReport::all_matched() const {
    for (const auto& r : records)
        if (r.catalog_checked && !r.catalog_match) return false;
    return true;
}

TRecord run_instance(FamilyId id, const BigInt& t, const SweepOptions& opts) {
    FamilyInstance inst = make_instance(id, t);
    TRecord rec;
    rec.t = t;
    rec.monogenic = inst.monogenic;
    rec.witnesses = inst.witnesses;
    if (!inst.monogenic && !opts.include_non_monogenic) return rec;
    if (!inst.f.is_irreducible()) return rec;  // not field-defining; leave unprocessed

    rec.processed = true;
    ReductionProblem prob(inst.f);
    BinaryForm resolvent = cubic_resolvent(inst.f);
    rec.cubic = solve(resolvent, prob.i_m, opts.bound, opts.threads);

    std::set<ElementTriple> all;
    for (const auto& [u, v] : rec.cubic->solutions) {
        BranchRecord br;
        br.u = u;
        br.v = v;
        if (u == 1 && v == 0) {
            br.family_route = true;
            br.ab_form = family_ab_form(id, t);
            br.ab_solutions = solve(*br.ab_form, prob.i_m, opts.bound, opts.threads);
            for (const auto& [a, b] : br.ab_solutions->solutions) {
                ElementTriple e = reconstruct_generator(id, t, a, b);
                br.elements.push_back(e);
                all.insert(e);
            }
        } else {
            BranchDiagnostics diag;
            auto elems = generators_for_uv(prob, u, v, opts.bound, &diag);
            br.zero = diag.zero;
            br.insoluble_modulus = diag.insoluble_modulus;
            if (diag.forms) {
                br.f1 = diag.forms->f1;
                br.f2 = diag.forms->f2;
            }
            br.pq_solutions = diag.pq_solutions;
            br.elements.assign(elems.begin(), elems.end());
            all.insert(elems.begin(), elems.end());
        }
        std::sort(br.elements.begin(), br.elements.end());
        br.elements.erase(std::unique(br.elements.begin(), br.elements.end()), br.elements.end());
        rec.branches.push_back(std::move(br));
    }

    attach_generators(rec, inst, all, opts);

    rec.catalog = expected_generators(id, t);
    rec.catalog_checked = true;
    std::set<ElementTriple> expect;
    for (const auto& e : rec.catalog) expect.insert(e.triple);
    for (const auto& e : expect)
        if (!all.count(e)) rec.catalog_missing.push_back(e);
    for (const auto& e : all)
        if (!expect.count(e)) rec.catalog_extra.push_back(e);
    rec.catalog_match = rec.catalog_missing.empty() && rec.catalog_extra.empty();
    return rec;
}

SweepReport sweep_family(FamilyId id, const BigInt& t_min, const BigInt& t_max,
                         const SweepOptions& opts) {
    if (t_min > t_max) throw std::invalid_argument("sweep_family: t_min > t_max");
    SweepReport rep;
    rep.family = id;
    rep.t_min = t_min;
    rep.t_max = t_max;
    rep.bound = opts.bound;
    rep.tool_version = kToolVersion;

    std::vector<BigInt> ts;
    for (BigInt t = t_min; t <= t_max; ++t) ts.push_back(t);
    unsigned nw = std::max(1u, opts.threads);
    if (nw == 1 || ts.size() <= 1) {
        for (const BigInt& t : ts) rep.records.push_back(run_instance(id, t, opts));
    } else {
        // workers take strided slices; records are reassembled in t order
        SweepOptions inner = opts;
        inner.threads = 1;
        std::vector<std::future<std::vector<TRecord>>> futs;
        for (unsigned w = 0; w < nw; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w]() {
                std::vector<TRecord> part;
                for (size_t i = w; i < ts.size(); i += nw) part.push_back(run_instance(id, ts[i], inner));
                return part;
            }));
        }
        std::vector<std::vector<TRecord>> parts;
        for (auto& f : futs) parts.push_back(f.get());
        for (size_t i = 0; i < ts.size(); ++i)
            rep.records.push_back(std::move(parts[i % nw][i / nw]));
    }
    std::sort(rep.records.begin(), rep.records.end(),
              [](const TRecord& a, const TRecord& b) { return cmp(a.t, b.t) < 0; });
    return rep;
}

}  // namespace pib4
