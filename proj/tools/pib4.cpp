// pib4: generators of power integral bases in five families of monogenic
// quartic fields, via the index-form -> Thue-equation reduction.
//
// Exit codes: 0 success, 2 usage error, 3 mathematical mismatch or route
// disagreement, 4 I/O failure.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "pib4/report.hpp"

using namespace pib4;

namespace {

BigInt parse_big(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("not an integer: " + s);
    }
}

FamilyId family_or_throw(const std::string& s) {
    auto id = parse_family(s);
    if (!id) throw CLI::ValidationError("unknown family (use X2, X3, X4, X5, C4): " + s);
    return *id;
}

void print_poly(const QuarticPoly& f) {
    std::cout << "f(x) = x^4";
    struct Term { const BigInt* c; const char* mono; };
    for (auto [c, mono] : {Term{&f.a1, "x^3"}, Term{&f.a2, "x^2"}, Term{&f.a3, "x"}, Term{&f.a4, ""}}) {
        if (*c == 0) continue;
        std::cout << (*c > 0 ? " + " : " - ") << pib4::abs(*c).get_str();
        if (*mono) std::cout << "*" << mono;
    }
    std::cout << "\n";
}

std::string triple_str(const ElementTriple& e) {
    return "(" + e.c1.get_str() + ", " + e.c2.get_str() + ", " + e.c3.get_str() + ")";
}

int cmd_generate(const std::string& family, const std::string& t_str) {
    FamilyId id = family_or_throw(family);
    BigInt t = parse_big(t_str);
    FamilyInstance inst = make_instance(id, t);
    std::cout << "family " << family_name(id) << ", t = " << t.get_str() << "\n";
    print_poly(inst.f);
    std::cout << "coefficients [a1,a2,a3,a4] = [" << inst.f.a1.get_str() << ", "
              << inst.f.a2.get_str() << ", " << inst.f.a3.get_str() << ", " << inst.f.a4.get_str()
              << "]\n";
    std::cout << "monogenic = " << (inst.monogenic ? "true" : "false") << "\n";
    for (const auto& [w, sf] : inst.witnesses)
        std::cout << "  condition integer " << w.get_str() << ": squarefree = "
                  << (sf ? "true" : "false") << "\n";
    return 0;
}

int cmd_sweep(const std::string& family, const std::string& tmin, const std::string& tmax,
              unsigned long bound, const std::string& out_path, unsigned threads,
              bool include_nonmono) {
    FamilyId id = family_or_throw(family);
    SweepOptions opts;
    opts.bound = bound;
    opts.threads = threads;
    opts.include_non_monogenic = include_nonmono;
    SweepReport rep = sweep_family(id, parse_big(tmin), parse_big(tmax), opts);
    if (!out_path.empty()) {
        try {
            write_report(rep, out_path);
        } catch (const std::ios_base::failure& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 4;
        }
    } else {
        std::cout << report_to_json(rep);
    }
    size_t processed = 0, matched = 0;
    for (const auto& r : rep.records) {
        if (!r.processed) continue;
        ++processed;
        if (r.catalog_match) ++matched;
        else
            std::cerr << "catalog mismatch at t = " << r.t.get_str() << "\n";
    }
    std::cerr << "swept " << rep.records.size() << " parameter values, " << processed
              << " processed, " << matched << " catalog matches\n";
    return matched == processed ? 0 : 3;
}

int cmd_verify(const std::string& family, const std::string& t_str, const std::string& c1,
               const std::string& c2, const std::string& c3) {
    FamilyId id = family_or_throw(family);
    BigInt t = parse_big(t_str);
    FamilyInstance inst = make_instance(id, t);
    if (!inst.monogenic)
        std::cout << "note: instance is not monogenic; index statements are relative to Z[xi]\n";
    ElementTriple e{parse_big(c1), parse_big(c2), parse_big(c3)};
    ReductionProblem prob(inst.f);
    BigInt ifv = index_form_value(prob, e);
    std::cout << "index form value F(Q1,Q2) = " << ifv.get_str() << "\n";
    try {
        IndexVerdict v = element_index(inst.f, e);
        if (!v.generates)
            std::cout << "disc-ratio route: element does not generate the field\n";
        else
            std::cout << "disc-ratio route: index = " << v.index->get_str() << "\n";
        bool gen = verify_generator(inst.f, e);
        std::cout << "generates power integral basis: " << (gen && inst.monogenic ? "true" : "false")
                  << "\n";
    } catch (const internal_error& err) {
        std::cerr << "route disagreement: " << err.what() << "\n";
        return 3;
    }
    return 0;
}

int cmd_reduce(const std::string& a1, const std::string& a2, const std::string& a3,
               const std::string& a4, const std::string& m, const std::string& d,
               const std::string& n, unsigned long bound) {
    QuarticPoly f{parse_big(a1), parse_big(a2), parse_big(a3), parse_big(a4)};
    if (!f.is_irreducible()) {
        std::cerr << "error: polynomial is reducible over Q\n";
        return 2;
    }
    ReductionProblem prob(f, parse_big(m), parse_big(d), parse_big(n));
    print_poly(f);
    BinaryForm F = cubic_resolvent(f);
    std::cout << "cubic resolvent coefficients (u^3..v^3): ";
    for (const auto& c : F.coeffs()) std::cout << c.get_str() << " ";
    std::cout << "\n";
    auto [q1, q2] = quadratic_forms(f);
    std::cout << "Q1 = [" << q1.cxx.get_str() << "," << q1.cxy.get_str() << "," << q1.cyy.get_str()
              << "," << q1.cxz.get_str() << "," << q1.cyz.get_str() << "," << q1.czz.get_str()
              << "] (x2,xy,y2,xz,yz,z2)\n";
    std::cout << "Q2 = [" << q2.cxx.get_str() << "," << q2.cxy.get_str() << "," << q2.cyy.get_str()
              << "," << q2.cxz.get_str() << "," << q2.cyz.get_str() << "," << q2.czz.get_str()
              << "]\n";
    std::cout << "i_m = " << prob.i_m.get_str() << "\n";
    ThueSolutionSet cubic = solve(F, prob.i_m, bound);
    std::cout << "cubic solutions ("
              << (cubic.completeness == Completeness::Exact ? "exact" : "bounded search") << "): ";
    for (const auto& [u, v] : cubic.solutions)
        std::cout << "(" << u.get_str() << "," << v.get_str() << ") ";
    std::cout << "\n";
    std::set<ElementTriple> all;
    for (const auto& [u, v] : cubic.solutions) {
        BranchDiagnostics diag;
        auto elems = generators_for_uv(prob, u, v, bound, &diag);
        std::cout << "branch (" << u.get_str() << "," << v.get_str() << "): ";
        if (diag.insoluble_modulus)
            std::cout << "conic has no rational point (mod " << *diag.insoluble_modulus << ")";
        else if (diag.zero)
            std::cout << "conic point (" << (*diag.zero)[0].get_str() << ","
                      << (*diag.zero)[1].get_str() << "," << (*diag.zero)[2].get_str() << "), "
                      << elems.size() << " element(s)";
        std::cout << "\n";
        if (diag.forms) {
            std::cout << "  F1: ";
            for (const auto& c : diag.forms->f1.coeffs()) std::cout << c.get_str() << " ";
            std::cout << "\n  F2: ";
            for (const auto& c : diag.forms->f2.coeffs()) std::cout << c.get_str() << " ";
            std::cout << (diag.forms->f2_zero ? " (vanishes)" : "") << "\n";
        }
        all.insert(elems.begin(), elems.end());
    }
    std::cout << "elements of index " << prob.m.get_str() << " (canonical triples, c1 xi + c2 xi^2 + c3 xi^3):\n";
    for (const auto& e : all) {
        std::cout << "  " << triple_str(e);
        IndexVerdict v = element_index(f, e);
        if (v.generates) std::cout << "  [disc-ratio index " << v.index->get_str() << "]";
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power integral basis generators in quartic fields"};
    app.require_subcommand(1);

    std::string family, t_str = "0", tmin, tmax, out_path;
    std::string c1, c2, c3, a1, a2, a3, a4;
    std::string m = "1", d = "1", n = "1";
    unsigned long bound = 1000;
    unsigned threads = 1;
    bool include_nonmono = false;

    auto* gen = app.add_subcommand("generate", "instantiate a family polynomial");
    gen->add_option("--family", family)->required();
    gen->add_option("--t", t_str)->required();

    auto* sw = app.add_subcommand("sweep", "run the pipeline over a parameter range");
    sw->add_option("--family", family)->required();
    sw->add_option("--t-min", tmin)->required();
    sw->add_option("--t-max", tmax)->required();
    sw->add_option("--bound", bound);
    sw->add_option("--out", out_path);
    sw->add_option("--threads", threads);
    sw->add_flag("--include-non-monogenic", include_nonmono);

    auto* ver = app.add_subcommand("verify", "check one element triple");
    ver->add_option("--family", family)->required();
    ver->add_option("--t", t_str)->required();
    ver->add_option("c1", c1)->required();
    ver->add_option("c2", c2)->required();
    ver->add_option("c3", c3)->required();

    auto* red = app.add_subcommand("reduce", "full reduction for a monic quartic");
    red->add_option("a1", a1)->required();
    red->add_option("a2", a2)->required();
    red->add_option("a3", a3)->required();
    red->add_option("a4", a4)->required();
    red->add_option("--m", m);
    red->add_option("--d", d);
    red->add_option("--n", n);
    red->add_option("--bound", bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(family, t_str);
        if (sw->parsed()) return cmd_sweep(family, tmin, tmax, bound, out_path, threads, include_nonmono);
        if (ver->parsed()) return cmd_verify(family, t_str, c1, c2, c3);
        if (red->parsed()) return cmd_reduce(a1, a2, a3, a4, m, d, n, bound);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
