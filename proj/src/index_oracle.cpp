#include "pib4/index_oracle.hpp"

namespace pib4 {

UniPoly element_minpoly(const QuarticPoly& f, const ElementTriple& e) {
    using BiPoly = PolyT<UniPoly>;  // polynomials in s with Z[T] coefficients
    auto constant = [](const BigInt& c) { return UniPoly(c); };
    BiPoly fs(std::vector<UniPoly>{constant(f.a4), constant(f.a3), constant(f.a2), constant(f.a1),
                                   constant(BigInt(1))});
    UniPoly T = UniPoly::monomial(BigInt(1), 1);
    BiPoly g(std::vector<UniPoly>{T, constant(-e.c1), constant(-e.c2), constant(-e.c3)});
    UniPoly res = resultant(fs, g);
    if (res.degree() != 4 || res.lc() != 1)
        throw internal_error("element_minpoly: resultant is not a monic quartic");
    return res;
}

IndexVerdict element_index(const QuarticPoly& f, const ElementTriple& e) {
    UniPoly g = element_minpoly(f, e);
    if (poly_gcd(g, g.derivative()).degree() > 0) return {false, std::nullopt};
    BigInt dg = discriminant(g);
    BigInt df = discriminant(f.to_unipoly());
    if (df == 0) throw internal_error("element_index: disc(f) = 0");
    if (!divides(df, dg)) throw internal_error("element_index: disc ratio not integral");
    BigInt ratio = exact_div(dg, df);
    if (ratio <= 0) throw internal_error("element_index: disc ratio not positive");
    auto root = integer_sqrt_exact(ratio);
    if (!root) throw internal_error("element_index: disc ratio not a perfect square");
    return {true, *root};
}

bool verify_generator(const QuarticPoly& f, const ElementTriple& e) {
    ReductionProblem prob(f);
    bool via_form = pib4::abs(index_form_value(prob, e)) == 1;
    IndexVerdict v = element_index(f, e);
    bool via_disc = v.generates && *v.index == 1;
    if (via_form != via_disc) throw internal_error("verify_generator: route disagreement");
    return via_form;
}

}  // namespace pib4
