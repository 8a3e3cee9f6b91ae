#include "pib4/factor.hpp"

#include <algorithm>

#include "pib4/intfactor.hpp"

namespace pib4 {

namespace {

// Divisors of |n| with both signs, or {1,-1} for n == +-1.
std::vector<BigInt> signed_divisors(const BigInt& n) {
    std::vector<BigInt> out;
    for (const BigInt& d : positive_divisors(n)) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

// Strips one linear factor (vx - u) with v | lc, u | trailing, gcd(u,v)=1.
// p must be primitive. Returns the factor and the exact quotient.
bool strip_linear_factor(const UniPoly& p, UniPoly& factor, UniPoly& quotient) {
    BigInt tc = p.coeff(0);
    if (tc == 0) {
        factor = UniPoly(std::vector<BigInt>{0, 1});  // x
        std::vector<BigInt> q(p.coeffs().begin() + 1, p.coeffs().end());
        quotient = UniPoly(std::move(q));
        return true;
    }
    for (const BigInt& vden : positive_divisors(p.lc())) {
        for (const BigInt& u : signed_divisors(tc)) {
            if (gcd(u, vden) != 1) continue;
            UniPoly cand(std::vector<BigInt>{-u, vden});
            // exact division test over Z
            UniPoly r = p;
            std::vector<BigInt> q(static_cast<size_t>(p.degree()), BigInt(0));
            bool ok = true;
            while (!r.is_zero() && r.degree() >= 1) {
                if (!divides(vden, r.lc())) { ok = false; break; }
                BigInt qc = exact_div(r.lc(), vden);
                q[static_cast<size_t>(r.degree() - 1)] = qc;
                r = r - UniPoly::monomial(qc, static_cast<size_t>(r.degree() - 1)) * cand;
            }
            if (ok && r.is_zero()) {
                factor = cand;
                quotient = UniPoly(std::move(q));
                return true;
            }
        }
    }
    return false;
}

// Factors a primitive quadratic with positive lc into two integer linear
// factors. A quadratic splits over Q iff its discriminant is a square, and
// then both factors are primitive linear polynomials over Z, so the
// rational-root strip finds them.
bool split_quadratic(const UniPoly& p, UniPoly& f1, UniPoly& f2) {
    BigInt disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
    if (disc < 0 || !integer_sqrt_exact(disc)) return false;
    UniPoly lin, q;
    if (!strip_linear_factor(p, lin, q)) throw std::logic_error("square discriminant but no root");
    f1 = lin;
    f2 = primitive_part(q);
    return true;
}

// Quartic p (primitive, positive lc, no rational roots) as a product of two
// integer quadratics, if one exists. Coefficient search bounded by matching
// the outer coefficients exactly.
bool split_quartic_quadratics(const UniPoly& p, UniPoly& q1, UniPoly& q2) {
    const BigInt p4 = p.coeff(4), p3 = p.coeff(3), p2 = p.coeff(2), p1 = p.coeff(1), p0 = p.coeff(0);
    for (const BigInt& a : positive_divisors(p4)) {
        BigInt d = exact_div(p4, a);
        for (BigInt c : signed_divisors(p0)) {
            if (!divides(c, p0)) continue;
            BigInt f = exact_div(p0, c);
            // (a x^2 + b x + c)(d x^2 + e x + f):
            //   d b + a e = p3 ; f b + c e = p1 ; a f + b e + c d = p2
            BigInt det = d * c - a * f;
            if (det != 0) {
                BigInt bnum = p3 * c - p1 * a, enum_ = d * p1 - f * p3;
                if (!divides(det, bnum) || !divides(det, enum_)) continue;
                BigInt b = exact_div(bnum, det), e = exact_div(enum_, det);
                if (a * f + b * e + c * d == p2 && d * b + a * e == p3 && f * b + c * e == p1) {
                    q1 = UniPoly(std::vector<BigInt>{c, b, a});
                    q2 = UniPoly(std::vector<BigInt>{f, e, d});
                    return true;
                }
            } else {
                // singular system: enumerate b within the Mignotte-style bound
                // |b| <= 2^2 * |p|_2 (factors of degree 2, lc(b) divides lc(p))
                BigInt norm2 = 0;
                for (const auto& cf : p.coeffs()) norm2 += cf * cf;
                BigInt bound = 4 * (floor_sqrt(norm2) + 1);
                for (BigInt b = -bound; b <= bound; ++b) {
                    BigInt rem = p3 - d * b;
                    if (!divides(a, rem)) continue;
                    BigInt e = exact_div(rem, a);
                    if (a * f + b * e + c * d == p2 && f * b + c * e == p1) {
                        q1 = UniPoly(std::vector<BigInt>{c, b, a});
                        q2 = UniPoly(std::vector<BigInt>{f, e, d});
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace

PolyFactorization factor_univariate_deg_le4(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    if (p.degree() > 4) throw std::invalid_argument("factor: degree > 4");
    PolyFactorization out;
    BigInt cont = content(p);
    if (p.lc() < 0) cont = -cont;
    out.content = cont;
    UniPoly w = primitive_part(p);
    // peel rational roots
    while (w.degree() >= 1) {
        if (w.degree() == 1) {
            out.factors.push_back(w);
            w = UniPoly(BigInt(1));
            break;
        }
        UniPoly lin, quot;
        if (!strip_linear_factor(w, lin, quot)) break;
        out.factors.push_back(lin);
        BigInt qc = content(quot);
        if (!quot.is_zero() && quot.lc() < 0) qc = -qc;
        if (qc != 1) {
            out.content *= qc;
            quot = primitive_part(quot);
        }
        w = quot;
    }
    if (w.degree() == 2) {
        UniPoly f1, f2;
        if (split_quadratic(w, f1, f2)) {
            out.factors.push_back(f1);
            out.factors.push_back(f2);
        } else {
            out.factors.push_back(w);
        }
    } else if (w.degree() == 3) {
        out.factors.push_back(w);  // cubic with no rational root is irreducible
    } else if (w.degree() == 4) {
        UniPoly q1, q2;
        if (split_quartic_quadratics(w, q1, q2)) {
            // neither quadratic can have a rational root here (it would be one of w)
            out.factors.push_back(q1);
            out.factors.push_back(q2);
        } else {
            out.factors.push_back(w);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const UniPoly& x, const UniPoly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        for (long i = x.degree(); i >= 0; --i) {
            int c = cmp(x.coeff(static_cast<size_t>(i)), y.coeff(static_cast<size_t>(i)));
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

bool is_irreducible_deg_le4(const UniPoly& p) {
    if (p.degree() < 1) return false;
    auto f = factor_univariate_deg_le4(p);
    return f.factors.size() == 1 && f.factors[0].degree() == p.degree();
}

}  // namespace pib4
