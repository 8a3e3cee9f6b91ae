#include "pib4/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "pib4/intfactor.hpp"

namespace pib4 {

ReductionProblem::ReductionProblem(QuarticPoly poly, BigInt m_, BigInt d_, BigInt n_)
    : f(std::move(poly)), m(std::move(m_)), d(std::move(d_)), n(std::move(n_)) {
    if (m <= 0 || d <= 0 || n <= 0)
        throw std::invalid_argument("ReductionProblem: m, d, n must be positive");
    BigInt num = pow_ui(d, 6) * m;
    if (!divides(n, num))
        throw std::invalid_argument("ReductionProblem: d^6 m / n is not an integer");
    i_m = exact_div(num, n);
}

BinaryForm cubic_resolvent(const QuarticPoly& f) {
    const BigInt &a1 = f.a1, &a2 = f.a2, &a3 = f.a3, &a4 = f.a4;
    return BinaryForm(3, {BigInt(1), -a2, a1 * a3 - 4 * a4, 4 * a2 * a4 - a3 * a3 - a1 * a1 * a4});
}

std::pair<TernaryQuadratic, TernaryQuadratic> quadratic_forms(const QuarticPoly& f) {
    const BigInt &a1 = f.a1, &a2 = f.a2, &a3 = f.a3, &a4 = f.a4;
    TernaryQuadratic q1{BigInt(1), -a1,        a2, a1 * a1 - 2 * a2, a3 - a1 * a2,
                        -a1 * a3 + a2 * a2 + a4};
    TernaryQuadratic q2{BigInt(0), BigInt(0), BigInt(1), BigInt(-1), -a1, a2};
    return {q1, q2};
}

TernaryQuadratic q_zero(const BigInt& u, const BigInt& v, const TernaryQuadratic& q1,
                        const TernaryQuadratic& q2) {
    if (u == 0 && v == 0) throw std::invalid_argument("q_zero: (u,v) = (0,0)");
    return q2.scaled(u) - q1.scaled(v);
}

namespace {

std::array<BigInt, 3> sign_canonical(std::array<BigInt, 3> t) {
    for (const auto& c : t) {
        if (c > 0) return t;
        if (c < 0) return {-t[0], -t[1], -t[2]};
    }
    return t;
}

// All primitive sign-canonical zeros with exactly two nonzero coordinates in
// positions (i, j); a binary quadratic A s^2 + B st + C t^2 with A, C != 0
// vanishes at st != 0 only on rational root ratios.
void two_nonzero_zeros(const BigInt& A, const BigInt& B, const BigInt& C, int i, int j,
                       unsigned long bound, std::vector<std::array<BigInt, 3>>& out) {
    BigInt disc = B * B - 4 * A * C;
    if (disc < 0) return;
    auto root = integer_sqrt_exact(disc);
    if (!root) return;
    for (int sgn : {1, -1}) {
        BigInt s = -B + sgn * *root, t = 2 * A;
        if (s == 0) continue;  // would have a zero coordinate
        BigInt g = gcd(s, t);
        s = exact_div(s, g);
        t = exact_div(t, g);
        if (pib4::abs(s) > static_cast<long>(bound) || pib4::abs(t) > static_cast<long>(bound)) continue;
        std::array<BigInt, 3> z{BigInt(0), BigInt(0), BigInt(0)};
        z[static_cast<size_t>(i)] = s;
        z[static_cast<size_t>(j)] = t;
        out.push_back(sign_canonical(z));
    }
}

}  // namespace

std::optional<std::array<BigInt, 3>> nontrivial_zero(const TernaryQuadratic& q, unsigned long bound) {
    if (q.is_zero()) throw std::invalid_argument("nontrivial_zero: zero form");
    // one nonzero coordinate; ties broken lexicographically
    if (q.czz == 0) return std::array<BigInt, 3>{BigInt(0), BigInt(0), BigInt(1)};
    if (q.cyy == 0) return std::array<BigInt, 3>{BigInt(0), BigInt(1), BigInt(0)};
    if (q.cxx == 0) return std::array<BigInt, 3>{BigInt(1), BigInt(0), BigInt(0)};
    // two nonzero coordinates
    std::vector<std::array<BigInt, 3>> cands;
    two_nonzero_zeros(q.cxx, q.cxy, q.cyy, 0, 1, bound, cands);
    two_nonzero_zeros(q.cxx, q.cxz, q.czz, 0, 2, bound, cands);
    two_nonzero_zeros(q.cyy, q.cyz, q.czz, 1, 2, bound, cands);
    auto norm = [](const std::array<BigInt, 3>& z) {
        return std::max({pib4::abs(z[0]), pib4::abs(z[1]), pib4::abs(z[2])});
    };
    auto better = [&](const std::array<BigInt, 3>& a, const std::array<BigInt, 3>& b) {
        if (int c = cmp(norm(a), norm(b)); c != 0) return c < 0;
        if (int c = cmp(a[0], b[0]); c != 0) return c < 0;
        if (int c = cmp(a[1], b[1]); c != 0) return c < 0;
        return cmp(a[2], b[2]) < 0;
    };
    if (!cands.empty()) return *std::min_element(cands.begin(), cands.end(), better);
    // three nonzero coordinates: solve the z-quadratic over the (x, y) grid,
    // czz != 0 here
    std::optional<std::array<BigInt, 3>> best;
    long b = static_cast<long>(bound);
    for (long x = -b; x <= b; ++x) {
        for (long y = -b; y <= b; ++y) {
            if (x == 0 || y == 0) continue;
            BigInt B = q.cxz * x + q.cyz * y;
            BigInt C = q.cxx * x * x + q.cxy * x * y + q.cyy * y * y;
            BigInt disc = B * B - 4 * q.czz * C;
            if (disc < 0) continue;
            auto root = integer_sqrt_exact(disc);
            if (!root) continue;
            for (int sgn : {1, -1}) {
                BigInt num = -B + sgn * *root;
                if (!divides(2 * q.czz, num)) continue;
                BigInt z = exact_div(num, 2 * q.czz);
                if (z == 0 || pib4::abs(z) > b) continue;
                std::array<BigInt, 3> cand{BigInt(x), BigInt(y), z};
                if (gcd(cand[0], cand[1], cand[2]) != 1) continue;
                cand = sign_canonical(cand);
                if (!best || better(cand, *best)) best = cand;
            }
        }
    }
    return best;
}

std::optional<unsigned long> certify_no_zero(const TernaryQuadratic& q) {
    static const unsigned long moduli[] = {4, 8, 16, 9, 27, 25, 49, 121, 169};
    for (unsigned long m : moduli) {
        unsigned long p = m % 2 == 0 ? 2 : (m % 3 == 0 ? 3 : (m % 5 == 0 ? 5 : (m % 7 == 0 ? 7 : (m % 11 == 0 ? 11 : 13))));
        auto red = [&](const BigInt& c) {
            return static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), m));
        };
        long cxx = red(q.cxx), cxy = red(q.cxy), cyy = red(q.cyy);
        long cxz = red(q.cxz), cyz = red(q.cyz), czz = red(q.czz);
        bool soluble = false;
        for (unsigned long x = 0; x < m && !soluble; ++x)
            for (unsigned long y = 0; y < m && !soluble; ++y)
                for (unsigned long z = 0; z < m && !soluble; ++z) {
                    if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                    unsigned long long v =
                        (static_cast<unsigned long long>(cxx) * x % m * x + static_cast<unsigned long long>(cxy) * x % m * y +
                         static_cast<unsigned long long>(cyy) * y % m * y + static_cast<unsigned long long>(cxz) * x % m * z +
                         static_cast<unsigned long long>(cyz) * y % m * z + static_cast<unsigned long long>(czz) * z % m * z) % m;
                    if (v == 0) soluble = true;
                }
        if (!soluble) return m;
    }
    return std::nullopt;
}

ParamForms parametrize(const TernaryQuadratic& q0, const std::array<BigInt, 3>& zero) {
    if (zero == std::array<BigInt, 3>{BigInt(0), BigInt(0), BigInt(0)})
        throw std::invalid_argument("parametrize: zero triple");
    if (q0.eval(zero[0], zero[1], zero[2]) != 0)
        throw std::invalid_argument("parametrize: point is not on the conic");
    int piv = zero[0] != 0 ? 0 : (zero[1] != 0 ? 1 : 2);
    int oj = piv == 0 ? 1 : 0;
    int ok = piv == 2 ? 1 : 2;
    auto unit = [](int i) {
        std::array<BigInt, 3> e{BigInt(0), BigInt(0), BigInt(0)};
        e[static_cast<size_t>(i)] = 1;
        return e;
    };
    auto ej = unit(oj), ek = unit(ok);
    // r L(p,q) = R(p,q) after substituting (pivot -> r*zero, others -> +p, +q)
    BigInt Lp = q0.polar(zero, ej), Lq = q0.polar(zero, ek);
    BigInt Rpp = -q0.eval(ej[0], ej[1], ej[2]);
    BigInt Rpq = -q0.polar(ej, ek);
    BigInt Rqq = -q0.eval(ek[0], ek[1], ek[2]);
    std::array<std::array<BigInt, 3>, 3> c{};  // rows x,y,z; cols p^2, pq, q^2
    for (int i = 0; i < 3; ++i)
        c[static_cast<size_t>(i)] = {zero[static_cast<size_t>(i)] * Rpp, zero[static_cast<size_t>(i)] * Rpq,
                                     zero[static_cast<size_t>(i)] * Rqq};
    c[static_cast<size_t>(oj)][0] += Lp;
    c[static_cast<size_t>(oj)][1] += Lq;
    c[static_cast<size_t>(ok)][1] += Lp;
    c[static_cast<size_t>(ok)][2] += Lq;
    // sign normalization: first nonzero coefficient positive
    for (auto& row : c) {
        bool done = false;
        for (auto& e : row) {
            if (e == 0) continue;
            if (e < 0)
                for (auto& r2 : c)
                    for (auto& e2 : r2) e2 = -e2;
            done = true;
            break;
        }
        if (done) break;
    }
    ParamForms pf;
    pf.fx = BinaryForm(2, {c[0][0], c[0][1], c[0][2]});
    pf.fy = BinaryForm(2, {c[1][0], c[1][1], c[1][2]});
    pf.fz = BinaryForm(2, {c[2][0], c[2][1], c[2][2]});
    pf.det_c = c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) -
               c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
               c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
    BigInt D = 0;
    for (auto& row : c)
        for (auto& e : row) D = gcd(D, e);
    pf.entry_gcd = D;
    if (pf.det_c == 0) throw internal_error("parametrize: singular coefficient matrix");
    BigInt k_range = exact_div(pf.det_c, D * D);
    pf.k_candidates = positive_divisors(k_range);
    if (!q0.compose(pf.fx, pf.fy, pf.fz).is_zero())
        throw internal_error("parametrize: composition identity violated");
    return pf;
}

QuarticForms quartic_forms(const TernaryQuadratic& q1, const TernaryQuadratic& q2,
                           const ParamForms& pf) {
    QuarticForms out;
    out.f1 = q1.compose(pf.fx, pf.fy, pf.fz);
    out.f2 = q2.compose(pf.fx, pf.fy, pf.fz);
    out.f2_zero = out.f2.is_zero();
    out.proportional = out.f1.proportional_to(out.f2);
    return out;
}

BigInt index_form_value(const ReductionProblem& prob, const ElementTriple& e) {
    auto [q1, q2] = quadratic_forms(prob.f);
    BinaryForm f = cubic_resolvent(prob.f);
    return f.eval(q1.eval(e.c1, e.c2, e.c3), q2.eval(e.c1, e.c2, e.c3));
}

std::set<ElementTriple> generators_for_uv(const ReductionProblem& prob, const BigInt& u,
                                          const BigInt& v, unsigned long search_bound,
                                          BranchDiagnostics* diag) {
    BinaryForm f = cubic_resolvent(prob.f);
    BigInt fv = f.eval(u, v);
    if (fv != prob.i_m && fv != -prob.i_m)
        throw std::invalid_argument("generators_for_uv: F(u,v) != +-i_m");
    auto [q1, q2] = quadratic_forms(prob.f);
    TernaryQuadratic q0 = q_zero(u, v, q1, q2);

    std::set<ElementTriple> out;
    auto try_triple = [&](const ElementTriple& raw) {
        ElementTriple e = raw.canonical();
        BigInt val = f.eval(q1.eval(e.c1, e.c2, e.c3), q2.eval(e.c1, e.c2, e.c3));
        if (val != prob.i_m && val != -prob.i_m)
            throw internal_error("generators_for_uv: candidate fails index verification");
        out.insert(e);
    };

    if (auto killed = certify_no_zero(q0)) {
        if (diag) diag->insoluble_modulus = killed;
        return out;
    }
    std::optional<std::array<BigInt, 3>> zero;
    for (unsigned long zb : {512UL, 2048UL, 8192UL}) {
        zero = nontrivial_zero(q0, zb);
        if (zero) break;
    }
    if (!zero) throw escalation_error("generators_for_uv: no conic point within internal bounds");
    if (diag) diag->zero = zero;

    // solutions proportional to the base point: (Q1, Q2)(s * zero) = +-(u, v)
    BigInt q1z = q1.eval((*zero)[0], (*zero)[1], (*zero)[2]);
    BigInt q2z = q2.eval((*zero)[0], (*zero)[1], (*zero)[2]);
    for (int sgn : {1, -1}) {
        BigInt tu = sgn * u, tv = sgn * v;
        BigInt s2;
        if (q1z != 0) {
            if (!divides(q1z, tu)) continue;
            s2 = exact_div(tu, q1z);
            if (s2 * q2z != tv) continue;
        } else if (q2z != 0) {
            if (tu != 0 || !divides(q2z, tv)) continue;
            s2 = exact_div(tv, q2z);
        } else {
            continue;
        }
        if (s2 <= 0) continue;
        auto s = integer_sqrt_exact(s2);
        if (!s) continue;
        try_triple({*s * (*zero)[0], *s * (*zero)[1], *s * (*zero)[2]});
    }

    ParamForms pf = parametrize(q0, *zero);
    if (diag) diag->params = pf;
    QuarticForms qf = quartic_forms(q1, q2, pf);
    if (diag) diag->forms = qf;

    long b = static_cast<long>(search_bound);
    for (long p = 0; p <= b; ++p) {
        long qlo = (p == 0) ? 1 : -b, qhi = (p == 0) ? 1 : b;
        for (long q = qlo; q <= qhi; ++q) {
            if (p > 0 && std::gcd(static_cast<unsigned long>(p), static_cast<unsigned long>(q < 0 ? -q : q)) != 1)
                continue;
            BigInt f1v = qf.f1.eval(p, q), f2v = qf.f2.eval(p, q);
            for (const BigInt& k : pf.k_candidates) {
                BigInt k2 = k * k;
                bool plus = (f1v == k2 * u && f2v == k2 * v);
                bool minus = (f1v == -k2 * u && f2v == -k2 * v);
                if (!plus && !minus) continue;
                BigInt fx = pf.fx.eval(p, q), fy = pf.fy.eval(p, q), fz = pf.fz.eval(p, q);
                if (!divides(k, fx) || !divides(k, fy) || !divides(k, fz)) continue;
                if (diag) diag->pq_solutions.emplace_back(BigInt(p), BigInt(q));
                try_triple({exact_div(fx, k), exact_div(fy, k), exact_div(fz, k)});
            }
        }
    }
    return out;
}

}  // namespace pib4
