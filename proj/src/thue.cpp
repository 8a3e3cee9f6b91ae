#include "pib4/thue.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <numeric>

#include "pib4/intfactor.hpp"

namespace pib4 {

namespace {

std::pair<BigInt, BigInt> canonical_pair(BigInt p, BigInt q) {
    if (p < 0 || (p == 0 && q < 0)) return {-p, -q};
    return {std::move(p), std::move(q)};
}

// Shared coprimality mask for the scan rectangle: bit (p-1)*(2B+1) + (q+B)
// set iff gcd(p, |q|) == 1, for 1 <= p <= B, -B <= q <= B.
const std::vector<uint8_t>& coprime_mask(unsigned long bound) {
    static std::mutex mu;
    static std::map<unsigned long, std::vector<uint8_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bound);
    if (it != cache.end()) return it->second;
    unsigned long w = 2 * bound + 1;
    std::vector<uint8_t> mask(bound * w, 0);
    for (unsigned long p = 1; p <= bound; ++p)
        for (long q = -static_cast<long>(bound); q <= static_cast<long>(bound); ++q)
            mask[(p - 1) * w + static_cast<unsigned long>(q + static_cast<long>(bound))] =
                std::gcd(p, static_cast<unsigned long>(q < 0 ? -q : q)) == 1;
    return cache.emplace(bound, std::move(mask)).first->second;
}

// Exact evaluation in __int128 when coefficients and bound provably cannot
// overflow; otherwise falls back to GMP.
struct FormScanner {
    const BinaryForm& f;
    bool fast = false;
    std::vector<long long> c64;
    __int128 target = 0;
    bool target_fits = false;

    FormScanner(const BinaryForm& form, const BigInt& c, unsigned long bound) : f(form) {
        BigInt maxc = 0;
        for (const auto& a : f.coeffs()) maxc = std::max(maxc, pib4::abs(a));
        BigInt worst = maxc * pow_ui(BigInt(bound == 0 ? 1 : bound), static_cast<unsigned long>(f.degree())) *
                       (f.degree() + 1);
        if (maxc.fits_slong_p() && worst < pow_ui(BigInt(2), 120)) {
            fast = true;
            for (const auto& a : f.coeffs()) c64.push_back(a.get_si());
            BigInt ac = pib4::abs(c);
            if (ac < pow_ui(BigInt(2), 120)) {
                target_fits = true;
                __int128 t = 0;
                BigInt tmp = ac;
                int shift = 0;
                while (tmp != 0) {
                    t |= static_cast<__int128>(mpz_fdiv_ui(tmp.get_mpz_t(), 1UL << 30)) << shift;
                    tmp >>= 30;
                    shift += 30;
                }
                target = (c < 0) ? -t : t;
            }
        }
    }

    bool matches(long p, long q, const BigInt& c) const {
        if (fast) {
            __int128 acc = c64[0];
            __int128 vp = 1;
            for (size_t i = 1; i < c64.size(); ++i) {
                vp *= q;
                acc = acc * p + static_cast<__int128>(c64[i]) * vp;
            }
            if (!target_fits) return false;
            __int128 t = target < 0 ? -target : target;
            return acc == t || acc == -t;
        }
        BigInt v = f.eval(p, q);
        return v == c || v == -c;
    }
};

}  // namespace

void ThueSolutionSet::insert_verified(const BinaryForm& f, const BigInt& p, const BigInt& q) {
    BigInt v = f.eval(p, q);
    if (v != rhs && v != -rhs)
        throw std::logic_error("ThueSolutionSet: pair does not satisfy F = +-c");
    solutions.push_back(canonical_pair(p, q));
}

void ThueSolutionSet::finalize() {
    auto cmppair = [](const std::pair<BigInt, BigInt>& a, const std::pair<BigInt, BigInt>& b) {
        if (int c = cmp(a.first, b.first); c != 0) return c < 0;
        return cmp(a.second, b.second) < 0;
    };
    std::sort(solutions.begin(), solutions.end(), cmppair);
    solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
}

bool ThueSolutionSet::contains(const BigInt& p, const BigInt& q) const {
    auto c = canonical_pair(p, q);
    return std::find(solutions.begin(), solutions.end(), c) != solutions.end();
}

ThueSolutionSet solve_bounded(const BinaryForm& f, const BigInt& c, unsigned long bound,
                              unsigned threads) {
    ThueSolutionSet out;
    out.rhs = c;
    out.completeness = Completeness::BoundedSearch;
    out.bound = bound;
    // axis pairs are always probed, even at bound 0
    for (auto [p, q] : {std::pair<long, long>{1, 0}, {0, 1}}) {
        BigInt v = f.eval(p, q);
        if (v == c || v == -c) out.insert_verified(f, p, q);
    }
    if (bound >= 1) {
        FormScanner scan(f, c, bound);
        const auto& mask = coprime_mask(bound);
        unsigned long w = 2 * bound + 1;
        long b = static_cast<long>(bound);
        unsigned nw = std::max(1u, threads);
        auto work = [&](long plo, long phi) {
            std::vector<std::pair<BigInt, BigInt>> found;
            for (long p = plo; p < phi; ++p) {
                const uint8_t* row = &mask[static_cast<unsigned long>(p - 1) * w];
                for (long q = -b; q <= b; ++q) {
                    if (!row[q + b]) continue;
                    if (scan.matches(p, q, c)) found.emplace_back(p, q);
                }
            }
            return found;
        };
        std::vector<std::pair<BigInt, BigInt>> all;
        if (nw == 1) {
            all = work(1, b + 1);
        } else {
            std::vector<std::future<std::vector<std::pair<BigInt, BigInt>>>> futs;
            long chunk = (b + static_cast<long>(nw)) / static_cast<long>(nw);
            for (unsigned i = 0; i < nw; ++i) {
                long lo = 1 + static_cast<long>(i) * chunk;
                long hi = std::min(b + 1, lo + chunk);
                if (lo >= hi) continue;
                futs.push_back(std::async(std::launch::async, work, lo, hi));
            }
            for (auto& fu : futs) {
                auto part = fu.get();
                all.insert(all.end(), part.begin(), part.end());
            }
        }
        for (auto& [p, q] : all) out.insert_verified(f, p, q);
    }
    out.finalize();
    return out;
}

ThueSolutionSet solve_reducible(const std::vector<BinaryForm>& linear_factors, const BigInt& c) {
    if (c == 0) throw std::invalid_argument("solve_reducible: c = 0");
    size_t n = linear_factors.size();
    if (n < 2) throw std::invalid_argument("solve_reducible: need degree >= 2");
    for (const auto& l : linear_factors)
        if (l.degree() != 1) throw std::invalid_argument("solve_reducible: non-linear factor");
    // pick two independent forms for the linear solve
    size_t i0 = 0, i1 = n;
    for (size_t j = 1; j < n; ++j) {
        const auto& a = linear_factors[0];
        const auto& b = linear_factors[j];
        if (a.coeff(0) * b.coeff(1) - a.coeff(1) * b.coeff(0) != 0) {
            i1 = j;
            break;
        }
    }
    if (i1 == n) throw std::invalid_argument("solve_reducible: fewer than 2 independent forms");
    BigInt det = linear_factors[i0].coeff(0) * linear_factors[i1].coeff(1) -
                 linear_factors[i0].coeff(1) * linear_factors[i1].coeff(0);

    ThueSolutionSet out;
    out.rhs = c;
    out.completeness = Completeness::Exact;
    std::vector<BigInt> divs = positive_divisors(c);
    // assign signed divisor values to factors i0, i1; remaining factors are checks
    BinaryForm full = linear_factors[0];
    for (size_t j = 1; j < n; ++j) full = full * linear_factors[j];
    for (const BigInt& d0 : divs)
        for (int s0 : {1, -1})
            for (const BigInt& d1 : divs)
                for (int s1 : {1, -1}) {
                    BigInt e0 = s0 * d0, e1 = s1 * d1;
                    // u, v from the 2x2 system  l0 = e0, l1 = e1
                    BigInt un = e0 * linear_factors[i1].coeff(1) - e1 * linear_factors[i0].coeff(1);
                    BigInt vn = linear_factors[i0].coeff(0) * e1 - linear_factors[i1].coeff(0) * e0;
                    if (!divides(det, un) || !divides(det, vn)) continue;
                    BigInt u = exact_div(un, det), v = exact_div(vn, det);
                    if (u == 0 && v == 0) continue;
                    BigInt fv = full.eval(u, v);
                    if (fv == c || fv == -c) out.insert_verified(full, u, v);
                }
    out.finalize();
    return out;
}

ThueSolutionSet solve_linear_quadratic(const BinaryForm& lin, const BinaryForm& quad,
                                       const BigInt& c) {
    if (lin.degree() != 1 || quad.degree() != 2)
        throw std::invalid_argument("solve_linear_quadratic: wrong degrees");
    BinaryForm full = lin * quad;
    ThueSolutionSet out;
    out.rhs = c;
    out.completeness = Completeness::Exact;
    const BigInt &al = lin.coeff(0), &bl = lin.coeff(1);
    BigInt g = gcd(al, bl);
    for (const BigInt& d0 : positive_divisors(c))
        for (int s0 : {1, -1}) {
            BigInt e1 = s0 * d0;
            if (!divides(g, e1)) continue;
            // lin(u, v) = e1: u = u0 + (bl/g) s, v = v0 - (al/g) s
            BigInt x0, y0, gg;
            mpz_gcdext(gg.get_mpz_t(), x0.get_mpz_t(), y0.get_mpz_t(), al.get_mpz_t(), bl.get_mpz_t());
            BigInt scale = exact_div(e1, g);
            BigInt u0 = x0 * scale, v0 = y0 * scale;
            BigInt du = exact_div(bl, g), dv = -exact_div(al, g);
            // quad(u0 + du s, v0 + dv s) = e2, a genuine quadratic in s since
            // the irreducible quad cannot vanish on a rational direction
            const BigInt &qa = quad.coeff(0), &qb = quad.coeff(1), &qc = quad.coeff(2);
            BigInt A = qa * du * du + qb * du * dv + qc * dv * dv;
            BigInt B = 2 * qa * u0 * du + qb * (u0 * dv + v0 * du) + 2 * qc * v0 * dv;
            BigInt C0 = qa * u0 * u0 + qb * u0 * v0 + qc * v0 * v0;
            for (int s2 : {1, -1}) {
                // e1 * e2 = +-c
                BigInt e2num = s2 * c;
                if (!divides(e1, e2num)) continue;
                BigInt e2 = exact_div(e2num, e1);
                BigInt disc = B * B - 4 * A * (C0 - e2);
                if (disc < 0) continue;
                auto root = integer_sqrt_exact(disc);
                if (!root) continue;
                for (int sg : {1, -1}) {
                    BigInt num = -B + sg * *root;
                    if (!divides(2 * A, num)) continue;
                    BigInt s = exact_div(num, 2 * A);
                    BigInt u = u0 + du * s, v = v0 + dv * s;
                    if (u == 0 && v == 0) continue;
                    BigInt fv = full.eval(u, v);
                    if (fv == c || fv == -c) out.insert_verified(full, u, v);
                }
            }
        }
    out.finalize();
    return out;
}

std::optional<unsigned long> definite_bound(const BinaryForm& f, const BigInt& c) {
    if (f.degree() != 4) throw std::invalid_argument("definite_bound: degree != 4");
    const BigInt &c0 = f.coeff(0), &c1 = f.coeff(1), &c2 = f.coeff(2), &c3 = f.coeff(3), &c4 = f.coeff(4);
    // AM-GM: |p^3 q| <= (3p^4 + q^4)/4, |p q^3| <= (p^4 + 3q^4)/4, p^2q^2 <= (p^4 + q^4)/2
    BigInt neg2 = c2 < 0 ? -c2 : BigInt(0);
    BigInt m1 = 4 * c0 - 3 * pib4::abs(c1) - pib4::abs(c3) - 2 * neg2;
    BigInt m2 = 4 * c4 - pib4::abs(c1) - 3 * pib4::abs(c3) - 2 * neg2;
    if (m1 <= 0 || m2 <= 0) return std::nullopt;
    // 4|F| >= m1 p^4 + m2 q^4, so |p| <= (4|c|/m1)^(1/4), similarly for q
    BigInt lim = 4 * pib4::abs(c);
    BigInt b1, b2;
    mpz_root(b1.get_mpz_t(), BigInt(lim / m1).get_mpz_t(), 4);
    mpz_root(b2.get_mpz_t(), BigInt(lim / m2).get_mpz_t(), 4);
    BigInt b = std::max(b1, b2);
    return b.fits_ulong_p() ? std::optional<unsigned long>(b.get_ui()) : std::nullopt;
}

ThueSolutionSet solve(const BinaryForm& f, const BigInt& c, unsigned long bound, unsigned threads) {
    if (c == 0) throw std::invalid_argument("thue::solve: c = 0");
    if (f.degree() != 3 && f.degree() != 4)
        throw std::invalid_argument("thue::solve: degree outside {3,4}");
    FormFactorization fac = factor_form(f);
    bool all_linear = std::all_of(fac.factors.begin(), fac.factors.end(),
                                  [](const BinaryForm& g) { return g.degree() == 1; });
    if (all_linear) {
        // content must divide c; otherwise no solutions, still exact
        if (divides(fac.content, c)) {
            ThueSolutionSet s = solve_reducible(fac.factors, exact_div(c, fac.content));
            s.rhs = c;
            return s;
        }
        ThueSolutionSet s;
        s.rhs = c;
        s.completeness = Completeness::Exact;
        return s;
    }
    if (f.degree() == 3 && fac.factors.size() == 2) {
        const BinaryForm& lin = fac.factors[0].degree() == 1 ? fac.factors[0] : fac.factors[1];
        const BinaryForm& quad = fac.factors[0].degree() == 2 ? fac.factors[0] : fac.factors[1];
        if (lin.degree() == 1 && quad.degree() == 2) {
            if (divides(fac.content, c)) {
                ThueSolutionSet s = solve_linear_quadratic(lin, quad, exact_div(c, fac.content));
                s.rhs = c;
                return s;
            }
            ThueSolutionSet s;
            s.rhs = c;
            s.completeness = Completeness::Exact;
            return s;
        }
    }
    if (f.degree() == 4) {
        if (auto b = definite_bound(f, c)) {
            ThueSolutionSet s = solve_bounded(f, c, *b, threads);
            s.completeness = Completeness::Exact;
            s.bound = 0;
            return s;
        }
        BinaryForm neg = -f;
        if (auto b = definite_bound(neg, c)) {  // negative definite forms
            ThueSolutionSet s = solve_bounded(f, c, *b, threads);
            s.completeness = Completeness::Exact;
            s.bound = 0;
            return s;
        }
    }
    return solve_bounded(f, c, bound, threads);
}

}  // namespace pib4
