#include "pib4/intfactor.hpp"

#include <algorithm>
#include <map>

namespace pib4 {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned long r) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

BigInt pollard_rho(const BigInt& n, unsigned long seed) {
    // Brent's cycle detection with batched gcd.
    BigInt y = 2 + seed, c = 1 + seed, m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
        BigInt k = 0;
        while (k < r && g == 1) {
            ys = y;
            BigInt lim = std::min(m, BigInt(r - k));
            for (BigInt i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * pib4::abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            g = gcd(pib4::abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void factor_recursive(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        BigInt r = floor_sqrt(n);
        factor_recursive(r, out);
        factor_recursive(r, out);
        return;
    }
    BigInt d = n;
    for (unsigned long seed = 0; d == n; ++seed) d = pollard_rho(n, seed);
    factor_recursive(d, out);
    factor_recursive(exact_div(n, d), out);
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    static const unsigned long witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long w : witnesses) {
        if (n == w) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
    }
    BigInt d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long w : witnesses)
        if (miller_rabin_witness(n, BigInt(w), d, r)) return false;
    return true;
}

std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero input");
    BigInt m = pib4::abs(n);
    std::map<BigInt, unsigned> acc;
    for (unsigned long p = 2; p <= kTrialLimit && m > 1; p = (p == 2) ? 3 : p + 2) {
        if (BigInt(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            acc[BigInt(p)]++;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    factor_recursive(m, acc);
    acc.erase(BigInt(1));
    return {acc.begin(), acc.end()};
}

bool squarefree_integer(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("squarefree_integer: zero input");
    BigInt m = pib4::abs(n);
    if (m == 1) return true;
    for (unsigned long p = 2; p <= kTrialLimit; p = (p == 2) ? 3 : p + 2) {
        if (BigInt(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
        }
    }
    if (m == 1 || is_probable_prime(m)) return true;
    if (mpz_perfect_square_p(m.get_mpz_t())) return false;
    for (auto& [p, e] : factor_integer(m))
        if (e > 1) return false;
    return true;
}

std::vector<BigInt> positive_divisors(const BigInt& n) {
    auto fac = factor_integer(n);
    std::vector<BigInt> divs{1};
    for (auto& [p, e] : fac) {
        size_t sz = divs.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace pib4
