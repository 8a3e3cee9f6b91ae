#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pib4 {

/// Arbitrary-precision signed integer. gmp keeps a canonical zero, so the
/// value semantics required here (exactness, no negative zero) come for free.
using BigInt = mpz_class;

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b, const BigInt& c) {
    return gcd(gcd(a, b), c);
}

inline bool divides(const BigInt& d, const BigInt& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient a/b, required to be exact.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0 || !divides(b, a))
        throw std::domain_error("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline BigInt pow_ui(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline BigInt abs(const BigInt& a) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/// s with s*s == n if n is a perfect square, empty otherwise. Negative n is an error.
inline std::optional<BigInt> integer_sqrt_exact(const BigInt& n) {
    if (n < 0) throw std::invalid_argument("integer_sqrt_exact: negative input");
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return root;
}

inline BigInt floor_sqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline long to_long(const BigInt& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("BigInt does not fit in long");
    return n.get_si();
}

}  // namespace pib4
