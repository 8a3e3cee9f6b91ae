#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pib4/bigint.hpp"

namespace pib4 {

/// Deterministic Miller-Rabin with the witness set {2,...,37}; proven
/// deterministic below 3.317e24, which covers everything the families reach.
bool is_probable_prime(const BigInt& n);

/// Prime factorization of |n|, n != 0: trial division to 1e6, then Pollard rho
/// with Miller-Rabin on the cofactors. Pairs (prime, exponent), primes ascending.
std::vector<std::pair<BigInt, unsigned>> factor_integer(const BigInt& n);

/// True iff no prime square divides |n|. n == 0 is an error.
bool squarefree_integer(const BigInt& n);

/// All positive divisors of |n|, ascending. n == 0 is an error.
std::vector<BigInt> positive_divisors(const BigInt& n);

}  // namespace pib4
