#pragma once

#include "grpdet/integer.hpp"

#include <utility>
#include <vector>

namespace grpdet {

/** Sign and prime-power decomposition of a nonzero integer. */
struct Factorization {
    int sign = 1;                                  // +1 or -1
    std::vector<std::pair<Int, unsigned>> primes;  // ascending primes, exponents >= 1

    Int value() const;
};

/**
 * Primality test: deterministic Miller-Rabin over the first twelve prime
 * bases, which is exact below 3.3e24; larger inputs additionally run random
 * strong-pseudoprime rounds.
 */
bool is_prime(const Int& n);

/** Factor n != 0: trial division up to 1e6, then Pollard rho (Brent). */
Factorization factorize(const Int& n);

/** All c >= 1 with c^k | |f|, ascending; k >= 1. */
std::vector<Int> kth_power_divisors(const Factorization& f, unsigned k);

} // namespace grpdet
