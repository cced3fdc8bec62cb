#pragma once

#include <gmpxx.h>

#include <string>

namespace grpdet {

/** Arbitrary-precision integer used throughout. */
using Int = mpz_class;

/** b^e with e >= 0. */
Int pow_int(const Int& b, unsigned long e);

/** Remainder in [0, m) for m > 0 (sign of a irrelevant). */
Int mod_floor(const Int& a, const Int& m);
long mod_floor(long a, long m);

/** Multiplicative order of r modulo the odd prime p; requires p ∤ r. */
unsigned ord_mod(unsigned r, unsigned p);

/** True iff d divides a (d != 0). */
bool divides(const Int& d, const Int& a);

/** Largest k with q^k | a, for a != 0 and q >= 2. */
unsigned valuation(const Int& a, const Int& q);

bool is_perfect_square(const Int& a);

/** Integer square root of a perfect square. */
Int sqrt_exact(const Int& a);

/** Kronecker symbol (a|b). */
int kronecker(const Int& a, const Int& b);

std::string to_string(const Int& v);

} // namespace grpdet
