#pragma once

#include "grpdet/cyclotomic.hpp"
#include "grpdet/integer.hpp"

#include <vector>

namespace grpdet {

/**
 * Exact determinant of an integer matrix by fraction-free Bareiss
 * elimination (one-step condensation with exact divisions).
 */
Int bareiss_det(std::vector<std::vector<Int>> m);

/**
 * Division-free determinant over Z[w]: Laplace expansion down the rows with
 * minors memoized by column subset, O(2^n * n) ring products.  Intended for
 * the small n (<= 6) block determinants.
 */
CyclotomicInt cyclo_det(const std::vector<std::vector<CyclotomicInt>>& m);

/** Resultant of two integer polynomials (coefficient vectors, low degree first). */
Int resultant(const std::vector<Int>& f, const std::vector<Int>& g);

/**
 * Res((x^s - 1)/(x - 1), (x^(n-s) - 1)/(x - 1)) for 1 <= s < n:
 * equals 1 when gcd(s, n) = 1 and 0 otherwise.
 */
Int cyclo_resultant(unsigned s, unsigned n);

} // namespace grpdet
