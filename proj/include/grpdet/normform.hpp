#pragma once

#include "grpdet/quadratic.hpp"

#include <optional>

namespace grpdet {

/**
 * Outcome of a norm-form search.  When no solution is found, `exact` tells
 * whether the search space was covered completely (definitely none) or a
 * configured scan bound was hit first (undecided).
 */
struct NormSolveResult {
    std::optional<QuadInt> solution;
    bool exact = true;
};

/**
 * Find beta = x + y*theta0 with norm(beta) = c and x = m + y*(p-1)/2 (mod p).
 *
 * Imaginary fields (eps = -1) are positive definite and are searched
 * directly and completely.  The real field (p = 13) factors (c) into prime
 * ideals (class number 1), builds the finitely many generators up to units,
 * and scans each unit orbit over one full period of the coordinates mod p,
 * so the default decision is exact; orbit_bound > 0 caps the scanned period
 * and may leave the query undecided.
 */
NormSolveResult solve_norm_congruence(const QuadField& f, const Int& c, const Int& m,
                                      unsigned long orbit_bound = 0);

/** All (x, y) with x^2 + xy + y^2*(1-d)/4 = c in an imaginary field. */
std::vector<QuadInt> norm_solutions_imaginary(const QuadField& f, const Int& c);

/** Some beta with |norm(beta)| = q (q prime, split or ramified) in a real field. */
QuadInt real_prime_element(const QuadField& f, const Int& q);

/** Period of the coordinates mod p along the orbit beta -> u^2 * beta. */
unsigned long unit_orbit_period(const QuadField& f);

} // namespace grpdet
