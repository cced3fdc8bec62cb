#pragma once

#include "grpdet/cyclotomic.hpp"
#include "grpdet/group.hpp"

#include <vector>

namespace grpdet {

/**
 * Factored determinant data for an element of Z[G]: D = A * B^n, where A is
 * the n x n circulant determinant of the f_j(1) and B is the (rational
 * integer) product of the block determinants taken over the coset
 * representatives of <r> in Z_p^*.
 */
struct DetReport {
    GroupSpec group;
    Int A;
    std::vector<CyclotomicInt> B_blocks;  // one per coset representative, same order
    Int B;
    Int D;
};

/**
 * Reference determinant: det(a_{g h^-1}) over the full group, rows and
 * columns ordered lexicographically by (i, j) of X^i Y^j.
 */
Int direct_determinant(const GroupRingElement& e, const GroupSpec& g);

/** Circulant determinant of (f_0(1), ..., f_{n-1}(1)); equals the product of F(1,y) over y^n = 1. */
Int circulant_A(const GroupRingElement& e, const GroupSpec& g);

/** The n x n block matrix at w^j: entry (i,k) = f_{(k-i) mod n}(w^(j * r^i)). */
std::vector<std::vector<CyclotomicInt>> block_B_matrix(const GroupRingElement& e,
                                                       const GroupSpec& g, unsigned j);

/** Determinant of block_B_matrix(e, g, j). */
CyclotomicInt block_B(const GroupRingElement& e, const GroupSpec& g, unsigned j);

/**
 * Determinant of the block matrix with row 0 replaced by all ones: the
 * multiplier picked up by shifted constructions (one per conjugate row).
 */
CyclotomicInt block_B_row_of_ones(const GroupRingElement& e, const GroupSpec& g, unsigned j);

/** Full factored computation; raises internal_error if the block product is irrational. */
DetReport factored_determinant(const GroupRingElement& e, const GroupSpec& g);

} // namespace grpdet
