#pragma once

#include "grpdet/integer.hpp"

#include <string>
#include <vector>

namespace grpdet {

/**
 * GroupSpec: the metacyclic group Z_p x| Z_n of order p*n, presented as
 *   X^p = Y^n = 1,  Y X Y^{-1} = X^r,  with ord_p(r) = n and n | p-1.
 * Monomials X^i Y^j (0 <= i < p, 0 <= j < n) form the canonical basis; the
 * rewriting rule is (X^i Y^j)(X^k Y^l) = X^(i + k r^j) Y^(j+l).
 */
struct GroupSpec {
    unsigned p = 0;
    unsigned r = 0;
    unsigned n = 0;
    unsigned t = 0;                     // (p-1)/n, the number of determinant blocks
    std::vector<unsigned> coset_reps;   // least member of each coset of <r> in Z_p^*, ascending
    std::string name;                   // conventional name when recognized, else "Z_p:Z_n"
};

/** Validates p prime, n | p-1, ord_p(r) = n; fills t, coset_reps and name. */
GroupSpec make_group(unsigned p, unsigned r, unsigned n);

/** An element of the integer group ring Z[G], coefficients on the X^i Y^j basis. */
class GroupRingElement {
public:
    GroupRingElement(unsigned p, unsigned n);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    const Int& coeff(unsigned i, unsigned j) const;
    void set_coeff(unsigned i, unsigned j, const Int& v);
    void add_coeff(unsigned i, unsigned j, const Int& v);

    bool operator==(const GroupRingElement& o) const;
    bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

    /** Number of nonzero coefficients. */
    unsigned support() const;

private:
    unsigned p_, n_;
    std::vector<Int> a_;  // index i*n_ + j
};

GroupRingElement zero_element(const GroupSpec& g);
GroupRingElement identity_element(const GroupSpec& g);
GroupRingElement monomial(const GroupSpec& g, const Int& c, unsigned i, unsigned j);
/** h(X,Y) = (1 + X + ... + X^(p-1))(1 + Y + ... + Y^(n-1)): all-ones coefficients. */
GroupRingElement all_ones_element(const GroupSpec& g);

GroupRingElement add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement scalar_mul(const Int& c, const GroupRingElement& a);

/** Group ring product, using the rewriting rule of g. */
GroupRingElement mul(const GroupRingElement& a, const GroupRingElement& b, const GroupSpec& g);

/** Column polynomials f_j(x) = sum_i a_{ij} x^i, j = 0..n-1, each of degree < p. */
std::vector<std::vector<Int>> f_components(const GroupRingElement& e, const GroupSpec& g);

/**
 * Element text form: terms "c*X^i*Y^j" joined with +/-, with X^0, Y^0 and
 * exponent 1 suppressed (e.g. "2 + 1*Y + 1*Y^2", "-1*X^2*Y").  The parser
 * accepts arbitrary whitespace, bare monomials ("X^2*Y" meaning 1*X^2*Y),
 * and "0"; exponents must be canonical (i < p, j < n).
 */
GroupRingElement parse_element(const std::string& text, const GroupSpec& g);
std::string render_element(const GroupRingElement& e);

} // namespace grpdet
