#pragma once

#include "grpdet/cyclotomic.hpp"
#include "grpdet/group.hpp"
#include "grpdet/integer.hpp"

#include <string>
#include <utility>

namespace grpdet {

/**
 * QuadField: the quadratic subfield Q(sqrt(eps*p)) of Q(w_p), where eps = +1
 * for p = 1 mod 4 and eps = -1 otherwise, so that d = eps*p = 1 mod 4.
 * Integers are written a + b*theta0 with theta0 = (1 + sqrt(eps*p))/2.
 */
struct QuadField {
    unsigned p = 0;
    int eps = 1;

    explicit QuadField(unsigned p_);
    Int d() const { return Int(eps) * Int(p); }
    bool operator==(const QuadField& o) const { return p == o.p && eps == o.eps; }
};

/** a + b*theta0, an algebraic integer of the quadratic field f. */
class QuadInt {
public:
    QuadInt(const QuadField& f, Int a, Int b);

    const QuadField& field() const { return f_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator*(const QuadInt& o) const;
    QuadInt operator-() const;
    QuadInt operator*(const Int& s) const;
    bool operator==(const QuadInt& o) const;
    bool operator!=(const QuadInt& o) const { return !(*this == o); }

    /** Field conjugate: theta0 -> 1 - theta0. */
    QuadInt conj() const;
    /** a^2 + a*b + b^2*(1 - eps*p)/4. */
    Int norm() const;
    Int trace() const { return 2 * a_ + b_; }
    bool is_unit() const;

    /** Image in Z[w] under theta0 = 1 + sum of w^v over the squares v mod p. */
    CyclotomicInt to_cyclotomic() const;

    /** e.g. "-1 + 2*theta0(13,+1)". */
    std::string to_string() const;

private:
    QuadField f_;
    Int a_, b_;
};

/** theta0 as a cyclotomic integer: 1 + sum over quadratic residues of w^v. */
CyclotomicInt theta0_cyclotomic(unsigned p);

/**
 * Gauss sum of a half-index group (n = (p-1)/2): sum of w^(r^i) for i < n,
 * returned both as a cyclotomic integer and in the quadratic field, where it
 * equals (-1 + sqrt(eps*p))/2 = -1 + theta0.
 */
std::pair<CyclotomicInt, QuadInt> gauss_sum(const GroupSpec& g);

/**
 * Express x in the quadratic subfield.  x must be fixed by every conjugation
 * w -> w^u with u a nonzero square mod p; otherwise NotInSubfield is raised.
 */
QuadInt quad_embed(const CyclotomicInt& x, const QuadField& f);

/**
 * Fundamental unit (> 1) of the real quadratic field, found on the continued
 * fraction expansion of theta0 and verified by a norm check.
 */
QuadInt fundamental_unit(const QuadField& f);

} // namespace grpdet
