#pragma once

#include "grpdet/integer.hpp"

#include <string>
#include <vector>

namespace grpdet {

/**
 * CyclotomicInt: an element of Z[w] with w a primitive p-th root of unity,
 * p an odd prime.  Stored on the power basis 1, w, ..., w^(p-2); any w^(p-1)
 * arising in arithmetic is eagerly rewritten as -(1 + w + ... + w^(p-2)),
 * so the representation is canonical and equality is coefficient-wise.
 */
class CyclotomicInt {
public:
    /** Zero in Z[w_p]. */
    explicit CyclotomicInt(unsigned p);

    static CyclotomicInt integer(unsigned p, const Int& v);
    /** w^k (k may be any integer; exponents are taken mod p). */
    static CyclotomicInt root_power(unsigned p, long k);

    unsigned prime() const { return p_; }
    const Int& coeff(unsigned k) const;
    void set_coeff(unsigned k, const Int& v);

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;
    CyclotomicInt operator*(const Int& s) const;
    CyclotomicInt& operator+=(const CyclotomicInt& o);
    CyclotomicInt& operator*=(const CyclotomicInt& o);
    bool operator==(const CyclotomicInt& o) const;
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    /** Galois conjugate w -> w^j; requires p ∤ j. */
    CyclotomicInt conjugate(long j) const;

    bool is_zero() const;
    bool is_rational_integer() const;
    /** The value when is_rational_integer() holds. */
    Int rational_value() const;

    /** Readable form, e.g. "2*w^6 + w - w^4" renders as "2*w^6 - w^4 + w". */
    std::string to_string() const;

private:
    unsigned p_;
    std::vector<Int> c_;  // length p-1
};

/** f(w^j) for an integer polynomial f (coefficient vector, degree < p). */
CyclotomicInt eval_at_root(const std::vector<Int>& f, unsigned p, long j);

} // namespace grpdet
