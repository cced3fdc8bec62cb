#include "grpdet/integer.hpp"

#include "grpdet/error.hpp"

namespace grpdet {

Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

unsigned ord_mod(unsigned r, unsigned p) {
    if (r % p == 0) throw value_error("ord_mod: r divisible by p");
    unsigned long x = r % p;
    unsigned k = 1;
    unsigned long acc = x;
    while (acc != 1) {
        acc = (acc * x) % p;
        ++k;
        if (k > p) throw internal_error("ord_mod: no order found");
    }
    return k;
}

bool divides(const Int& d, const Int& a) {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

unsigned valuation(const Int& a, const Int& q) {
    if (a == 0) throw value_error("valuation: argument is zero");
    Int rest = abs(a);
    unsigned k = 0;
    Int quo;
    while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(quo.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
        mpz_swap(quo.get_mpz_t(), rest.get_mpz_t());
        ++k;
    }
    return k;
}

bool is_perfect_square(const Int& a) {
    if (a < 0) return false;
    return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

Int sqrt_exact(const Int& a) {
    if (!is_perfect_square(a)) throw value_error("sqrt_exact: not a perfect square");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

int kronecker(const Int& a, const Int& b) {
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

std::string to_string(const Int& v) { return v.get_str(); }

} // namespace grpdet
