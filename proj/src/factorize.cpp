#include "grpdet/factorize.hpp"

#include "grpdet/error.hpp"

#include <algorithm>
#include <map>

namespace grpdet {

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [q, e] : primes) v *= pow_int(q, e);
    return v;
}

namespace {

Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool strong_probable_prime(const Int& n, const Int& base) {
    Int d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    Int x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    static const unsigned long small[] = {2,  3,  5,  7,  11, 13,
                                          17, 19, 23, 29, 31, 37};
    for (unsigned long q : small) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }
    for (unsigned long q : small)
        if (!strong_probable_prime(n, Int(q))) return false;
    // Exact below 3.3e24 (Sorenson-Webster); add random rounds beyond that.
    static const Int exact_bound("3317044064679887385961981");
    if (n < exact_bound) return true;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    for (int i = 0; i < 40; ++i) {
        Int base = rng.get_z_range(n - 3) + 2;
        if (!strong_probable_prime(n, base)) return false;
    }
    return true;
}

namespace {

/** Pollard rho, Brent's cycle variant; n odd composite, not a prime power of a small prime. */
Int pollard_brent(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x9E3779B9ul);
    while (true) {
        Int y = rng.get_z_range(n - 1) + 1;
        Int c = rng.get_z_range(n - 1) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // perfect powers shortcut keeps rho off prime powers
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::map<Int, unsigned> sub;
                factor_rec(root, sub);
                for (const auto& [q, e] : sub) out[q] += e * k;
                return;
            }
        }
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(const Int& n) {
    if (n == 0) throw value_error("factorize: argument is zero");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Int rest = abs(n);
    std::map<Int, unsigned> acc;
    for (unsigned long q = 2; q <= 1000000ul && rest > 1; q += (q == 2 ? 1 : 2)) {
        if (q * q > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), q));
            acc[Int(q)] = e;
        }
    }
    if (rest > 1) factor_rec(rest, acc);
    f.primes.assign(acc.begin(), acc.end());
    return f;
}

std::vector<Int> kth_power_divisors(const Factorization& f, unsigned k) {
    if (k == 0) throw value_error("kth_power_divisors: k must be positive");
    std::vector<Int> out{1};
    for (const auto& [q, e] : f.primes) {
        unsigned top = e / k;
        if (top == 0) continue;
        std::vector<Int> next;
        Int qp = 1;
        for (unsigned a = 0; a <= top; ++a) {
            for (const Int& d : out) next.push_back(d * qp);
            qp *= q;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace grpdet
