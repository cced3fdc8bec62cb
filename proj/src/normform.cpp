#include "grpdet/normform.hpp"

#include "grpdet/error.hpp"
#include "grpdet/factorize.hpp"

#include <algorithm>

namespace grpdet {

namespace {

bool congruence_holds(const QuadInt& z, const Int& m) {
    const Int p(z.field().p);
    Int want = mod_floor(m + z.b() * ((p - 1) / 2), p);
    return mod_floor(z.a(), p) == want;
}

} // namespace

std::vector<QuadInt> norm_solutions_imaginary(const QuadField& f, const Int& c) {
    if (f.eps != -1) throw value_error("norm_solutions_imaginary: field is real");
    std::vector<QuadInt> out;
    if (c < 0) return out;  // the form x^2 + xy + ((1+p)/4) y^2 is positive definite
    if (c == 0) {
        out.emplace_back(f, 0, 0);
        return out;
    }
    // (2x + y)^2 + p y^2 = 4c
    Int ylim = sqrt(4 * c / Int(f.p));
    for (Int y = -ylim; y <= ylim; ++y) {
        Int rhs = 4 * c - Int(f.p) * y * y;
        if (rhs < 0 || !is_perfect_square(rhs)) continue;
        Int s = sqrt_exact(rhs);
        for (int sgn : {1, -1}) {
            Int twox = sgn * s - y;
            if (!mpz_even_p(twox.get_mpz_t())) continue;
            QuadInt z(f, twox / 2, y);
            if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
            if (s == 0) break;
        }
    }
    return out;
}

QuadInt real_prime_element(const QuadField& f, const Int& q) {
    if (f.eps != 1) throw value_error("real_prime_element: field is imaginary");
    const Int D = f.d();
    // scan |N(x + y*theta0)| = q by increasing y; terminates because the
    // class number is 1 so q is a norm up to sign
    for (Int y = 0; y <= 4 * sqrt(q) + 4096; ++y) {
        for (int target : {1, -1}) {
            // x^2 + xy + y^2 (1-D)/4 = target*q  =>  (2x+y)^2 = D y^2 + 4 target q
            Int rhs = D * y * y + 4 * target * q;
            if (rhs < 0 || !is_perfect_square(rhs)) continue;
            Int s = sqrt_exact(rhs);
            for (int sgn : {1, -1}) {
                Int twox = sgn * s - y;
                if (!mpz_even_p(twox.get_mpz_t())) continue;
                return QuadInt(f, twox / 2, y);
            }
        }
    }
    throw internal_error("real_prime_element: no representation found within scan bound");
}

unsigned long unit_orbit_period(const QuadField& f) {
    const Int p(f.p);
    QuadInt u = fundamental_unit(f);
    QuadInt step = u * u;  // norm +1, keeps the norm of the orbit fixed
    QuadInt acc(f, 1, 0);
    for (unsigned long k = 1; k <= 4ul * f.p * f.p; ++k) {
        acc = acc * step;
        if (mod_floor(acc.a(), p) == 1 && mod_floor(acc.b(), p) == 0) return k;
    }
    throw internal_error("unit_orbit_period: period not found");
}

NormSolveResult solve_norm_congruence(const QuadField& f, const Int& c, const Int& m,
                                      unsigned long orbit_bound) {
    if (c == 0) throw value_error("solve_norm_congruence: c must be nonzero");
    if (f.eps == -1) {
        for (const QuadInt& z : norm_solutions_imaginary(f, c))
            if (congruence_holds(z, m)) return {z, true};
        return {std::nullopt, true};
    }

    // Real field: build the principal generators of the ideals of norm |c|.
    const Int p(f.p);
    Factorization fac = factorize(c);
    std::vector<QuadInt> partials{QuadInt(f, 1, 0)};
    for (const auto& [q, e] : fac.primes) {
        int chi = (q == p) ? 0 : kronecker(f.d(), q);
        if (chi == -1) {
            if (e % 2) return {std::nullopt, true};  // inert prime with odd exponent
            Int ql = pow_int(q, e / 2);
            for (auto& z : partials) z = z * ql;
            continue;
        }
        QuadInt pi = real_prime_element(f, q);
        if (chi == 0) {
            QuadInt pe(f, 1, 0);
            for (unsigned i = 0; i < e; ++i) pe = pe * pi;
            for (auto& z : partials) z = z * pe;
            continue;
        }
        // split: distribute exponents over the two conjugate primes
        std::vector<QuadInt> next;
        QuadInt pibar = pi.conj();
        for (unsigned a = 0; a <= e; ++a) {
            QuadInt w(f, 1, 0);
            for (unsigned i = 0; i < a; ++i) w = w * pi;
            for (unsigned i = 0; i < e - a; ++i) w = w * pibar;
            for (const auto& z : partials) next.push_back(z * w);
        }
        partials = std::move(next);
    }

    QuadInt u = fundamental_unit(f);
    QuadInt step = u * u;
    unsigned long period = unit_orbit_period(f);
    unsigned long scan = period;
    bool exact = true;
    if (orbit_bound > 0 && orbit_bound < period) {
        scan = orbit_bound;
        exact = false;
    }
    QuadInt step_inv = step.conj();  // norm(step) = 1 so conj is the inverse
    for (QuadInt base : partials) {
        if (base.norm() != c) base = base * u;  // flip the norm sign with the unit
        if (base.norm() != c)
            throw internal_error("solve_norm_congruence: generator has wrong norm");
        // scan beta = ±u^(2k) * base over one full coordinate period mod p
        for (int sgn : {1, -1}) {
            QuadInt z = sgn > 0 ? base : -base;
            for (unsigned long k = 0; k < scan; ++k) {
                if (congruence_holds(z, m)) return {z, exact};
                z = z * step;
            }
            // also walk backwards when the period was capped
            if (!exact) {
                z = (sgn > 0 ? base : -base) * step_inv;
                for (unsigned long k = 0; k < scan; ++k) {
                    if (congruence_holds(z, m)) return {z, exact};
                    z = z * step_inv;
                }
            }
        }
    }
    return {std::nullopt, exact};
}

} // namespace grpdet
