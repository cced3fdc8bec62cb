#include "grpdet/conditions.hpp"

#include "grpdet/error.hpp"
#include "grpdet/factorize.hpp"
#include "grpdet/normform.hpp"

#include <algorithm>
#include <sstream>

namespace grpdet {

bool zn_divisibility(const Int& A, unsigned n, std::vector<std::string>* violations) {
    bool ok = true;
    if (n == 1) return ok;
    for (const auto& [q, k] : factorize(Int(n)).primes) {
        if (!divides(q, A)) continue;
        unsigned need = (q == 2 && k >= 2) ? k + 2 : k + 1;
        if (!divides(pow_int(q, need), A)) {
            ok = false;
            if (violations) {
                std::ostringstream os;
                os << "A = " << A << " is divisible by " << q << " but not by " << q << "^"
                   << need << " (forced because " << q << "^" << k << " divides n = " << n << ")";
                violations->push_back(os.str());
            }
        }
    }
    return ok;
}

ConditionReport check_necessary(const GroupSpec& g, const DetReport& rep) {
    ConditionReport r;
    r.zn_ok = zn_divisibility(rep.A, g.n, &r.violations);

    const Int p(g.p);
    r.congruence_ok = mod_floor(rep.B, p) == mod_floor(pow_int(rep.A, g.t), p);
    if (!r.congruence_ok) {
        std::ostringstream os;
        os << "B = " << rep.B << " is not congruent to A^t = " << rep.A << "^" << g.t
           << " modulo " << g.p;
        r.violations.push_back(os.str());
    }

    if (divides(p, rep.D) && !divides(pow_int(p, g.n + 1), rep.D)) {
        r.p_power_ok = false;
        std::ostringstream os;
        os << "D = " << rep.D << " is divisible by " << g.p << " but not by " << g.p << "^"
           << (g.n + 1);
        r.violations.push_back(os.str());
    }
    return r;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Achievable: return "achievable";
        case Status::NotAchievable: return "not-achievable";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

/**
 * All pairs (m, b) with D = m * b^n for even n, scanned with |b| ascending and
 * b > 0 before b < 0.  D must be nonzero.
 */
std::vector<std::pair<Int, Int>> ga_decompositions(const Int& D, unsigned n) {
    std::vector<std::pair<Int, Int>> out;
    Factorization fd = factorize(D);
    for (const Int& bb : kth_power_divisors(fd, n)) {
        Int m = D / pow_int(bb, n);
        out.emplace_back(m, bb);
        out.emplace_back(m, -bb);
    }
    // Smallest |m| first: the canonical certificate pulls as much of D as
    // possible into the power part, which also keeps witness elements small.
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return mpz_cmpabs(x.first.get_mpz_t(), y.first.get_mpz_t()) < 0;
    });
    return out;
}

/** Exact decision for p in {5, 7} with n = p-1: the factorization conditions
 *  are both necessary and sufficient. */
MembershipDecision decide_ga_characterized(unsigned p, const Int& D) {
    const unsigned n = p - 1;
    if (D == 0)
        throw value_error("ZeroInput: the factorization test needs a nonzero determinant"
                          " (zero is always achievable; use member_decide)");
    MembershipDecision dec;
    for (const auto& [m, b] : ga_decompositions(D, n)) {
        if (mod_floor(b - m, Int(p)) != 0) continue;
        if (!zn_divisibility(m, n)) continue;
        dec.status = Status::Achievable;
        dec.m = m;
        dec.b = b;
        std::ostringstream os;
        os << "D = (" << m << ") * (" << b << ")^" << n << " with b = m (mod " << p
           << ") and m admissible for Z_" << n;
        dec.reason = os.str();
        return dec;
    }
    dec.status = Status::NotAchievable;
    std::ostringstream os;
    os << "no factorization D = m * b^" << n << " has b = m (mod " << p
       << ") with m admissible for Z_" << n;
    dec.reason = os.str();
    return dec;
}

/** Partial decision for other Z_p x| Z_(p-1): the factorization test is
 *  necessary, and gcd(m, p-1) = 1 or (p-1)^2 | m is sufficient. */
MembershipDecision member_ga_general(unsigned p, const Int& D) {
    const unsigned n = p - 1;
    if (D == 0)
        throw value_error("ZeroInput: the factorization test needs a nonzero determinant"
                          " (zero is always achievable; use member_decide)");
    MembershipDecision dec;
    bool admissible_exists = false;
    for (const auto& [m, b] : ga_decompositions(D, n)) {
        if (mod_floor(b - m, Int(p)) != 0) continue;
        if (!zn_divisibility(m, n)) continue;
        admissible_exists = true;
        if (gcd(m, Int(n)) == 1 || divides(Int(n) * Int(n), m)) {
            dec.status = Status::Achievable;
            dec.m = m;
            dec.b = b;
            std::ostringstream os;
            os << "D = (" << m << ") * (" << b << ")^" << n
               << ", and m is coprime to n or divisible by n^2";
            dec.reason = os.str();
            return dec;
        }
    }
    if (!admissible_exists) {
        dec.status = Status::NotAchievable;
        std::ostringstream os;
        os << "no factorization D = m * b^" << n << " has b = m (mod " << p
           << ") with m admissible for Z_" << n;
        dec.reason = os.str();
    } else {
        dec.status = Status::Unknown;
        dec.reason = "the necessary factorization exists but no implemented sufficient "
                     "family covers it";
    }
    return dec;
}

} // namespace

bool is_quad_group(const GroupSpec& g) {
    return (g.p == 7 && g.n == 3) || (g.p == 11 && g.n == 5) || (g.p == 13 && g.n == 6);
}

MembershipDecision member_ga5(const Int& D) { return decide_ga_characterized(5, D); }

MembershipDecision member_ga7(const Int& D) { return decide_ga_characterized(7, D); }

MembershipDecision member_quad(const GroupSpec& g, const Int& D, unsigned long orbit_bound) {
    if (!is_quad_group(g))
        throw value_error("UnsupportedGroup: member_quad handles only (p,n) in"
                          " {(7,3), (11,5), (13,6)}");
    if (D == 0)
        throw value_error("ZeroInput: the factorization test needs a nonzero determinant"
                          " (zero is always achievable; use member_decide)");
    const QuadField f(g.p);
    MembershipDecision dec;
    bool truncated = false;
    Factorization fd = factorize(D);
    // Largest norm candidate first, so the certificate has the smallest |m|.
    std::vector<Int> candidates = kth_power_divisors(fd, g.n);
    std::reverse(candidates.begin(), candidates.end());
    for (const Int& cc : candidates) {
        Int m = D / pow_int(cc, g.n);
        if (!zn_divisibility(m, g.n)) continue;
        std::vector<Int> norms{cc};
        if (g.n % 2 == 0 && f.eps == 1) norms.push_back(-cc);
        for (const Int& c : norms) {
            NormSolveResult res = solve_norm_congruence(f, c, m, orbit_bound);
            if (!res.exact) truncated = true;
            if (res.solution) {
                dec.status = Status::Achievable;
                dec.m = m;
                dec.xi = *res.solution;
                std::ostringstream os;
                os << "D = (" << m << ") * N(" << res.solution->to_string() << ")^" << g.n
                   << " with the residue condition satisfied";
                dec.reason = os.str();
                return dec;
            }
        }
    }
    if (truncated) {
        dec.status = Status::Unknown;
        dec.exact = false;
        dec.reason = "unit-orbit search truncated by orbit_bound before covering a full period";
    } else {
        dec.status = Status::NotAchievable;
        std::ostringstream os;
        os << "no factorization D = m * N(xi)^" << g.n
           << " satisfies the residue condition with m admissible for Z_" << g.n;
        dec.reason = os.str();
    }
    return dec;
}

MembershipDecision member_decide(const GroupSpec& g, const Int& D, unsigned long orbit_bound) {
    if (D == 0) {
        MembershipDecision dec;
        dec.status = Status::Achievable;
        dec.reason = "zero is reached by any element whose coefficient sums vanish";
        dec.m = Int(0);
        if (is_quad_group(g))
            dec.xi = QuadInt(QuadField(g.p), 0, 0);
        else
            dec.b = Int(0);
        return dec;
    }
    if (g.p == 5 && g.n == 4) return member_ga5(D);
    if (g.p == 7 && g.n == 6) return member_ga7(D);
    if (is_quad_group(g)) return member_quad(g, D, orbit_bound);
    if (g.n == g.p - 1) return member_ga_general(g.p, D);

    MembershipDecision dec;
    const Int p(g.p);
    if (divides(p, D) && !divides(pow_int(p, g.n + 1), D)) {
        dec.status = Status::NotAchievable;
        std::ostringstream os;
        os << "D is divisible by " << g.p << " but not by " << g.p << "^" << (g.n + 1);
        dec.reason = os.str();
    } else {
        dec.status = Status::Unknown;
        dec.reason = "no full characterization is implemented for this group";
    }
    return dec;
}

} // namespace grpdet
