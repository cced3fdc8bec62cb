#pragma once

#include "grpdet/detengine.hpp"
#include "grpdet/quadratic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace grpdet {

/**
 * Z_n-side divisibility constraint on the circulant factor A: for every prime
 * q with q^k || n, if q | A then q^(k+1) | A, strengthened to 2^(k+2) when
 * q = 2 and k >= 2.  Violations, if requested, are appended as text.
 */
bool zn_divisibility(const Int& A, unsigned n, std::vector<std::string>* violations = nullptr);

/** Outcome of the necessary-condition checks on a factored determinant. */
struct ConditionReport {
    bool zn_ok = true;          // A passes zn_divisibility
    bool congruence_ok = true;  // B = A^t (mod p)
    bool p_power_ok = true;     // p | D implies p^(n+1) | D
    std::vector<std::string> violations;

    bool all_ok() const { return zn_ok && congruence_ok && p_power_ok; }
};

ConditionReport check_necessary(const GroupSpec& g, const DetReport& rep);

/** Membership verdict for "is D an integer group determinant of G?". */
enum class Status { Achievable, NotAchievable, Unknown };

const char* status_name(Status s);

/**
 * Decision plus certificate.  For groups of the form Z_p x| Z_(p-1) the
 * certificate is D = m * b^(p-1); for the half/third/fifth-index quadratic
 * groups it is D = m * N(xi)^n with xi an integer of the quadratic subfield.
 * `exact` is false only when a truncated unit-orbit search (orbit_bound > 0)
 * prevented certifying a NotAchievable verdict.
 */
struct MembershipDecision {
    Status status = Status::Unknown;
    bool exact = true;
    std::string reason;
    std::optional<Int> m;
    std::optional<Int> b;
    std::optional<QuadInt> xi;
};

/** Full decision for Z_5 x| Z_4 (=GA(1,5)): D = m*b^4, b = m (mod 5), m odd or 16 | m. */
MembershipDecision member_ga5(const Int& D);

/**
 * Full decision for Z_7 x| Z_6 (=GA(1,7)): D = m*b^6, b = m (mod 7),
 * (m odd or 4 | m) and (3 ∤ m or 9 | m).
 */
MembershipDecision member_ga7(const Int& D);

/** True when (p, n) is one of (7,3), (11,5), (13,6): the groups whose block
 *  factor lives in the quadratic subfield and has a full characterization. */
bool is_quad_group(const GroupSpec& g);

/**
 * Full decision for the three quadratic-subfield groups (p,n) = (7,3),
 * (11,5), (13,6): D = m * N(xi)^n with x = m + y(p-1)/2 (mod p) for
 * xi = x + y*theta0, and m passing zn_divisibility.
 */
MembershipDecision member_quad(const GroupSpec& g, const Int& D, unsigned long orbit_bound = 0);

/**
 * Dispatch: the five fully characterized groups get exact decisions; other
 * Z_p x| Z_(p-1) groups combine the necessary factorization test with a
 * sufficient family; remaining groups only apply the p-power test.
 */
MembershipDecision member_decide(const GroupSpec& g, const Int& D, unsigned long orbit_bound = 0);

} // namespace grpdet
