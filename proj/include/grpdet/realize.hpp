#pragma once

#include "grpdet/detengine.hpp"
#include "grpdet/group.hpp"
#include "grpdet/integer.hpp"
#include "grpdet/quadratic.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace grpdet {

/**
 * A shifted element F = G + t(X)*(1 + Y + ... + Y^(n-1)) + m*h(X,Y), where h
 * is the all-ones element.  The shift changes A through t(1) and m but moves
 * every block determinant linearly in the t(w^(r^i)), which is what makes the
 * constructions below solvable.
 */
struct ShiftSpec {
    GroupRingElement base;    // G
    std::vector<Int> t_poly;  // t(X) coefficients, degree < p (may be shorter)
    Int m{0};                 // multiplier of the all-ones element
};

/** Assembles the element of a ShiftSpec.  Raises value_error if deg t >= p. */
GroupRingElement shift_construct(const ShiftSpec& spec, const GroupSpec& g);

/**
 * The named constructions.  Each tag fixes one (base element, t-shape) pair:
 *
 *   LemmaEx    G = 1 (s = 1 case of the coprime family), t = c + a(1-X^u) + b(1-X^v)
 *   GA_n2      G = 1 - XY,            t = c + a(1-X^k), k(r-1) = -1 mod p   (n = p-1)
 *   GA7_mult4  G = 1 + (1-X)Y + Y^2,  t = cX + b(X-X^6)                     (7, n=6)
 *   GA7_mult9  G = 1 + XY^2 + Y^3,    t = c + b(1-X^3)                      (7, n=6)
 *   G21_mult9  G = X + X^2 - 1 - Y,   t = c + a(X^5-X^3) + b(X^6-X^3)       (7,2,3)
 *   G55_mult25 G = X^5 + (X^3-1)Y - Y^2, t = c + a(1-X^5) + b(X^2-X^5)      (11,4,5)
 *   G78_mult6  G = 1 - Y + (X^10-1)Y^3,  t = c + a(X^3-X^10) + b(X-X^3)     (13,4,6)
 *   G78_mult4  G = 1 + (1-X)Y + Y^2,  t = c + a(X^11-1) + b(X^11-X^4)       (13,4,6)
 *   G78_mult9  G = 1 + XY^2 + Y^3,    t = c + a(1-X^7) + b(2-X^3-X^7)       (13,4,6)
 *   PPower     the reduction of 1 + Y + ... + Y^(p-1) mod (Y^n - 1), plus mh
 *   NegY       the single element -Y (D = -1 in every group)
 */
enum class ConstructionTag {
    LemmaEx,
    GA_n2,
    GA7_mult4,
    GA7_mult9,
    G21_mult9,
    G55_mult25,
    G78_mult6,
    G78_mult4,
    G78_mult9,
    PPower,
    NegY,
};

const char* tag_name(ConstructionTag tag);

/** Parameters of the coprime-class family of shifted elements. */
struct LemmaExParams {
    Int c{0};
    Int a{0};  // half-index groups: coefficient of (1 - X^u)
    Int b{0};  // coefficient of (1 - X^v); for n = p-1 both terms contribute (a+b)p
    Int m{0};  // all-ones multiplier
    unsigned u = 1;  // must be a nonzero square mod p when n = (p-1)/2
    unsigned v = 0;  // 0 selects the default: 1 for n = p-1, else the least non-square
};

/** Closed-form prediction for the coprime-class family. */
struct LemmaExPrediction {
    Int A;
    Int B;                         // total rational block product
    std::optional<QuadInt> block;  // n = (p-1)/2: value of the block at the 1-coset
};

/**
 * Builds G = 1 + Y + ... + Y^(s-1) shifted by t(X) = c + a(1-X^u) + b(1-X^v)
 * and m, for gcd(s, n) = 1.  Requires n = p-1 or n = (p-1)/2.  The returned
 * element is verified against the prediction (A = s + nc + mnp; B = s + nc +
 * (a+b)p when n = p-1, and B(w) = s + nc + a(p+1-2*theta0)/2 + b(p-1+2*theta0)/2
 * when n = (p-1)/2).  Raises BadS / BadResidue on invalid s / u / v.
 */
std::pair<GroupRingElement, LemmaExPrediction>
realize_lemma_ex(const GroupSpec& g, unsigned s, const LemmaExParams& params);

/** Parameters of the named non-coprime constructions. */
struct ClassParams {
    Int c{0};
    Int a{0};
    Int b{0};
    Int m{0};  // all-ones multiplier (enters A only)
};

/**
 * Builds the element of a named construction and its closed-form DetReport.
 * The report is recomputed with factored_determinant and the two must agree
 * exactly, else PredictionMismatch is raised (an implementation bug, never a
 * data condition).  TagGroupMismatch if the tag does not apply to g.
 */
std::pair<GroupRingElement, DetReport>
realize_class(const GroupSpec& g, ConstructionTag tag, const ClassParams& params);

/** A verified witness element for a target determinant value. */
struct Realization {
    GroupRingElement element;
    DetReport report;  // recomputed from the element; report.D equals the target
    ConstructionTag tag;
    bool negated = false;               // true when composed with the -Y flip
    std::map<std::string, Int> params;  // construction parameters by name
};

/**
 * Constructs an element of Z[G] whose determinant is exactly D, for the five
 * characterized groups (5,2,4), (7,3,6), (7,2,3), (11,4,5), (13,4,6).  The
 * membership decision supplies the certificate (m, b) or (m, xi); the
 * divisibility class of m selects the construction and the parameters are the
 * least-absolute-value solution of its linear closed form.  Raises
 * value_error with reason NotAchievable/Unknown when membership fails, and
 * UnsupportedGroup for other groups.
 */
Realization realize_value(const GroupSpec& g, const Int& D);

} // namespace grpdet
