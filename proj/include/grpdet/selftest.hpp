#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grpdet {

/** One golden check: a named computation compared against its pinned value. */
struct SelftestResult {
    std::string name;
    bool passed = false;
    std::string detail;  // "got ... want ..." on failure, short summary on success
};

/**
 * Runs the built-in golden checks: identity and -Y determinants in six
 * groups, the p-power base values 5^5 and 7^7, the block values B_G of the
 * named constructions, the alpha(w) row sums, Gauss sums for p = 7, 11, 13,
 * cyclotomic resultants, and a handful of membership verdicts with witness
 * round-trips.  Fast (well under a second).
 */
std::vector<SelftestResult> run_selftest();

/** True iff every result passed. */
bool all_passed(const std::vector<SelftestResult>& results);

/** Prints one line per result ("ok <name>" / "FAIL <name>: <detail>"). */
void print_selftest(std::ostream& os, const std::vector<SelftestResult>& results);

}  // namespace grpdet
