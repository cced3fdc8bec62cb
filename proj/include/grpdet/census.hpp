#pragma once

#include "grpdet/group.hpp"
#include "grpdet/integer.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace grpdet {

/**
 * Exhaustive enumeration of elements with coefficients in [-c, c], in
 * lexicographic order of the coefficient vector (row-major over (i, j) of
 * X^i Y^j, smallest coefficient first).  The cursor of an element is its rank
 * in that order over the full (2c+1)^(p*n) space; subtrees violating the
 * support bound are skipped without being ranked out of order.
 */
struct CensusConfig {
    GroupSpec group;
    unsigned coeff_bound = 1;    // c: coefficients range over [-c, c]
    unsigned support_bound = 0;  // max nonzero coefficients; 0 = no limit
    Int det_bound{0};            // record only |D| <= det_bound; 0 = record all
    Int max_elements{0};         // stop after this many evaluations; 0 = run to the end
    unsigned workers = 1;
    bool sym_reduce = false;     // skip non-canonical left X-shift translates
    std::string store_path;      // JSONL record store ("" = keep records in memory only)
    std::string checkpoint_path; // atomic resume state ("" = no checkpointing)
    const std::atomic<bool>* stop_flag = nullptr;  // cooperative shutdown request
};

struct CensusRecord {
    Int cursor;
    Int D, A, B;
    std::string element;  // canonical text form
};

struct CensusSummary {
    Int evaluated{0};       // determinants computed, including previous resumed runs
    Int recorded{0};        // records appended to the store, including previous runs
    Int next_cursor{0};     // resume point (= the full space size when complete)
    bool complete = false;  // the whole space was enumerated
    bool stopped = false;   // ended early on max_elements or stop_flag
    std::uint64_t store_records = 0;  // lines in the compacted store
};

/**
 * Runs (or resumes) the enumeration.  Records pass the necessary-condition
 * check, are streamed to `sink` (when given), and are appended to the store.
 * The checkpoint is written atomically (temp file + rename) at unit
 * boundaries; on resume the store is truncated to the checkpointed length, so
 * a killed run continues with no gaps or duplicates.  At the end of every run
 * the store is compacted: sorted by value, one least-cursor witness per
 * value.  Raises CorruptCheckpoint if the checkpoint does not match the
 * configuration (pass restart = true to discard it), and StorageFull on
 * write failure.
 */
CensusSummary census_run(const CensusConfig& cfg,
                         const std::function<void(const CensusRecord&)>& sink = nullptr,
                         bool restart = false);

/** Reads a store produced by census_run. */
std::vector<CensusRecord> read_store(const std::string& store_path);

struct CensusVerifyReport {
    std::uint64_t records = 0;
    std::uint64_t distinct_values = 0;
    std::uint64_t zero_records = 0;     // D = 0 rows, excluded from membership checks
    bool exact_decider = true;          // false: necessary-conditions-only group
    std::uint64_t rechecked = 0;        // records re-evaluated from their element text
    std::vector<std::string> violations;
    Int gap_bound{0};
    std::uint64_t missing_count = 0;    // achievable |D| <= gap_bound absent from the store
    std::vector<Int> missing_examples;  // at most 20, smallest first

    bool sound() const { return violations.empty(); }
};

/**
 * Soundness check of a store against the membership deciders: every distinct
 * nonzero D must be decided Achievable (for the five characterized groups) or
 * at least pass the necessary conditions (other groups).  Every record is
 * re-parsed and its factored determinant recomputed; a bounded sample is also
 * cross-checked against the direct determinant.  The gap report lists
 * achievable values up to gap_bound (default: min(1000, max |D| in store))
 * that the store has not hit; gaps are informational, not violations.
 */
CensusVerifyReport census_verify(const std::string& store_path, const GroupSpec& g,
                                 const Int& gap_bound = Int(-1));

} // namespace grpdet
