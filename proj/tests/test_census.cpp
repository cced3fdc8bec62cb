// Census enumeration: completeness against a brute-force walk of the same
// space, record filtering, checkpoint/resume identity, worker and symmetry
// invariance, and store verification.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grpdet/census.hpp"
#include "grpdet/conditions.hpp"
#include "grpdet/detengine.hpp"
#include "grpdet/error.hpp"
#include "grpdet/group.hpp"
#include "grpdet/integer.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace grpdet;
namespace fs = std::filesystem;

namespace {

struct TmpDir {
    fs::path path;
    explicit TmpDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TmpDir() { fs::remove_all(path); }
    std::string file(const char* leaf) const { return (path / leaf).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// All elements of (5,2,4) with coefficients in {-1,0,1} and at most two
/// nonzero ones, with their cursors, independently of the census code.
/// Returns value -> least witness cursor, plus the total element count.
std::map<Int, Int> brute_support2(const GroupSpec& g, unsigned long& count,
                                  const Int& det_bound = Int(0)) {
    const unsigned L = g.p * g.n;
    std::vector<Int> place(L);  // 3^(L-1-k)
    place[L - 1] = 1;
    for (unsigned k = L - 1; k-- > 0;) place[k] = place[k + 1] * 3;
    Int zero_cursor(0);
    for (unsigned k = 0; k < L; ++k) zero_cursor += place[k];  // all digits 1

    std::map<Int, Int> best;
    count = 0;
    auto take = [&](const GroupRingElement& e, const Int& cursor) {
        ++count;
        DetReport rep = factored_determinant(e, g);
        if (det_bound != 0 && abs(rep.D) > det_bound) return;
        auto [it, inserted] = best.emplace(rep.D, cursor);
        if (!inserted && cursor < it->second) it->second = cursor;
    };

    take(GroupRingElement(g.p, g.n), zero_cursor);
    for (unsigned k1 = 0; k1 < L; ++k1)
        for (int v1 : {-1, 1}) {
            GroupRingElement e1(g.p, g.n);
            e1.set_coeff(k1 / g.n, k1 % g.n, Int(v1));
            take(e1, zero_cursor + place[k1] * v1);
            for (unsigned k2 = k1 + 1; k2 < L; ++k2)
                for (int v2 : {-1, 1}) {
                    GroupRingElement e2 = e1;
                    e2.set_coeff(k2 / g.n, k2 % g.n, Int(v2));
                    take(e2, zero_cursor + place[k1] * v1 + place[k2] * v2);
                }
        }
    return best;
}

CensusConfig base_config(const GroupSpec& g) {
    CensusConfig cfg;
    cfg.group = g;
    cfg.coeff_bound = 1;
    cfg.support_bound = 2;
    return cfg;
}

}  // namespace

TEST_CASE("complete run matches a brute-force enumeration") {
    TmpDir tmp("grpdet_census_complete");
    GroupSpec g = make_group(5, 2, 4);
    CensusConfig cfg = base_config(g);
    cfg.store_path = tmp.file("store.jsonl");
    cfg.checkpoint_path = tmp.file("ck.txt");

    unsigned long sink_calls = 0;
    CensusSummary sum = census_run(cfg, [&](const CensusRecord&) { ++sink_calls; });

    unsigned long brute_count = 0;
    const std::map<Int, Int> brute = brute_support2(g, brute_count);
    CHECK(brute_count == 801);  // 1 + 20*2 + C(20,2)*4

    CHECK(sum.complete);
    CHECK_FALSE(sum.stopped);
    CHECK(sum.evaluated == brute_count);
    CHECK(sum.recorded == brute_count);  // det_bound 0 records everything
    CHECK(sink_calls == brute_count);
    CHECK(sum.next_cursor == pow_int(Int(3), 20));
    CHECK(sum.store_records == brute.size());

    const std::vector<CensusRecord> records = read_store(cfg.store_path);
    REQUIRE(records.size() == brute.size());
    Int prev_d;
    bool first = true;
    for (const CensusRecord& r : records) {
        if (!first) CHECK(prev_d < r.D);  // compacted store is sorted, one row per value
        prev_d = r.D;
        first = false;
        auto it = brute.find(r.D);
        REQUIRE(it != brute.end());
        CHECK(it->second == r.cursor);  // least-cursor witness
        GroupRingElement e = parse_element(r.element, g);
        DetReport rep = factored_determinant(e, g);
        CHECK(rep.D == r.D);
        CHECK(rep.A == r.A);
        CHECK(rep.B == r.B);
    }

    // Re-running a finished job is a no-op with the same totals.
    const std::string bytes_before = slurp(cfg.store_path);
    CensusSummary again = census_run(cfg);
    CHECK(again.complete);
    CHECK(again.evaluated == brute_count);
    CHECK(again.store_records == brute.size());
    CHECK(slurp(cfg.store_path) == bytes_before);

    // The store passes verification; gap report agrees with a hand scan.
    const Int gap(30);
    CensusVerifyReport rep = census_verify(cfg.store_path, g, gap);
    CHECK(rep.sound());
    CHECK(rep.exact_decider);
    CHECK(rep.records == brute.size());
    CHECK(rep.distinct_values == brute.size());
    CHECK(rep.rechecked == brute.size());
    CHECK(rep.zero_records == 1);
    CHECK(rep.gap_bound == gap);
    std::vector<Int> missing;
    for (Int d = -gap; d <= gap; ++d) {
        if (brute.count(d)) continue;
        if (member_decide(g, d).status != Status::Achievable) continue;
        missing.push_back(d);
    }
    CHECK(rep.missing_count == missing.size());
    REQUIRE(rep.missing_examples.size() == std::min<std::size_t>(missing.size(), 20));
    for (std::size_t i = 0; i < rep.missing_examples.size(); ++i)
        CHECK(rep.missing_examples[i] == missing[i]);
}

TEST_CASE("coefficient bound zero yields the single zero record") {
    TmpDir tmp("grpdet_census_zero");
    GroupSpec g = make_group(7, 3, 6);
    CensusConfig cfg;
    cfg.group = g;
    cfg.coeff_bound = 0;
    cfg.store_path = tmp.file("store.jsonl");

    CensusSummary sum = census_run(cfg);
    CHECK(sum.complete);
    CHECK(sum.evaluated == 1);
    CHECK(sum.recorded == 1);
    CHECK(sum.store_records == 1);

    const std::vector<CensusRecord> records = read_store(cfg.store_path);
    REQUIRE(records.size() == 1);
    CHECK(records[0].D == 0);
    CHECK(records[0].cursor == 0);
    CHECK(parse_element(records[0].element, g) == GroupRingElement(g.p, g.n));

    CensusVerifyReport rep = census_verify(cfg.store_path, g);
    CHECK(rep.sound());
    CHECK(rep.zero_records == 1);
}

TEST_CASE("det_bound filters records but not evaluation") {
    TmpDir tmp("grpdet_census_detbound");
    GroupSpec g = make_group(5, 2, 4);
    CensusConfig cfg = base_config(g);
    cfg.det_bound = Int(5);  // support-2 runs reach |D| = 16, so this filters
    cfg.store_path = tmp.file("store.jsonl");

    std::vector<CensusRecord> seen;
    CensusSummary sum = census_run(cfg, [&](const CensusRecord& r) { seen.push_back(r); });

    unsigned long brute_count = 0;
    const std::map<Int, Int> brute = brute_support2(g, brute_count, Int(5));

    CHECK(sum.complete);
    CHECK(sum.evaluated == 801);  // every element still evaluated
    CHECK(sum.recorded == seen.size());
    CHECK(sum.recorded < 801);
    for (const CensusRecord& r : seen) {
        CHECK(abs(r.D) <= 5);
        // Streamed records respect the support bound too.
        GroupRingElement e = parse_element(r.element, g);
        unsigned nz = 0;
        for (unsigned i = 0; i < g.p; ++i)
            for (unsigned j = 0; j < g.n; ++j)
                if (e.coeff(i, j) != 0) ++nz;
        CHECK(nz <= 2);
    }

    const std::vector<CensusRecord> records = read_store(cfg.store_path);
    REQUIRE(records.size() == brute.size());
    for (const CensusRecord& r : records) {
        auto it = brute.find(r.D);
        REQUIRE(it != brute.end());
        CHECK(it->second == r.cursor);
    }
}

TEST_CASE("max_elements stops exactly and resume completes the job") {
    TmpDir tmp("grpdet_census_resume");
    GroupSpec g = make_group(5, 2, 4);

    CensusConfig one_shot = base_config(g);
    one_shot.store_path = tmp.file("oneshot.jsonl");
    census_run(one_shot);

    CensusConfig cfg = base_config(g);
    cfg.store_path = tmp.file("store.jsonl");
    cfg.checkpoint_path = tmp.file("ck.txt");
    cfg.max_elements = Int(150);

    CensusSummary part = census_run(cfg);
    CHECK(part.stopped);
    CHECK_FALSE(part.complete);
    CHECK(part.evaluated == 150);

    // Re-invoking with the same cap is a no-op (already at the cap).
    CensusSummary held = census_run(cfg);
    CHECK(held.stopped);
    CHECK(held.evaluated == 150);

    cfg.max_elements = Int(0);
    CensusSummary rest = census_run(cfg);
    CHECK(rest.complete);
    CHECK_FALSE(rest.stopped);
    CHECK(rest.evaluated == 801);
    CHECK(rest.recorded == 801);

    CHECK(slurp(cfg.store_path) == slurp(one_shot.store_path));
}

TEST_CASE("stop flag interrupts cooperatively") {
    TmpDir tmp("grpdet_census_stopflag");
    GroupSpec g = make_group(5, 2, 4);

    CensusConfig one_shot = base_config(g);
    one_shot.store_path = tmp.file("oneshot.jsonl");
    census_run(one_shot);

    std::atomic<bool> flag{true};
    CensusConfig cfg = base_config(g);
    cfg.store_path = tmp.file("store.jsonl");
    cfg.checkpoint_path = tmp.file("ck.txt");
    cfg.stop_flag = &flag;

    CensusSummary part = census_run(cfg);
    CHECK(part.stopped);
    CHECK_FALSE(part.complete);
    CHECK(part.evaluated < 801);

    flag.store(false);
    CensusSummary rest = census_run(cfg);
    CHECK(rest.complete);
    CHECK(rest.evaluated == 801);
    CHECK(slurp(cfg.store_path) == slurp(one_shot.store_path));
}

TEST_CASE("checkpoint fingerprint guards the configuration") {
    TmpDir tmp("grpdet_census_fingerprint");
    GroupSpec g = make_group(5, 2, 4);

    CensusConfig cfg = base_config(g);
    cfg.store_path = tmp.file("store.jsonl");
    cfg.checkpoint_path = tmp.file("ck.txt");
    cfg.max_elements = Int(100);
    CensusSummary part = census_run(cfg);
    CHECK(part.stopped);

    // A changed filter makes the checkpoint unusable...
    CensusConfig changed = cfg;
    changed.det_bound = Int(50);
    changed.max_elements = Int(0);
    CHECK_THROWS_WITH_AS(census_run(changed), doctest::Contains("CorruptCheckpoint"),
                         storage_error);

    // ...unless restart discards it; the fresh run reflects the new filter.
    CensusSummary fresh = census_run(changed, nullptr, true);
    CHECK(fresh.complete);
    CHECK(fresh.evaluated == 801);
    for (const CensusRecord& r : read_store(changed.store_path)) CHECK(abs(r.D) <= 50);
}

TEST_CASE("worker count changes neither results nor the store") {
    TmpDir tmp("grpdet_census_workers");
    GroupSpec g = make_group(5, 2, 4);

    CensusConfig w1 = base_config(g);
    w1.store_path = tmp.file("w1.jsonl");
    CensusSummary s1 = census_run(w1);

    CensusConfig w4 = base_config(g);
    w4.workers = 4;
    w4.store_path = tmp.file("w4.jsonl");
    CensusSummary s4 = census_run(w4);

    CHECK(s1.evaluated == s4.evaluated);
    CHECK(s1.recorded == s4.recorded);
    CHECK(s1.store_records == s4.store_records);
    CHECK(slurp(w1.store_path) == slurp(w4.store_path));

    // A checkpointed run may change its worker count mid-job.
    CensusConfig mid = base_config(g);
    mid.store_path = tmp.file("mid.jsonl");
    mid.checkpoint_path = tmp.file("mid_ck.txt");
    mid.max_elements = Int(200);
    census_run(mid);
    mid.max_elements = Int(0);
    mid.workers = 3;
    CensusSummary rest = census_run(mid);
    CHECK(rest.complete);
    CHECK(slurp(mid.store_path) == slurp(w1.store_path));

    CensusConfig bad = base_config(g);
    bad.workers = 0;
    CHECK_THROWS_AS(census_run(bad), value_error);
}

TEST_CASE("symmetry reduction skips translates but keeps every value") {
    TmpDir tmp("grpdet_census_sym");
    GroupSpec g = make_group(5, 2, 4);

    CensusConfig plain = base_config(g);
    plain.store_path = tmp.file("plain.jsonl");
    CensusSummary sp = census_run(plain);

    CensusConfig sym = base_config(g);
    sym.sym_reduce = true;
    sym.store_path = tmp.file("sym.jsonl");
    CensusSummary ss = census_run(sym);

    CHECK(ss.complete);
    CHECK(ss.evaluated < sp.evaluated);
    CHECK(ss.evaluated >= sp.evaluated / 5);  // shift classes have at most 5 members
    CHECK(ss.store_records == sp.store_records);

    // The least-cursor witness of any value is canonical under the shift, so
    // the compacted stores agree byte for byte.
    CHECK(slurp(sym.store_path) == slurp(plain.store_path));
}

TEST_CASE("necessary-conditions-only groups verify soundly") {
    TmpDir tmp("grpdet_census_necessary");
    GroupSpec g = make_group(7, 6, 2);  // not one of the characterized five
    CensusConfig cfg;
    cfg.group = g;
    cfg.coeff_bound = 1;
    cfg.support_bound = 1;
    cfg.store_path = tmp.file("store.jsonl");

    CensusSummary sum = census_run(cfg);
    CHECK(sum.complete);
    CHECK(sum.evaluated == 29);  // 1 + 14*2

    CensusVerifyReport rep = census_verify(cfg.store_path, g);
    CHECK(rep.sound());
    CHECK_FALSE(rep.exact_decider);
    CHECK(rep.zero_records == 1);
    CHECK(rep.missing_count == 0);  // gap scan needs the exact decider
    CHECK(rep.rechecked == rep.records);
}

TEST_CASE("census_verify flags tampered stores") {
    TmpDir tmp("grpdet_census_tamper");
    GroupSpec g = make_group(5, 2, 4);
    CensusConfig cfg = base_config(g);
    cfg.support_bound = 1;
    cfg.store_path = tmp.file("store.jsonl");
    census_run(cfg);
    REQUIRE(census_verify(cfg.store_path, g).sound());

    {
        std::ofstream app(cfg.store_path, std::ios::app);
        app << R"({"cursor":"999999999","D":"3","A":"1","B":"1","element":"1"})" << "\n";
    }
    CensusVerifyReport rep = census_verify(cfg.store_path, g);
    CHECK_FALSE(rep.sound());
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].find("re-evaluates") != std::string::npos);

    CHECK_THROWS_WITH_AS(read_store(tmp.file("missing.jsonl")), doctest::Contains("CorruptStore"),
                         storage_error);
}
