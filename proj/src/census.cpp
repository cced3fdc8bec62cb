#include "grpdet/census.hpp"

#include "grpdet/conditions.hpp"
#include "grpdet/detengine.hpp"
#include "grpdet/error.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <utility>

namespace fs = std::filesystem;

namespace grpdet {

namespace {

constexpr std::uint64_t kRecordsPerCheckpoint = 2048;
constexpr std::uint64_t kUnitsPerCheckpoint = 256;

struct Layout {
    unsigned digits = 0;      // p * n positions
    unsigned radix = 1;       // 2c + 1
    unsigned prefix_len = 0;  // digits fixed per work unit
    Int unit_count{1};        // radix^prefix_len
    Int unit_size{1};         // radix^(digits - prefix_len)
    Int total{1};             // radix^digits
};

Layout make_layout(const CensusConfig& cfg) {
    Layout lay;
    lay.digits = cfg.group.p * cfg.group.n;
    lay.radix = 2 * cfg.coeff_bound + 1;
    lay.total = pow_int(Int(lay.radix), lay.digits);
    while (lay.radix > 1 && lay.prefix_len < lay.digits && lay.unit_count < 32768) {
        lay.unit_count *= lay.radix;
        ++lay.prefix_len;
    }
    lay.unit_size = pow_int(Int(lay.radix), lay.digits - lay.prefix_len);
    return lay;
}

/** value -> digit vector of the given width, most significant digit first. */
std::vector<unsigned> to_digits(Int value, unsigned radix, unsigned width) {
    std::vector<unsigned> d(width, 0);
    for (unsigned k = width; k-- > 0 && value != 0;) {
        Int q, r;
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), radix);
        d[k] = static_cast<unsigned>(r.get_ui());
        value = q;
    }
    return d;
}

unsigned nonzero_digits(const std::vector<unsigned>& d, unsigned upto, unsigned center) {
    unsigned nz = 0;
    for (unsigned k = 0; k < upto; ++k)
        if (d[k] != center) ++nz;
    return nz;
}

struct UnitResult {
    Int evaluated{0};
    std::vector<CensusRecord> records;
    Int next_cursor{0};
    bool capped = false;
};

/** Is this digit vector the lexicographically least among its left X-shift translates? */
bool canonical_under_shift(const std::vector<unsigned>& digits, unsigned p, unsigned n) {
    for (unsigned s = 1; s < p; ++s) {
        for (unsigned k = 0; k < p * n; ++k) {
            const unsigned i = k / n, j = k % n;
            const unsigned shifted = digits[((i + p - s) % p) * n + j];
            if (shifted < digits[k]) return false;
            if (shifted > digits[k]) break;
        }
    }
    return true;
}

class UnitRunner {
public:
    UnitRunner(const CensusConfig& cfg, const Layout& lay, Int unit_idx,
               std::vector<unsigned> start_suffix, Int cap)
        : cfg_(cfg), lay_(lay), unit_idx_(std::move(unit_idx)),
          start_(std::move(start_suffix)), cap_(std::move(cap)) {}

    UnitResult run() {
        const unsigned L = lay_.digits, P = lay_.prefix_len;
        digits_ = to_digits(unit_idx_, lay_.radix, P);
        digits_.resize(L, 0);
        if (start_.empty()) start_.assign(L - P, 0);
        out_.next_cursor = (unit_idx_ + 1) * lay_.unit_size;

        const unsigned prefix_nz = nonzero_digits(digits_, P, cfg_.coeff_bound);
        if (cfg_.support_bound != 0 && prefix_nz > cfg_.support_bound) return std::move(out_);

        // The recursion extends the cursor digit by digit from the unit prefix.
        dfs(P, prefix_nz, true, unit_idx_);
        return std::move(out_);
    }

private:
    /** Returns false when the evaluation cap was hit and the walk must stop. */
    bool dfs(unsigned pos, unsigned nonzeros, bool tight, const Int& cursor) {
        if (pos == lay_.digits) return visit(cursor);
        const unsigned from = tight ? start_[pos - lay_.prefix_len] : 0;
        for (unsigned d = from; d < lay_.radix; ++d) {
            const unsigned nz = nonzeros + (d != cfg_.coeff_bound ? 1 : 0);
            if (cfg_.support_bound != 0 && nz > cfg_.support_bound) continue;
            digits_[pos] = d;
            if (!dfs(pos + 1, nz, tight && d == from, cursor * lay_.radix + d)) return false;
        }
        return true;
    }

    bool visit(const Int& cursor) {
        const GroupSpec& g = cfg_.group;
        if (cfg_.sym_reduce && !canonical_under_shift(digits_, g.p, g.n)) return true;

        GroupRingElement e(g.p, g.n);
        const int c = static_cast<int>(cfg_.coeff_bound);
        for (unsigned i = 0; i < g.p; ++i)
            for (unsigned j = 0; j < g.n; ++j) {
                const int v = static_cast<int>(digits_[i * g.n + j]) - c;
                if (v != 0) e.set_coeff(i, j, Int(v));
            }

        DetReport rep = factored_determinant(e, g);
        ConditionReport cond = check_necessary(g, rep);
        if (!cond.all_ok())
            throw internal_error("InternalInconsistency: necessary conditions failed at cursor " +
                                 to_string(cursor) + ": " + cond.violations.front());

        out_.evaluated += 1;
        if (cfg_.det_bound == 0 ||
            mpz_cmpabs(rep.D.get_mpz_t(), cfg_.det_bound.get_mpz_t()) <= 0)
            out_.records.push_back({cursor, rep.D, rep.A, rep.B, render_element(e)});

        if (cap_ > 0 && out_.evaluated >= cap_) {
            out_.capped = true;
            out_.next_cursor = cursor + 1;
            return false;
        }
        return true;
    }

    const CensusConfig& cfg_;
    const Layout& lay_;
    Int unit_idx_;
    std::vector<unsigned> start_;  // lower-bound digits for positions >= prefix_len
    Int cap_;
    std::vector<unsigned> digits_;
    UnitResult out_;
};

std::string fingerprint(const CensusConfig& cfg) {
    std::ostringstream os;
    os << cfg.group.p << "," << cfg.group.r << "," << cfg.group.n
       << ";coeff=" << cfg.coeff_bound << ";support=" << cfg.support_bound
       << ";det=" << to_string(cfg.det_bound) << ";sym=" << (cfg.sym_reduce ? 1 : 0);
    return os.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        out.flush();
        if (!out) throw storage_error("StorageFull: cannot write " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw storage_error("StorageFull: cannot replace " + path + ": " + ec.message());
}

struct Checkpoint {
    std::string fingerprint;
    Int next_cursor{0};
    Int evaluated{0};
    Int recorded{0};
    std::uint64_t store_bytes = 0;
};

std::string encode_checkpoint(const Checkpoint& ck) {
    std::ostringstream os;
    os << "fingerprint=" << ck.fingerprint << "\n"
       << "next_cursor=" << to_string(ck.next_cursor) << "\n"
       << "evaluated=" << to_string(ck.evaluated) << "\n"
       << "recorded=" << to_string(ck.recorded) << "\n"
       << "store_bytes=" << ck.store_bytes << "\n";
    return os.str();
}

Int parse_int_field(const std::string& v, const std::string& what) {
    Int r;
    if (v.empty() || mpz_set_str(r.get_mpz_t(), v.c_str(), 10) != 0)
        throw storage_error("CorruptCheckpoint: bad " + what + " value '" + v + "'");
    return r;
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw storage_error("CorruptCheckpoint: cannot read " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw storage_error("CorruptCheckpoint: malformed line '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    for (const char* key : {"fingerprint", "next_cursor", "evaluated", "recorded", "store_bytes"})
        if (!kv.count(key))
            throw storage_error(std::string("CorruptCheckpoint: missing field ") + key);
    Checkpoint ck;
    ck.fingerprint = kv["fingerprint"];
    ck.next_cursor = parse_int_field(kv["next_cursor"], "next_cursor");
    ck.evaluated = parse_int_field(kv["evaluated"], "evaluated");
    ck.recorded = parse_int_field(kv["recorded"], "recorded");
    const Int bytes = parse_int_field(kv["store_bytes"], "store_bytes");
    if (bytes < 0 || !bytes.fits_ulong_p())
        throw storage_error("CorruptCheckpoint: bad store_bytes");
    ck.store_bytes = bytes.get_ui();
    return ck;
}

std::string encode_record(const CensusRecord& r) {
    // The element text alphabet needs no JSON escaping.
    std::ostringstream os;
    os << "{\"cursor\":\"" << to_string(r.cursor) << "\",\"D\":\"" << to_string(r.D)
       << "\",\"A\":\"" << to_string(r.A) << "\",\"B\":\"" << to_string(r.B)
       << "\",\"element\":\"" << r.element << "\"}";
    return os.str();
}

std::string extract_field(const std::string& line, const std::string& key) {
    const std::string pat = "\"" + key + "\":\"";
    const auto at = line.find(pat);
    if (at == std::string::npos)
        throw storage_error("CorruptStore: missing field " + key + " in line: " + line);
    const auto end = line.find('"', at + pat.size());
    if (end == std::string::npos)
        throw storage_error("CorruptStore: unterminated field " + key);
    return line.substr(at + pat.size(), end - (at + pat.size()));
}

CensusRecord decode_record(const std::string& line) {
    CensusRecord r;
    r.cursor = parse_int_field(extract_field(line, "cursor"), "cursor");
    r.D = parse_int_field(extract_field(line, "D"), "D");
    r.A = parse_int_field(extract_field(line, "A"), "A");
    r.B = parse_int_field(extract_field(line, "B"), "B");
    r.element = extract_field(line, "element");
    return r;
}

/** Sort by value (then cursor), keep the least-cursor witness per value. */
void compact_store(const std::string& path, std::uint64_t& bytes_out,
                   std::uint64_t& records_out) {
    std::vector<CensusRecord> records = read_store(path);
    std::stable_sort(records.begin(), records.end(), [](const CensusRecord& x, const CensusRecord& y) {
        if (x.D != y.D) return x.D < y.D;
        return x.cursor < y.cursor;
    });
    std::string content;
    records_out = 0;
    const Int* last = nullptr;
    for (const CensusRecord& r : records) {
        if (last && *last == r.D) continue;
        content += encode_record(r);
        content += '\n';
        last = &r.D;
        ++records_out;
    }
    atomic_write(path, content);
    bytes_out = content.size();
}

} // namespace

std::vector<CensusRecord> read_store(const std::string& store_path) {
    std::ifstream in(store_path);
    if (!in) throw storage_error("CorruptStore: cannot read " + store_path);
    std::vector<CensusRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        records.push_back(decode_record(line));
    }
    return records;
}

CensusSummary census_run(const CensusConfig& cfg,
                         const std::function<void(const CensusRecord&)>& sink, bool restart) {
    if (cfg.workers < 1) throw value_error("OutOfRange: workers must be >= 1");
    const Layout lay = make_layout(cfg);
    const std::string fp = fingerprint(cfg);

    Checkpoint ck;
    ck.fingerprint = fp;
    bool resumed = false;

    if (!cfg.checkpoint_path.empty() && fs::exists(cfg.checkpoint_path)) {
        if (restart) {
            fs::remove(cfg.checkpoint_path);
        } else {
            ck = load_checkpoint(cfg.checkpoint_path);
            if (ck.fingerprint != fp)
                throw storage_error("CorruptCheckpoint: configuration changed (checkpoint '" +
                                    ck.fingerprint + "' vs run '" + fp +
                                    "'); pass restart to discard it");
            if (!cfg.store_path.empty()) {
                if (!fs::exists(cfg.store_path) || fs::file_size(cfg.store_path) < ck.store_bytes)
                    throw storage_error("CorruptCheckpoint: store is shorter than the checkpoint"
                                        " expects; pass restart to discard both");
                fs::resize_file(cfg.store_path, ck.store_bytes);
            }
            resumed = true;
        }
    }
    if (!resumed && !cfg.store_path.empty()) {
        std::ofstream trunc(cfg.store_path, std::ios::trunc);
        if (!trunc) throw storage_error("StorageFull: cannot open store " + cfg.store_path);
    }

    CensusSummary summary;
    summary.evaluated = ck.evaluated;
    summary.recorded = ck.recorded;
    summary.next_cursor = ck.next_cursor;
    if (ck.next_cursor >= lay.total) {
        summary.complete = true;
        if (!cfg.store_path.empty()) summary.store_records = read_store(cfg.store_path).size();
        return summary;
    }
    if (cfg.max_elements > 0 && summary.evaluated >= cfg.max_elements) {
        summary.stopped = true;
        if (!cfg.store_path.empty()) summary.store_records = read_store(cfg.store_path).size();
        return summary;
    }

    std::ofstream store;
    std::uint64_t store_bytes = ck.store_bytes;
    if (!cfg.store_path.empty()) {
        store.open(cfg.store_path, std::ios::binary | std::ios::app);
        if (!store) throw storage_error("StorageFull: cannot open store " + cfg.store_path);
    }

    const auto write_checkpoint = [&](const Int& next_cursor) {
        if (cfg.checkpoint_path.empty()) return;
        if (store.is_open()) {
            store.flush();
            if (!store) throw storage_error("StorageFull: flush failed on " + cfg.store_path);
        }
        Checkpoint now{fp, next_cursor, summary.evaluated, summary.recorded, store_bytes};
        atomic_write(cfg.checkpoint_path, encode_checkpoint(now));
    };

    // Resume position: a partially enumerated unit restarts from its suffix digits.
    Int next_unit = ck.next_cursor / lay.unit_size;
    std::vector<unsigned> resume_suffix;
    if (ck.next_cursor != next_unit * lay.unit_size) {
        const auto all = to_digits(ck.next_cursor, lay.radix, lay.digits);
        resume_suffix.assign(all.begin() + lay.prefix_len, all.end());
    }

    const Int per_unit_cap = cfg.max_elements;  // any one unit never needs more
    const auto unit_prefix_dead = [&](const Int& unit_idx) {
        if (cfg.support_bound == 0) return false;
        const auto prefix = to_digits(unit_idx, lay.radix, lay.prefix_len);
        return nonzero_digits(prefix, lay.prefix_len, cfg.coeff_bound) > cfg.support_bound;
    };

    std::deque<std::pair<Int, std::future<UnitResult>>> window;
    Int spawn_next = next_unit;
    std::vector<unsigned> spawn_suffix = resume_suffix;
    const auto fill_window = [&]() {
        while (window.size() < cfg.workers && spawn_next < lay.unit_count) {
            if (spawn_suffix.empty() && unit_prefix_dead(spawn_next)) {
                ++spawn_next;
                continue;
            }
            Int u = spawn_next;
            std::vector<unsigned> suffix = std::move(spawn_suffix);
            spawn_suffix.clear();
            window.emplace_back(u, std::async(std::launch::async, [&cfg, &lay, u, suffix,
                                                                   per_unit_cap]() {
                return UnitRunner(cfg, lay, u, suffix, per_unit_cap).run();
            }));
            ++spawn_next;
        }
    };

    bool stopped = false;
    std::uint64_t records_since = 0, units_since = 0;
    Int done_cursor = ck.next_cursor;

    const auto append_records = [&](const std::vector<CensusRecord>& records) {
        for (const CensusRecord& r : records) {
            if (sink) sink(r);
            if (store.is_open()) {
                const std::string line = encode_record(r) + "\n";
                store << line;
                if (!store) throw storage_error("StorageFull: write failed on " + cfg.store_path);
                store_bytes += line.size();
            }
            summary.recorded += 1;
            ++records_since;
        }
    };

    while (!stopped) {
        fill_window();
        if (window.empty()) break;  // every unit merged: enumeration complete
        auto [unit_idx, fut] = std::move(window.front());
        window.pop_front();
        UnitResult res = fut.get();

        if (cfg.max_elements > 0) {
            const Int remaining = cfg.max_elements - summary.evaluated;
            if (res.evaluated >= remaining) {
                if (res.evaluated > remaining) {
                    std::vector<unsigned> suffix =
                        (unit_idx == next_unit) ? resume_suffix : std::vector<unsigned>{};
                    res = UnitRunner(cfg, lay, unit_idx, suffix, remaining).run();
                }
                stopped = true;
            }
        }
        append_records(res.records);
        summary.evaluated += res.evaluated;
        done_cursor = res.next_cursor;
        ++units_since;

        if (cfg.stop_flag && cfg.stop_flag->load()) stopped = true;
        if (!stopped && (records_since >= kRecordsPerCheckpoint || units_since >= kUnitsPerCheckpoint)) {
            write_checkpoint(done_cursor);
            records_since = units_since = 0;
        }
    }
    // Let any in-flight speculative units finish before returning.
    for (auto& [u, fut] : window) fut.get();
    window.clear();

    // A natural exit means every unit was merged or skipped as unreachable.
    if (!stopped) done_cursor = lay.total;
    summary.next_cursor = done_cursor;
    summary.complete = (done_cursor >= lay.total);
    summary.stopped = stopped;

    if (store.is_open()) {
        store.flush();
        if (!store) throw storage_error("StorageFull: flush failed on " + cfg.store_path);
        store.close();
        compact_store(cfg.store_path, store_bytes, summary.store_records);
    }
    write_checkpoint(done_cursor);
    return summary;
}

CensusVerifyReport census_verify(const std::string& store_path, const GroupSpec& g,
                                 const Int& gap_bound) {
    const std::vector<CensusRecord> records = read_store(store_path);

    CensusVerifyReport report;
    report.records = records.size();
    report.exact_decider = (g.p == 5 && g.n == 4) || (g.p == 7 && g.n == 6) ||
                           (g.p == 7 && g.n == 3) || (g.p == 11 && g.n == 5) ||
                           (g.p == 13 && g.n == 6);

    std::map<Int, Int> by_value;  // D -> least witness cursor
    Int max_abs(0);
    std::uint64_t direct_checked = 0;
    for (const CensusRecord& r : records) {
        if (r.D == 0) ++report.zero_records;
        GroupRingElement e = parse_element(r.element, g);
        DetReport rep = factored_determinant(e, g);
        ++report.rechecked;
        if (rep.D != r.D || rep.A != r.A || rep.B != r.B) {
            report.violations.push_back("record at cursor " + to_string(r.cursor) +
                                        " re-evaluates to D=" + to_string(rep.D) +
                                        " A=" + to_string(rep.A) + " B=" + to_string(rep.B));
            continue;
        }
        if (direct_checked < 200) {
            ++direct_checked;
            if (direct_determinant(e, g) != r.D)
                report.violations.push_back("record at cursor " + to_string(r.cursor) +
                                            " fails the direct determinant cross-check");
        }
        auto [it, inserted] = by_value.emplace(r.D, r.cursor);
        if (!inserted && r.cursor < it->second) it->second = r.cursor;
        if (mpz_cmpabs(r.D.get_mpz_t(), max_abs.get_mpz_t()) > 0) max_abs = abs(r.D);
    }
    report.distinct_values = by_value.size();

    for (const auto& [value, cursor] : by_value) {
        if (value == 0) continue;
        const MembershipDecision dec = member_decide(g, value);
        if (dec.status == Status::Achievable) continue;
        if (report.exact_decider || dec.status == Status::NotAchievable)
            report.violations.push_back("stored value " + to_string(value) + " decided " +
                                        status_name(dec.status) + ": " + dec.reason);
    }

    if (report.exact_decider) {
        report.gap_bound = (gap_bound >= 0) ? gap_bound : std::min(Int(1000), max_abs);
        for (Int d = -report.gap_bound; d <= report.gap_bound; ++d) {
            if (by_value.count(d)) continue;
            if (member_decide(g, d).status != Status::Achievable) continue;
            ++report.missing_count;
            if (report.missing_examples.size() < 20) report.missing_examples.push_back(d);
        }
    }
    return report;
}

} // namespace grpdet
