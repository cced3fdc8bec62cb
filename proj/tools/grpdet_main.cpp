// grpdet: integer group determinants of Z_p x| Z_n.
//
// Subcommands:
//   det      evaluate one element's determinant (factored, direct, or both)
//   member   decide whether an integer is an integer group determinant
//   realize  construct a verified witness element for a target value
//   census   enumerate elements exhaustively into a persistent value store
//   verify   re-check a census store against the deciders
//   selftest run the built-in golden checks
//
// Exit codes: 0 success / Achievable; 1 NotAchievable or failed verification;
// 2 Unknown; 64 usage or invalid input; 70 internal error.

#include "grpdet/census.hpp"
#include "grpdet/conditions.hpp"
#include "grpdet/detengine.hpp"
#include "grpdet/error.hpp"
#include "grpdet/group.hpp"
#include "grpdet/realize.hpp"
#include "grpdet/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace grpdet;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

std::atomic<bool> g_stop{false};

void handle_signal(int) { g_stop.store(true); }

GroupSpec group_from_string(const std::string& text) {
    unsigned p = 0, r = 0, n = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%u,%u,%u%c", &p, &r, &n, &extra) != 3)
        throw value_error("BadGroup: expected --group p,r,n (e.g. 5,2,4), got '" + text + "'");
    return make_group(p, r, n);
}

Int int_from_string(const std::string& text, const char* what) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        throw value_error(std::string("BadInteger: ") + what + " must be a decimal integer, got '" +
                          text + "'");
    }
}

std::string group_text(const GroupSpec& g) {
    return std::to_string(g.p) + "," + std::to_string(g.r) + "," + std::to_string(g.n);
}

json report_to_json(const DetReport& rep) {
    json j;
    j["group"] = group_text(rep.group);
    j["A"] = rep.A.get_str();
    json blocks = json::array();
    for (const auto& b : rep.B_blocks) blocks.push_back(b.to_string());
    j["B_blocks"] = blocks;
    j["B"] = rep.B.get_str();
    j["D"] = rep.D.get_str();
    return j;
}

void print_report(std::ostream& os, const DetReport& rep) {
    os << "A = " << rep.A.get_str() << "\n";
    for (std::size_t i = 0; i < rep.B_blocks.size(); ++i)
        os << "block[" << rep.group.coset_reps[i] << "] = " << rep.B_blocks[i].to_string() << "\n";
    os << "B = " << rep.B.get_str() << "\n";
    os << "D = " << rep.D.get_str() << "\n";
}

json decision_to_json(const MembershipDecision& dec) {
    json j;
    j["status"] = status_name(dec.status);
    j["exact"] = dec.exact;
    j["reason"] = dec.reason;
    if (dec.m) j["m"] = dec.m->get_str();
    if (dec.b) j["b"] = dec.b->get_str();
    if (dec.xi) j["xi"] = dec.xi->to_string();
    return j;
}

int decision_exit(Status s) {
    switch (s) {
        case Status::Achievable: return 0;
        case Status::NotAchievable: return 1;
        case Status::Unknown: return 2;
    }
    return kExitInternal;
}

/// Store path resolution: the GRPDET_STORE environment variable overrides the
/// --store flag when set and non-empty.
std::string resolve_store(const std::string& flag_value) {
    const char* env = std::getenv("GRPDET_STORE");
    if (env != nullptr && *env != '\0') return env;
    return flag_value;
}

// ---- subcommand state -------------------------------------------------------

struct DetArgs {
    std::string group, element, mode = "both";
    bool json_out = false;
};

struct MemberArgs {
    std::string group, value;
    unsigned long orbit_bound = 0;
    bool json_out = false;
};

struct RealizeArgs {
    std::string group, value;
    bool json_out = false;
};

struct CensusArgs {
    std::string group, store, checkpoint;
    unsigned coeff_bound = 1;
    unsigned support_bound = 0;
    std::string det_bound = "0";
    std::string max_elements = "0";
    unsigned workers = 1;
    bool sym = false;
    bool restart = false;
    bool quiet = false;
    bool json_out = false;
};

struct VerifyArgs {
    std::string group, store;
    std::string gap_bound = "-1";
    bool json_out = false;
};

int cmd_det(const DetArgs& a) {
    GroupSpec g = group_from_string(a.group);
    GroupRingElement e = parse_element(a.element, g);
    json j;
    j["group"] = group_text(g);
    j["element"] = render_element(e);
    bool factored = a.mode == "factored" || a.mode == "both";
    bool direct = a.mode == "direct" || a.mode == "both";
    if (!factored && !direct)
        throw value_error("BadMode: --mode must be direct, factored, or both");
    Int D_direct, D_factored;
    if (factored) {
        DetReport rep = factored_determinant(e, g);
        D_factored = rep.D;
        json rj = report_to_json(rep);
        for (auto& [k, v] : rj.items())
            if (k != "group") j[k] = v;
        if (!a.json_out) print_report(std::cout, rep);
    }
    if (direct) {
        D_direct = direct_determinant(e, g);
        j["D_direct"] = D_direct.get_str();
        if (!factored) j["D"] = D_direct.get_str();
        if (!a.json_out) std::cout << "D (direct) = " << D_direct.get_str() << "\n";
    }
    if (factored && direct) {
        bool agree = D_direct == D_factored;
        j["agree"] = agree;
        if (!a.json_out) std::cout << (agree ? "agree\n" : "DISAGREE\n");
        if (!agree) {
            if (a.json_out) std::cout << j.dump(2) << "\n";
            std::cerr << "internal error: factored and direct determinants disagree\n";
            return kExitInternal;
        }
    }
    if (a.json_out) std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_member(const MemberArgs& a) {
    GroupSpec g = group_from_string(a.group);
    Int D = int_from_string(a.value, "--value");
    MembershipDecision dec = member_decide(g, D, a.orbit_bound);
    if (a.json_out) {
        json j = decision_to_json(dec);
        j["group"] = group_text(g);
        j["D"] = D.get_str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << status_name(dec.status) << (dec.exact ? "" : " (inexact)") << ": "
                  << dec.reason << "\n";
        if (dec.m) std::cout << "m = " << dec.m->get_str() << "\n";
        if (dec.b) std::cout << "b = " << dec.b->get_str() << "\n";
        if (dec.xi) std::cout << "xi = " << dec.xi->to_string() << "\n";
    }
    return decision_exit(dec.status);
}

int cmd_realize(const RealizeArgs& a) {
    GroupSpec g = group_from_string(a.group);
    Int D = int_from_string(a.value, "--value");
    MembershipDecision dec = member_decide(g, D);
    if (dec.status != Status::Achievable) {
        if (a.json_out) {
            json j = decision_to_json(dec);
            j["group"] = group_text(g);
            j["D"] = D.get_str();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << status_name(dec.status) << ": " << dec.reason << "\n";
        }
        return decision_exit(dec.status);
    }
    Realization res = realize_value(g, D);
    if (a.json_out) {
        json j;
        j["group"] = group_text(g);
        j["D"] = D.get_str();
        j["element"] = render_element(res.element);
        j["tag"] = tag_name(res.tag);
        j["negated"] = res.negated;
        json params;
        for (const auto& [k, v] : res.params) params[k] = v.get_str();
        j["params"] = params;
        j["report"] = report_to_json(res.report);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "element = " << render_element(res.element) << "\n";
        std::cout << "tag = " << tag_name(res.tag) << (res.negated ? " (negated by -Y)" : "")
                  << "\n";
        for (const auto& [k, v] : res.params) std::cout << "  " << k << " = " << v.get_str() << "\n";
        print_report(std::cout, res.report);
    }
    return 0;
}

json summary_to_json(const CensusSummary& s) {
    json j;
    j["evaluated"] = s.evaluated.get_str();
    j["recorded"] = s.recorded.get_str();
    j["next_cursor"] = s.next_cursor.get_str();
    j["complete"] = s.complete;
    j["stopped"] = s.stopped;
    j["store_records"] = s.store_records;
    return j;
}

int cmd_census(const CensusArgs& a) {
    CensusConfig cfg;
    cfg.group = group_from_string(a.group);
    cfg.coeff_bound = a.coeff_bound;
    cfg.support_bound = a.support_bound;
    cfg.det_bound = int_from_string(a.det_bound, "--det-bound");
    cfg.max_elements = int_from_string(a.max_elements, "--max-elements");
    cfg.workers = a.workers;
    cfg.sym_reduce = a.sym;
    cfg.store_path = resolve_store(a.store);
    if (cfg.store_path.empty())
        throw value_error("BadStore: give --store PATH or set GRPDET_STORE");
    cfg.checkpoint_path = a.checkpoint.empty() ? cfg.store_path + ".ckpt" : a.checkpoint;
    cfg.stop_flag = &g_stop;

    std::signal(SIGINT, handle_signal);
    std::signal(SIGTERM, handle_signal);

    std::function<void(const CensusRecord&)> sink;
    if (!a.quiet && !a.json_out) {
        sink = [](const CensusRecord& rec) {
            std::cout << "cursor " << rec.cursor.get_str() << "  D = " << rec.D.get_str()
                      << "  " << rec.element << "\n";
        };
    }
    CensusSummary s = census_run(cfg, sink, a.restart);
    if (a.json_out) {
        json j = summary_to_json(s);
        j["store"] = cfg.store_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "evaluated " << s.evaluated.get_str() << ", recorded " << s.recorded.get_str()
                  << ", store " << cfg.store_path << " (" << s.store_records << " values), "
                  << (s.complete ? "complete" : s.stopped ? "stopped (resumable)" : "partial")
                  << "\n";
    }
    return 0;
}

int cmd_verify(const VerifyArgs& a) {
    GroupSpec g = group_from_string(a.group);
    std::string store = resolve_store(a.store);
    if (store.empty()) throw value_error("BadStore: give --store PATH or set GRPDET_STORE");
    Int gap = int_from_string(a.gap_bound, "--gap-bound");
    CensusVerifyReport rep = census_verify(store, g, gap);
    if (a.json_out) {
        json j;
        j["group"] = group_text(g);
        j["store"] = store;
        j["records"] = rep.records;
        j["distinct_values"] = rep.distinct_values;
        j["zero_records"] = rep.zero_records;
        j["exact_decider"] = rep.exact_decider;
        j["rechecked"] = rep.rechecked;
        j["violations"] = rep.violations;
        j["gap_bound"] = rep.gap_bound.get_str();
        j["missing_count"] = rep.missing_count;
        json miss = json::array();
        for (const auto& v : rep.missing_examples) miss.push_back(v.get_str());
        j["missing_examples"] = miss;
        j["sound"] = rep.sound();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.records << " records, " << rep.distinct_values << " distinct values ("
                  << rep.zero_records << " zero), " << rep.rechecked << " re-evaluated, decider "
                  << (rep.exact_decider ? "exact" : "necessary-conditions only") << "\n";
        for (const auto& v : rep.violations) std::cout << "VIOLATION: " << v << "\n";
        std::cout << "gap scan |D| <= " << rep.gap_bound.get_str() << ": " << rep.missing_count
                  << " achievable values missing";
        if (!rep.missing_examples.empty()) {
            std::cout << " (e.g.";
            for (const auto& v : rep.missing_examples) std::cout << " " << v.get_str();
            std::cout << ")";
        }
        std::cout << "\n" << (rep.sound() ? "sound\n" : "NOT SOUND\n");
    }
    return rep.sound() ? 0 : 1;
}

int cmd_selftest(bool json_out) {
    auto results = run_selftest();
    if (json_out) {
        json j = json::array();
        for (const auto& res : results) {
            json e;
            e["name"] = res.name;
            e["passed"] = res.passed;
            e["detail"] = res.detail;
            j.push_back(e);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        print_selftest(std::cout, results);
        std::cout << results.size() << " checks, "
                  << (all_passed(results) ? "all passed" : "FAILURES above") << "\n";
    }
    return all_passed(results) ? 0 : 1;
}

/// Joins value-taking flags with a following dash-initial token ("--element
/// -1*Y" -> "--element=-1*Y") so element texts and negative numbers survive
/// option parsing.
std::vector<std::string> preprocess_args(int argc, char** argv) {
    static const std::set<std::string> value_flags = {
        "--group",       "--element",      "--value",   "--mode",     "--store",
        "--checkpoint",  "--coeff-bound",  "--support-bound", "--det-bound",
        "--max-elements", "--workers",     "--orbit-bound",   "--gap-bound"};
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        if (value_flags.count(tok) != 0 && i + 1 < argc && argv[i + 1][0] == '-' &&
            std::string(argv[i + 1]) != "--") {
            out.push_back(tok + "=" + argv[i + 1]);
            ++i;
        } else {
            out.push_back(std::move(tok));
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer group determinants of Z_p x| Z_n"};
    app.require_subcommand(1);

    DetArgs det;
    auto* det_cmd = app.add_subcommand("det", "evaluate the determinant of one element");
    det_cmd->add_option("--group", det.group, "group as p,r,n")->required();
    det_cmd->add_option("--element", det.element, "element text, e.g. \"1 + 2*X*Y^2\"")->required();
    det_cmd->add_option("--mode", det.mode, "direct|factored|both")->capture_default_str();
    det_cmd->add_flag("--json", det.json_out, "machine-readable output");

    MemberArgs member;
    auto* member_cmd =
        app.add_subcommand("member", "decide whether a value is an integer group determinant");
    member_cmd->add_option("--group", member.group, "group as p,r,n")->required();
    member_cmd->add_option("--value", member.value, "target determinant")->required();
    member_cmd->add_option("--orbit-bound", member.orbit_bound,
                           "cap the unit-orbit scan (0 = exact)");
    member_cmd->add_flag("--json", member.json_out, "machine-readable output");

    RealizeArgs realize;
    auto* realize_cmd =
        app.add_subcommand("realize", "construct a witness element for a target value");
    realize_cmd->add_option("--group", realize.group, "group as p,r,n")->required();
    realize_cmd->add_option("--value", realize.value, "target determinant")->required();
    realize_cmd->add_flag("--json", realize.json_out, "machine-readable output");

    CensusArgs census;
    auto* census_cmd = app.add_subcommand("census", "enumerate elements into a value store");
    census_cmd->add_option("--group", census.group, "group as p,r,n")->required();
    census_cmd->add_option("--coeff-bound", census.coeff_bound, "coefficients range over [-c, c]")
        ->capture_default_str();
    census_cmd->add_option("--support-bound", census.support_bound,
                           "max nonzero coefficients (0 = no limit)");
    census_cmd->add_option("--det-bound", census.det_bound,
                           "record only |D| <= bound (0 = record all)");
    census_cmd->add_option("--max-elements", census.max_elements,
                           "stop after this many evaluations (0 = run to the end)");
    census_cmd->add_option("--workers", census.workers, "parallel enumeration workers")
        ->capture_default_str();
    census_cmd->add_flag("--sym", census.sym, "skip non-canonical X-shift translates");
    census_cmd->add_option("--store", census.store, "record store path (or set GRPDET_STORE)");
    census_cmd->add_option("--checkpoint", census.checkpoint,
                           "checkpoint path (default: <store>.ckpt)");
    census_cmd->add_flag("--restart", census.restart, "discard an existing checkpoint");
    census_cmd->add_flag("--quiet", census.quiet, "do not echo records to stdout");
    census_cmd->add_flag("--json", census.json_out, "machine-readable summary");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "re-check a census store");
    verify_cmd->add_option("--group", verify.group, "group as p,r,n")->required();
    verify_cmd->add_option("--store", verify.store, "record store path (or set GRPDET_STORE)");
    verify_cmd->add_option("--gap-bound", verify.gap_bound,
                           "scan achievable |D| <= bound for gaps (-1 = automatic)");
    verify_cmd->add_flag("--json", verify.json_out, "machine-readable report");

    bool selftest_json = false;
    auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in golden checks");
    selftest_cmd->add_flag("--json", selftest_json, "machine-readable results");

    try {
        auto args = preprocess_args(argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (det_cmd->parsed()) return cmd_det(det);
        if (member_cmd->parsed()) return cmd_member(member);
        if (realize_cmd->parsed()) return cmd_realize(realize);
        if (census_cmd->parsed()) return cmd_census(census);
        if (verify_cmd->parsed()) return cmd_verify(verify);
        if (selftest_cmd->parsed()) return cmd_selftest(selftest_json);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const value_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const storage_error& e) {
        std::cerr << "storage error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
