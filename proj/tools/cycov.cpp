// Command-line front end: rank reports, standard-case numbers, Hurwitz
// orbits and verification sweeps over exact cyclic-cover families.
//
// Exit codes: 0 success, 2 violated mathematical precondition (bad input),
// 3 internal cross-check failure (a bug, not a property of the input).

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cycov/cycov.hpp"

using namespace cycov;

namespace {

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(rat_from_string(item));
    return out;
}

std::vector<long long> parse_int_list(const std::string& csv) {
    std::vector<long long> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

CyclicCoverSpec build_spec(long long n, long long m, long long k, const std::string& branch_csv,
                           const std::string& moving_csv) {
    std::vector<Rat> xs;
    if (!branch_csv.empty()) {
        xs = parse_rat_list(branch_csv);
        if (static_cast<long long>(xs.size()) != m)
            throw SpecError("violated: --branch must list exactly m coordinates");
    }
    if (moving_csv.empty()) return reduced_cover_spec(n, m, k, xs);
    auto moving = parse_int_list(moving_csv);
    if (static_cast<long long>(moving.size()) != k)
        throw SpecError("violated: --moving must list exactly k indices");
    std::vector<BranchPoint> branch;
    for (long long j = 0; j < m; ++j)
        branch.push_back({Coord::at(xs.empty() ? Rat(j) : xs[static_cast<size_t>(j)]), 1, false});
    for (long long idx : moving) {
        if (idx < 0 || idx >= m) throw SpecError("violated: moving index out of range");
        branch[static_cast<size_t>(idx)].moving = true;
    }
    return CyclicCoverSpec(n, std::move(branch));
}

enum class Certify { none, rigidity, oracle, all };

Certify certify_from(const std::string& s) {
    if (s == "none") return Certify::none;
    if (s == "rigidity") return Certify::rigidity;
    if (s == "oracle") return Certify::oracle;
    if (s == "all") return Certify::all;
    throw SpecError("unknown --certify level '" + s + "' (none|rigidity|oracle|all)");
}

RankReport run_report(long long n, long long m, long long k, Certify level,
                      const std::string& branch_csv, const std::string& moving_csv) {
    RankReport rep = cyclic_rank_report(n, m, k);
    if (level == Certify::none) return rep;
    CyclicCoverSpec spec = build_spec(n, m, k, branch_csv, moving_csv);
    CurveDivisor d = variable_ramification_divisor(spec);
    auto lsr = h0_ram_divisor(spec, d);
    if (!lsr.rigid)
        throw SpecError("rigidity certification failed: h0(O(D)) = " + std::to_string(lsr.h0));
    if (h0_twisted_tangent(spec, d) != 0)
        throw SpecError("minimality certification failed: H0(T_C(D)) != 0");
    if (level == Certify::rigidity) return rep;
    rep = certify_rank(spec);
    if (level == Certify::all) {
        auto t = cyclic_tuple(n, m, static_cast<int>(k));
        if (genus_of(t) != rep.g)
            throw OracleMismatch("Hurwitz-model genus disagrees with the rank report");
    }
    return rep;
}

const char* kSweepColumns = "n,m,k,g,rk_K,rk_U_upper,strict_inclusion,singular_fibers,certified";

void print_rank_table(std::ostream& os, const RankReport& r) {
    os << "n                 " << r.n << "\n"
       << "m                 " << r.m << "\n"
       << "k                 " << r.k << "\n"
       << "g                 " << r.g << "\n"
       << "rk_K              " << r.rk_K << "\n"
       << "rk_U_upper        " << r.rk_U_upper << "\n"
       << "rk_U_exact        " << (r.rk_U_exact ? std::to_string(*r.rk_U_exact) : "-") << "\n"
       << "strict_inclusion  " << (r.strict_inclusion ? "true" : "false") << "\n"
       << "singular_fibers   " << r.singular_fibers << "\n"
       << "base_genus        " << r.base_genus << "\n"
       << "monodromy_finite  " << (r.monodromy_finite_claimed ? "claimed" : "-") << "\n"
       << "non_isotrivial    " << (r.non_isotrivial ? "true" : "false") << "\n"
       << "certified         " << (r.certified_by_oracle ? "oracle" : "formula") << "\n";
}

std::string rank_csv_row(const RankReport& r) {
    std::ostringstream os;
    os << r.n << ',' << r.m << ',' << r.k << ',' << r.g << ',' << r.rk_K << ',' << r.rk_U_upper
       << ',' << (r.strict_inclusion ? "true" : "false") << ',' << r.singular_fibers << ','
       << (r.certified_by_oracle ? "true" : "false");
    return os.str();
}

struct SweepRange {
    std::vector<long long> values;
};

SweepRange range_from_json(const json& j, long long lo_default, long long hi_default) {
    SweepRange r;
    if (j.is_array()) {
        for (const auto& v : j) r.values.push_back(v.get<long long>());
    } else if (j.is_object()) {
        long long lo = j.value("min", lo_default), hi = j.value("max", hi_default);
        for (long long v = lo; v <= hi; ++v) r.values.push_back(v);
    } else if (j.is_number()) {
        r.values.push_back(j.get<long long>());
    } else {
        throw SpecError("sweep range must be a number, list or {min,max} object");
    }
    return r;
}

// Branch-point seeding for sweep rows: an arithmetic progression
// start + j*step, or explicit per-m lists keyed by the stringified m.
std::string seeded_branch_csv(const json& seed, long long m) {
    std::string rule = seed.value("rule", "arithmetic");
    if (rule == "arithmetic") {
        Rat start = rat_from_string(seed.value("start", "0"));
        Rat step = rat_from_string(seed.value("step", "1"));
        if (step == 0) throw SpecError("violated: seeding step must be nonzero");
        std::string csv;
        for (long long j = 0; j < m; ++j) {
            if (j) csv += ',';
            csv += rat_to_string(start + Rat(j) * step);
        }
        return csv;
    }
    if (rule == "explicit") {
        const auto& points = seed.at("points");
        std::string key = std::to_string(m);
        if (!points.contains(key))
            throw SpecError("violated: no explicit branch list for m = " + key);
        std::string csv;
        for (const auto& x : points.at(key)) {
            if (!csv.empty()) csv += ',';
            csv += x.get<std::string>();
        }
        return csv;
    }
    throw SpecError("unknown seeding rule '" + rule + "' (arithmetic|explicit)");
}

int run_sweep(const std::string& config_path, std::ostream& os) {
    std::ifstream in(config_path);
    if (!in) throw SpecError("cannot open sweep config '" + config_path + "'");
    json cfg = json::parse(in, nullptr, true, true);
    auto ns = range_from_json(cfg.value("n", json{{"min", 2}, {"max", 3}}), 2, 3);
    auto ms = range_from_json(cfg.value("m", json{{"min", 4}, {"max", 12}}), 4, 12);
    SweepRange ks;
    if (cfg.contains("k")) ks = range_from_json(cfg.at("k"), 1, 1 << 20);
    Certify level = certify_from(cfg.value("certify", "none"));
    std::string format = cfg.value("format", "csv");
    json seed = cfg.value("seed", json{{"rule", "arithmetic"}});

    struct Row {
        long long n, m, k;
        std::optional<RankReport> rep;
        std::string skip_reason;
    };
    std::vector<Row> rows;
    for (long long n : ns.values)
        for (long long m : ms.values) {
            std::vector<long long> kvals;
            if (ks.values.empty()) {
                for (long long k = 1; k * n < m; ++k) kvals.push_back(k);
            } else {
                kvals = ks.values;
            }
            // every grid point is either computed or reported as skipped
            for (long long k : kvals) rows.push_back({n, m, k, std::nullopt, ""});
        }

    // Rows are independent pure computations; evaluate in parallel and emit
    // in deterministic grid order. A cross-check failure anywhere is fatal
    // for the whole sweep (exit 3), unlike per-row precondition skips.
    std::atomic<size_t> next{0};
    std::mutex fatal_mutex;
    std::exception_ptr fatal;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t idx = next.fetch_add(1);
                if (idx >= rows.size()) return;
                Row& row = rows[idx];
                try {
                    std::string branch_csv =
                        (level == Certify::none) ? "" : seeded_branch_csv(seed, row.m);
                    row.rep = run_report(row.n, row.m, row.k, level, branch_csv, "");
                } catch (const SpecError& e) {
                    row.skip_reason = e.what();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(fatal_mutex);
                    if (!fatal) fatal = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (fatal) std::rethrow_exception(fatal);

    if (format == "csv") {
        os << "# cycov sweep v1 columns: " << kSweepColumns << "\n" << kSweepColumns << "\n";
        for (const auto& row : rows)
            if (row.rep) os << rank_csv_row(*row.rep) << "\n";
        for (const auto& row : rows)
            if (!row.rep)
                os << "# skipped n=" << row.n << " m=" << row.m << " k=" << row.k << ": "
                   << row.skip_reason << "\n";
    } else if (format == "json") {
        json out;
        json cols = json::array();
        {
            std::stringstream ss(kSweepColumns);
            std::string c;
            while (std::getline(ss, c, ',')) cols.push_back(c);
        }
        out["columns"] = cols;
        out["rows"] = json::array();
        out["skipped"] = json::array();
        for (const auto& row : rows) {
            if (row.rep)
                out["rows"].push_back(to_json(*row.rep));
            else
                out["skipped"].push_back(
                    json{{"n", row.n}, {"m", row.m}, {"k", row.k}, {"reason", row.skip_reason}});
        }
        os << out.dump(2) << "\n";
    } else {
        throw SpecError("unknown sweep format '" + format + "' (csv|json)");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rank invariants of families of cyclic covers of the line"};
    app.require_subcommand(1);

    // report
    auto* report = app.add_subcommand("report", "rank report for a reduced (n, m, k) family");
    long long n = 0, m = 0, k = 0;
    std::string branch_csv, moving_csv, certify = "none", format = "table";
    report->add_option("--n", n, "covering degree")->required();
    report->add_option("--m", m, "number of branch points")->required();
    report->add_option("--k", k, "number of moving branch points")->required();
    report->add_option("--branch", branch_csv, "comma-separated rational branch coordinates");
    report->add_option("--moving", moving_csv, "comma-separated moving indices (default: first k)");
    report->add_option("--certify", certify, "none|rigidity|oracle|all");
    report->add_option("--format", format, "table|json|csv");

    // cd
    auto* cd = app.add_subcommand("cd", "standard-case 4-point family numbers");
    long long cd_n = 0;
    std::string cd_format = "table";
    cd->add_option("--n", cd_n, "covering degree, gcd(n,6)=1")->required();
    cd->add_option("--format", cd_format, "table|json");

    // hurwitz
    auto* hw = app.add_subcommand("hurwitz", "braid orbit of a monodromy tuple");
    std::string tuple_text, cyclic_text, policy = "moving", hw_format = "table";
    long long symbols = 0, hw_k = 0, cap = 1000000;
    hw->add_option("--tuple", tuple_text, "cycle notation per position, ';'-separated");
    hw->add_option("--symbols", symbols, "symbol count for --tuple (default: inferred)");
    hw->add_option("--cyclic", cyclic_text, "n,m for the standard cyclic tuple");
    hw->add_option("--k", hw_k, "number of moving positions");
    hw->add_option("--policy", policy, "moving|pure|full");
    hw->add_option("--cap", cap, "orbit size cap");
    hw->add_option("--format", hw_format, "table|json");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "grid sweep from a JSON config");
    std::string config_path;
    sweep->add_option("--config", config_path, "JSON config file")->required();

    // matrix
    auto* matrix = app.add_subcommand("matrix", "JSON dump of the cup-product matrix");
    long long mx_n = 0, mx_m = 0, mx_k = 0;
    std::string mx_branch, mx_moving;
    matrix->add_option("--n", mx_n)->required();
    matrix->add_option("--m", mx_m)->required();
    matrix->add_option("--k", mx_k)->required();
    matrix->add_option("--branch", mx_branch);
    matrix->add_option("--moving", mx_moving);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*report) {
            RankReport rep = run_report(n, m, k, certify_from(certify), branch_csv, moving_csv);
            if (format == "json")
                std::cout << to_json(rep).dump() << "\n";
            else if (format == "csv")
                std::cout << kSweepColumns << "\n" << rank_csv_row(rep) << "\n";
            else if (format == "table")
                print_rank_table(std::cout, rep);
            else
                throw SpecError("unknown --format '" + format + "'");
        } else if (*cd) {
            auto rep = cd_standard_report(cd_n);
            if (cd_format == "json") {
                std::cout << to_json(rep).dump() << "\n";
            } else {
                std::cout << "n           " << rep.n << "\n"
                          << "g           " << rep.g << "\n"
                          << "q           " << rep.q << "\n"
                          << "r_D         " << rep.r_d << "\n"
                          << "h0(nP)      " << rep.h0_nP << "\n"
                          << "rk_K_upper  " << rep.rk_K_upper << "\n"
                          << "rk_U = rk_K " << rep.rk_U << "\n";
            }
        } else if (*hw) {
            HurwitzTuple t;
            if (!cyclic_text.empty()) {
                auto nm = parse_int_list(cyclic_text);
                if (nm.size() != 2) throw SpecError("--cyclic expects n,m");
                t = cyclic_tuple(nm[0], nm[1], static_cast<int>(hw_k));
            } else if (!tuple_text.empty()) {
                long long s = symbols;
                if (s == 0) {
                    for (char c : tuple_text)
                        if (std::isdigit(static_cast<unsigned char>(c)))
                            s = std::max(s, static_cast<long long>(c - '0'));
                    // two-digit symbols need --symbols explicitly
                }
                t = parse_tuple(tuple_text, static_cast<int>(s), static_cast<int>(hw_k));
            } else {
                throw SpecError("hurwitz needs --tuple or --cyclic");
            }
            if (!validate(t)) throw SpecError("violated: tuple must have product one and act transitively");
            auto action = braid_orbit(t, policy_from_name(policy), cap);
            if (hw_format == "json") {
                std::cout << to_json(action).dump() << "\n";
            } else {
                std::cout << "classes (N)   " << action.n_classes << "\n"
                          << "image_order   " << action.image_order << "\n"
                          << "kernel_index  " << action.kernel_index << "\n"
                          << "genus         " << genus_of(t) << "\n"
                          << "policy        " << action.policy << "\n";
            }
        } else if (*sweep) {
            return run_sweep(config_path, std::cout);
        } else if (*matrix) {
            auto spec = build_spec(mx_n, mx_m, mx_k, mx_branch, mx_moving);
            std::cout << to_json(cup_matrix(spec)).dump() << "\n";
        }
    } catch (const OracleMismatch& e) {
        std::cerr << "internal cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
