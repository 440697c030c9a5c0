#pragma once

// Command-line front end.  `run` is the whole program minus process setup so
// tests can drive it in-process with captured streams.
//
//   qschur verify --identity schur-poly --N 0..25 --format json
//   qschur enumerate --max-n 9 --class both
//   qschur bijection decode --partition "5,8"
//   qschur series --kind lhs --N 3
//   qschur report --out report.json
//
// Exit codes: 0 all verified, 1 some discrepancy, 2 usage or I/O error.

#include "qschur/bijection.hpp"
#include "qschur/partitions.hpp"
#include "qschur/schur_sums.hpp"
#include "qschur/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace qschur::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char *version = "1.0.0";
inline constexpr std::int64_t max_N = 100;
inline constexpr std::int64_t max_T = 500;

enum ExitCode : int { ok = 0, discrepancy = 1, usage = 2 };

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::vector<std::int64_t> values() const
    {
        std::vector<std::int64_t> v;
        for (std::int64_t x = lo; x <= hi; ++x) v.push_back(x);
        return v;
    }
};

/// "a..b" or a single integer.
inline Range parse_range(const std::string &text, const std::string &flag)
{
    auto parse_int = [&](const std::string &s) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception &) {
            throw UsageError("--" + flag + ": malformed range '" + text + "'");
        }
        if (pos != s.size()) throw UsageError("--" + flag + ": malformed range '" + text + "'");
        return static_cast<std::int64_t>(v);
    };
    Range r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text);
    } else {
        r.lo = parse_int(text.substr(0, dots));
        r.hi = parse_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw UsageError("--" + flag + ": empty range '" + text + "'");
    return r;
}

// ----------------------------------------------------------------- JSON

inline Json to_json(const Params &params)
{
    Json j = Json::object();
    for (const auto &[k, v] : params) j[k] = v;
    return j;
}

/// [[exponent_half_steps, "coefficient"], ...] in ascending exponent order.
inline Json to_json(const QPoly &p)
{
    Json j = Json::array();
    for (const auto &t : p.terms()) j.push_back(Json::array({t.exp, to_decimal(t.coef)}));
    return j;
}

inline Json to_json(const VerificationReport &r)
{
    Json j;
    j["identity"] = std::string(identity_name(r.identity));
    j["params"] = to_json(r.params);
    j["status"] = r.verified ? "verified" : "failed";
    if (r.first_discrepancy) {
        const auto &d = *r.first_discrepancy;
        Json dj;
        dj["x_degree"] = d.x_degree ? Json(*d.x_degree) : Json(nullptr);
        dj["exponent_half_steps"] = d.exponent_half_steps;
        dj["lhs"] = to_decimal(d.lhs);
        dj["rhs"] = to_decimal(d.rhs);
        j["first_discrepancy"] = dj;
    } else {
        j["first_discrepancy"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline Json to_json(const MinimalConfig &c, const MotionData &d)
{
    Json j;
    j["n1"] = c.n1;
    j["n2"] = c.n2;
    j["m"] = c.m;
    j["r"] = d.r;
    j["rho2"] = d.rho2;
    j["rho1"] = d.rho1;
    return j;
}

inline std::pair<MinimalConfig, MotionData> motion_from_json(const std::string &text)
{
    Json j;
    try {
        j = Json::parse(text);
        MinimalConfig c{j.at("n1").get<std::int64_t>(), j.at("n2").get<std::int64_t>(), j.at("m").get<std::int64_t>()};
        MotionData d;
        d.r = j.value("r", std::vector<std::int64_t>{});
        d.rho2 = j.value("rho2", std::vector<std::int64_t>{});
        d.rho1 = j.value("rho1", std::vector<std::int64_t>{});
        return {c, d};
    } catch (const nlohmann::json::exception &e) {
        throw UsageError(std::string("--motion: ") + e.what());
    }
}

inline std::string params_text(const Params &p)
{
    std::string s;
    for (const auto &[k, v] : p) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
}

inline std::string iso_utc_now()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

// ------------------------------------------------------------ execution

struct Job {
    IdentityId id;
    Params params;
};

inline unsigned resolve_jobs(std::optional<int> flag)
{
    if (flag) {
        if (*flag < 1) throw UsageError("--jobs must be >= 1");
        return static_cast<unsigned>(*flag);
    }
    if (const char *env = std::getenv("QSCHUR_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception &) {
        }
        throw UsageError("QSCHUR_JOBS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs the jobs on a worker pool; results come back in job order.
inline std::vector<VerificationReport> run_jobs(const std::vector<Job> &jobs, unsigned workers,
                                                const VerifyOptions &opts)
{
    std::vector<VerificationReport> results(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mtx;
    auto work = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                results[i] = verify(jobs[i].id, jobs[i].params, opts);
            } catch (...) {
                std::lock_guard lock(failure_mtx);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto &t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

inline Json report_document(const std::vector<VerificationReport> &results, bool deterministic)
{
    Json doc;
    doc["version"] = version;
    doc["started_at"] = deterministic ? std::string("1970-01-01T00:00:00Z") : iso_utc_now();
    Json entries = Json::array();
    std::int64_t verified = 0;
    for (auto r : results) {
        if (deterministic) r.elapsed_ms = 0;
        verified += r.verified ? 1 : 0;
        entries.push_back(to_json(r));
    }
    doc["entries"] = std::move(entries);
    doc["summary"] = {{"verified", verified}, {"failed", static_cast<std::int64_t>(results.size()) - verified}};
    return doc;
}

inline void write_text_table(std::ostream &os, const std::vector<VerificationReport> &results, bool deterministic)
{
    std::int64_t failed = 0;
    for (const auto &r : results) {
        os << std::left << std::setw(22) << identity_name(r.identity) << std::setw(28) << params_text(r.params)
           << std::setw(10) << (r.verified ? "verified" : "FAILED");
        if (!deterministic) os << r.elapsed_ms << " ms";
        if (r.first_discrepancy) {
            const auto &d = *r.first_discrepancy;
            os << "  at x^" << (d.x_degree ? std::to_string(*d.x_degree) : "-") << " q^(" << d.exponent_half_steps
               << "/2): " << to_decimal(d.lhs) << " vs " << to_decimal(d.rhs);
            ++failed;
        }
        os << "\n";
    }
    os << results.size() - static_cast<std::size_t>(failed) << " verified, " << failed << " failed\n";
}

/// The full acceptance matrix, in report order.
inline std::vector<Job> acceptance_matrix()
{
    std::vector<Job> jobs;
    auto add = [&](IdentityId id, Params p) { jobs.push_back({id, std::move(p)}); };
    for (std::int64_t N = 0; N <= 25; ++N) add(IdentityId::schur_poly, {{"N", N}});
    for (std::int64_t N = 2; N <= 25; ++N) add(IdentityId::rec_andrews, {{"N", N}});
    for (std::int64_t N = 4; N <= 25; ++N) add(IdentityId::rec_l, {{"N", N}});
    for (std::int64_t N = 4; N <= 12; ++N) add(IdentityId::rec_summand, {{"N", N}});
    add(IdentityId::partition_counts, {{"max_n", 60}});
    for (std::int64_t b = 0; b <= 15; ++b) add(IdentityId::gf_bounded, {{"largest_part", b}, {"T", 45}});
    for (std::int64_t N = 1; N <= 10; ++N) add(IdentityId::gf_bounded, {{"N", N}});
    add(IdentityId::gf_ali_eq_kursungoz, {{"T", 60}});
    add(IdentityId::gf_even_odd_split, {{"T", 60}});
    add(IdentityId::analytic_schur, {{"T", 60}});
    for (std::int64_t N = 0; N <= 20; ++N) add(IdentityId::dual, {{"N", N}});
    for (std::int64_t N = 0; N <= 20; ++N) add(IdentityId::t0_binom, {{"N", N}});
    add(IdentityId::t0_limit, {{"N", 40}, {"T", 39}});
    for (std::int64_t t = 1; t <= 2; ++t) add(IdentityId::qt_limit, {{"t", t}, {"T", 50}});
    for (std::int64_t M = 0; M <= 12; ++M) add(IdentityId::summation_m, {{"M", M}});
    for (std::int64_t L = 0; L <= 12; ++L)
        for (std::int64_t a = -L; a <= L; ++a) add(IdentityId::warnaar, {{"L", L}, {"a", a}});
    for (std::int64_t M = 0; M <= 15; ++M) add(IdentityId::q1_triple, {{"M", M}});
    for (std::int64_t M = 0; M <= 15; ++M) add(IdentityId::q1_quad, {{"M", M}});
    add(IdentityId::bijection_sweep, {{"max_size", 40}});
    add(IdentityId::exponent_diff, {{"max", 20}});
    return jobs;
}

// --------------------------------------------------------------- options

struct RangeFlags {
    std::optional<std::string> N, M, T, t, L, a, largest_part;
    std::optional<std::int64_t> max_n;
};

inline void check_caps(const std::string &flag, const Range &r)
{
    if ((flag == "N" && r.hi > max_N) || (flag == "T" && r.hi > max_T))
        throw UsageError("--" + flag + " exceeds the cap (N <= " + std::to_string(max_N) +
                         ", T <= " + std::to_string(max_T) + ")");
}

/// Expands the range flags into one Params per cell, keeping only the keys the identity takes.
inline std::vector<Params> expand_params(IdentityId id, const RangeFlags &f)
{
    const auto accepted = accepted_params(id);
    auto takes = [&](const std::string &k) { return std::find(accepted.begin(), accepted.end(), k) != accepted.end(); };

    std::vector<std::pair<std::string, std::vector<std::int64_t>>> axes;
    auto axis = [&](const std::optional<std::string> &flag, const std::string &name) {
        if (!flag) return;
        if (!takes(name))
            throw UsageError(std::string(identity_name(id)) + " does not take --" + name);
        const Range r = parse_range(*flag, name);
        check_caps(name, r);
        axes.emplace_back(name, r.values());
    };
    axis(f.N, "N");
    axis(f.M, "M");
    axis(f.T, "T");
    axis(f.t, "t");
    axis(f.L, "L");
    axis(f.a, "a");
    axis(f.largest_part, "largest_part");
    if (f.max_n) {
        const std::string key = id == IdentityId::partition_counts ? "max_n"
                                : id == IdentityId::bijection_sweep ? "max_size"
                                : id == IdentityId::exponent_diff   ? "max"
                                                                    : "";
        if (key.empty()) throw UsageError(std::string(identity_name(id)) + " does not take --max-n");
        axes.emplace_back(key, std::vector<std::int64_t>{*f.max_n});
    }
    if (id == IdentityId::qt_limit && !f.t) axes.emplace_back("t", std::vector<std::int64_t>{1, 2});

    std::vector<Params> cells{Params{}};
    for (const auto &[name, vals] : axes) {
        std::vector<Params> next;
        for (const auto &cell : cells)
            for (auto v : vals) {
                Params p = cell;
                p[name] = v;
                next.push_back(std::move(p));
            }
        cells = std::move(next);
    }
    // Warnaar without --a sweeps -L..L.
    if (id == IdentityId::warnaar && !f.a) {
        std::vector<Params> next;
        for (const auto &cell : cells) {
            auto it = cell.find("L");
            if (it == cell.end()) throw UsageError("warnaar: missing parameter 'L'");
            for (std::int64_t a = -it->second; a <= it->second; ++a) {
                Params p = cell;
                p["a"] = a;
                next.push_back(std::move(p));
            }
        }
        cells = std::move(next);
    }
    return cells;
}

inline void emit(const std::string &text, const std::optional<std::string> &out_path, std::ostream &out)
{
    if (!out_path) {
        out << text;
        return;
    }
    std::ofstream f(*out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write output file '" + *out_path + "'");
    f << text;
    if (!f) throw UsageError("cannot write output file '" + *out_path + "'");
}

// ----------------------------------------------------------------- main

inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of the Schur polynomial identity and its companions", "qschur"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    RangeFlags ranges;
    std::string format = "json";
    std::optional<std::string> out_path;
    std::optional<int> jobs;
    bool deterministic = false;
    bool inject_fault = false;
    bool strict = false;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", out_path, "Write output to this file");
    };
    auto add_ranges = [&](CLI::App *sub) {
        sub->add_option("--N", ranges.N, "Range a..b or single value");
        sub->add_option("--M", ranges.M, "Range a..b or single value");
        sub->add_option("--T", ranges.T, "q-degree bound");
        sub->add_option("--t", ranges.t, "Parity selector 1 or 2");
        sub->add_option("--L", ranges.L, "Range a..b or single value");
        sub->add_option("--a", ranges.a, "Range a..b or single value");
        sub->add_option("--max-n", ranges.max_n, "Size bound");
        sub->add_option("--largest-part", ranges.largest_part, "Largest-part bound, range or single value");
    };
    auto add_run_flags = [&](CLI::App *sub) {
        sub->add_option("--jobs", jobs, "Worker threads (default: QSCHUR_JOBS, then all cores)");
        sub->add_flag("--deterministic", deterministic, "Zero timings and timestamps for byte-stable output");
        sub->add_flag("--inject-fault", inject_fault, "Perturb every left side by +1 (self-test)");
    };

    std::string identity_text;
    auto *verify_cmd = app.add_subcommand("verify", "Check one identity over parameter ranges");
    verify_cmd->add_option("--identity", identity_text, "Identity id, e.g. schur-poly")->required();
    add_ranges(verify_cmd);
    add_common(verify_cmd);
    add_run_flags(verify_cmd);

    std::string partition_class = "both";
    bool list = false;
    auto *enum_cmd = app.add_subcommand("enumerate", "Count (or list) partitions by size");
    enum_cmd->add_option("--max-n", ranges.max_n, "Largest size")->required();
    std::optional<std::int64_t> enum_largest;
    enum_cmd->add_option("--largest-part", enum_largest, "Largest-part bound (schur class only)");
    enum_cmd->add_option("--class", partition_class, "schur, pm1mod3 or both")
        ->check(CLI::IsMember({"schur", "pm1mod3", "both"}));
    enum_cmd->add_flag("--list", list, "List the partitions, not only counts");
    add_common(enum_cmd);

    auto *bij_cmd = app.add_subcommand("bijection", "Encode, decode or certify the motion bijection");
    bij_cmd->require_subcommand(1);
    std::string partition_text;
    std::string motion_text;
    bool trace = false;
    auto *encode_cmd = bij_cmd->add_subcommand("encode", "Apply motion data to a minimal configuration");
    encode_cmd->add_option("--motion", motion_text, R"(JSON {"n1":..,"n2":..,"m":..,"r":[..],"rho2":[..],"rho1":[..]})")
        ->required();
    encode_cmd->add_flag("--strict", strict, "Check admissibility after every step");
    encode_cmd->add_flag("--trace", trace, "Include the pair steps in the output");
    add_common(encode_cmd);
    auto *decode_cmd = bij_cmd->add_subcommand("decode", "Recover configuration and motion data");
    decode_cmd->add_option("--partition", partition_text, "Comma-separated parts")->required();
    add_common(decode_cmd);
    auto *certify_cmd = bij_cmd->add_subcommand("certify", "Exhaustive encode/decode sweep");
    certify_cmd->add_option("--max-n", ranges.max_n, "Size bound")->required();
    add_common(certify_cmd);

    std::string kind;
    auto *series_cmd = app.add_subcommand("series", "Print one side builder");
    series_cmd->add_option("--kind", kind, "Which series")
        ->required()
        ->check(CLI::IsMember({"lhs", "rhs", "dual-lhs", "dual-rhs", "bounded", "ali", "kursungoz", "even-odd",
                               "oracle", "product"}));
    add_ranges(series_cmd);
    add_common(series_cmd);

    bool empty_matrix = false;
    std::vector<std::string> only;
    auto *report_cmd = app.add_subcommand("report", "Run the full verification matrix");
    report_cmd->add_option("--only", only, "Restrict to these identity ids")->delimiter(',');
    report_cmd->add_flag("--empty", empty_matrix, "Run an empty matrix");
    add_common(report_cmd);
    add_run_flags(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ExitCode::ok : ExitCode::usage;
    }

    try {
        const bool json = format == "json";

        if (verify_cmd->parsed() || report_cmd->parsed()) {
            std::vector<Job> matrix;
            if (verify_cmd->parsed()) {
                const auto id = parse_identity(identity_text);
                if (!id) throw UsageError("unknown identity '" + identity_text + "'");
                for (auto &p : expand_params(*id, ranges)) matrix.push_back({*id, std::move(p)});
            } else if (!empty_matrix) {
                std::vector<IdentityId> keep;
                for (const auto &name : only) {
                    const auto id = parse_identity(name);
                    if (!id) throw UsageError("unknown identity '" + name + "'");
                    keep.push_back(*id);
                }
                for (auto &j : acceptance_matrix())
                    if (keep.empty() || std::find(keep.begin(), keep.end(), j.id) != keep.end())
                        matrix.push_back(std::move(j));
            }
            const auto results = run_jobs(matrix, resolve_jobs(jobs), VerifyOptions{inject_fault});
            std::ostringstream os;
            if (json)
                os << report_document(results, deterministic).dump(2) << "\n";
            else
                write_text_table(os, results, deterministic);
            emit(os.str(), out_path, out);
            const bool all = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.verified; });
            return all ? ExitCode::ok : ExitCode::discrepancy;
        }

        if (enum_cmd->parsed()) {
            const std::int64_t n = *ranges.max_n;
            if (n < 0 || n > max_T) throw UsageError("--max-n must be in 0.." + std::to_string(max_T));
            if (enum_largest && partition_class != "schur")
                throw UsageError("--largest-part applies to --class schur only");
            const bool want_schur = partition_class != "pm1mod3";
            const bool want_pm = partition_class != "schur";
            PartitionsBySize schur, pm;
            if (want_schur) schur = enumerate_schur(n, enum_largest);
            if (want_pm) pm = enumerate_distinct_pm1_mod3(n);
            bool agree = true;
            std::ostringstream os;
            Json rows = Json::array();
            if (!json) os << "n" << (want_schur ? "\tschur" : "") << (want_pm ? "\tpm1mod3" : "") << "\n";
            for (std::int64_t s = 0; s <= n; ++s) {
                const auto idx = static_cast<std::size_t>(s);
                Json row;
                row["n"] = s;
                if (want_schur) row["schur"] = schur[idx].size();
                if (want_pm) row["pm1mod3"] = pm[idx].size();
                if (want_schur && want_pm && schur[idx].size() != pm[idx].size()) agree = false;
                if (list) {
                    auto names = [](const std::vector<Partition> &v) {
                        std::vector<std::string> out;
                        for (const auto &p : v) out.push_back(p.to_string());
                        return out;
                    };
                    if (want_schur) row["schur_partitions"] = names(schur[idx]);
                    if (want_pm) row["pm1mod3_partitions"] = names(pm[idx]);
                }
                if (!json) {
                    os << s;
                    if (want_schur) os << "\t" << schur[idx].size();
                    if (want_pm) os << "\t" << pm[idx].size();
                    if (list) {
                        for (const auto *v : {want_schur ? &schur[idx] : nullptr, want_pm ? &pm[idx] : nullptr}) {
                            if (!v) continue;
                            os << "\t{";
                            for (std::size_t i = 0; i < v->size(); ++i) os << (i ? " " : "") << "(" << (*v)[i].to_string() << ")";
                            os << "}";
                        }
                    }
                    os << "\n";
                }
                rows.push_back(std::move(row));
            }
            if (json) {
                Json doc;
                doc["class"] = partition_class;
                if (enum_largest) doc["largest_part"] = *enum_largest;
                doc["counts"] = std::move(rows);
                if (want_schur && want_pm) doc["counts_agree"] = agree;
                os << doc.dump(2) << "\n";
            }
            emit(os.str(), out_path, out);
            return agree ? ExitCode::ok : ExitCode::discrepancy;
        }

        if (encode_cmd->parsed()) {
            const auto [c, d] = motion_from_json(motion_text);
            if (!motion_data_fits(c, d)) throw UsageError("--motion: lists do not match the configuration");
            Json steps = Json::array();
            MotionOptions opts;
            opts.strict = strict;
            if (trace)
                opts.on_step = [&](const PairStep &s) {
                    steps.push_back({{"pair", role_name(s.pair)},
                                     {"index", s.pair_index},
                                     {"rule", rule_name(s.rule)},
                                     {"crossed", s.crossed},
                                     {"larger_before", s.larger_before},
                                     {"larger_after", s.larger_after},
                                     {"size_after", s.size_after}});
                };
            Partition p;
            try {
                p = apply_motions(c, d, opts);
            } catch (const MotionError &e) {
                err << "qschur: " << e.what() << "\n";
                return ExitCode::discrepancy;
            }
            std::ostringstream os;
            if (json) {
                Json doc;
                doc["partition"] = p.to_string();
                doc["size"] = p.size();
                if (trace) doc["steps"] = std::move(steps);
                os << doc.dump(2) << "\n";
            } else {
                os << p.to_string() << "\n";
            }
            emit(os.str(), out_path, out);
            return ExitCode::ok;
        }

        if (decode_cmd->parsed()) {
            Partition p;
            try {
                p = Partition::parse(partition_text);
            } catch (const std::invalid_argument &e) {
                throw UsageError(e.what());
            }
            if (!is_schur_admissible(p)) throw UsageError("partition (" + p.to_string() + ") is not Schur-admissible");
            Decoded r;
            try {
                r = decode(p);
            } catch (const MotionError &e) {
                err << "qschur: " << e.what() << "\n";
                return ExitCode::discrepancy;
            }
            std::ostringstream os;
            const Json doc = to_json(r.config, r.motions);
            if (json) {
                os << doc.dump(2) << "\n";
            } else {
                os << doc.dump() << "\n";
            }
            emit(os.str(), out_path, out);
            return ExitCode::ok;
        }

        if (certify_cmd->parsed()) {
            const std::int64_t n = *ranges.max_n;
            if (n < 0 || n > 80) throw UsageError("--max-n must be in 0..80");
            const auto sweep = certify_bijection(n);
            const auto oracle = schur_gf_oracle(n);
            const bool pass = sweep.ok() && !first_difference(sweep.certified, oracle);
            std::ostringstream os;
            if (json) {
                Json doc;
                doc["max_size"] = n;
                doc["data"] = sweep.data;
                doc["rule_errors"] = sweep.rule_errors;
                doc["duplicates"] = sweep.duplicates;
                doc["missing"] = sweep.missing;
                doc["roundtrip_failures"] = sweep.roundtrip_failures;
                doc["contract_failures"] = sweep.contract_failures;
                doc["problems"] = sweep.problems;
                doc["status"] = pass ? "verified" : "failed";
                os << doc.dump(2) << "\n";
            } else {
                os << "data " << sweep.data << ", rule errors " << sweep.rule_errors << ", duplicates "
                   << sweep.duplicates << ", missing " << sweep.missing << ", roundtrip failures "
                   << sweep.roundtrip_failures << ", contract failures " << sweep.contract_failures << "\n";
                for (const auto &msg : sweep.problems) os << "  " << msg << "\n";
                os << (pass ? "verified" : "FAILED") << "\n";
            }
            emit(os.str(), out_path, out);
            return pass ? ExitCode::ok : ExitCode::discrepancy;
        }

        if (series_cmd->parsed()) {
            auto single = [&](const std::optional<std::string> &flag, const std::string &name) {
                if (!flag) throw UsageError("--kind " + kind + " needs --" + name);
                const Range r = parse_range(*flag, name);
                if (r.lo != r.hi) throw UsageError("--" + name + " must be a single value here");
                check_caps(name, r);
                return r.lo;
            };
            std::optional<QPoly> poly;
            std::optional<XSeries> series;
            if (kind == "lhs") poly = lhs_schur(single(ranges.N, "N"));
            else if (kind == "rhs") poly = rhs_schur(single(ranges.N, "N"));
            else if (kind == "dual-lhs" || kind == "dual-rhs") {
                const auto N = single(ranges.N, "N");
                if (N < 0) throw UsageError("--N must be >= 0");
                const auto sides = dual_sides(N);
                poly = kind == "dual-lhs" ? sides.first : sides.second;
            } else if (kind == "product") {
                const auto T = single(ranges.T, "T");
                if (T < 0) throw UsageError("--T must be >= 0");
                poly = schur_product_truncated(T);
            } else {
                const auto T = single(ranges.T, "T");
                if (T < 0) throw UsageError("--T must be >= 0");
                if (kind == "bounded") {
                    series = bounded_gf(single(ranges.largest_part, "largest-part"), T);
                } else if (kind == "ali") series = ali_gf_truncated(T);
                else if (kind == "kursungoz") series = kursungoz_gf_truncated(T);
                else if (kind == "even-odd") series = even_odd_split_lhs(T);
                else if (ranges.largest_part) series = schur_gf_oracle(T, single(ranges.largest_part, "largest-part"));
                else series = schur_gf_oracle(T);
            }
            std::ostringstream os;
            if (poly) {
                if (json)
                    os << Json{{"kind", kind}, {"text", poly->to_string()}, {"terms", to_json(*poly)}}.dump(2) << "\n";
                else
                    os << poly->to_string() << "\n";
            } else {
                Json strata = Json::object();
                for (const auto &[d, p] : series->strata()) {
                    strata[std::to_string(d)] = to_json(p);
                    if (!json) os << "x^" << d << ": " << p.to_string() << "\n";
                }
                if (json)
                    os << Json{{"kind", kind}, {"truncation", series->truncation()}, {"strata", strata}}.dump(2)
                       << "\n";
            }
            emit(os.str(), out_path, out);
            return ExitCode::ok;
        }
    } catch (const UsageError &e) {
        err << "qschur: " << e.what() << "\n";
        return ExitCode::usage;
    } catch (const std::invalid_argument &e) {
        err << "qschur: " << e.what() << "\n";
        return ExitCode::usage;
    }
    return ExitCode::usage;
}

} // namespace qschur::cli
