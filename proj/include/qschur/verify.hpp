#pragma once

// Registry-driven identity checks.  Each identity builds its two sides and
// compares them exactly; the first differing coefficient is reported in
// (x-degree, exponent) order.

#include "qschur/bijection.hpp"
#include "qschur/partitions.hpp"
#include "qschur/qcoeff.hpp"
#include "qschur/qpoly.hpp"
#include "qschur/schur_sums.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qschur {

enum class IdentityId {
    schur_poly,
    dual,
    t0_binom,
    t0_limit,
    qt_limit,
    summation_m,
    warnaar,
    rec_andrews,
    rec_l,
    rec_summand,
    gf_bounded,
    gf_ali_eq_kursungoz,
    gf_even_odd_split,
    analytic_schur,
    q1_triple,
    q1_quad,
    exponent_diff,
    partition_counts,
    bijection_sweep,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view summary;
};

inline constexpr std::array<IdentityInfo, 19> identity_table{{
    {IdentityId::schur_poly, "schur-poly", "L_N = R_N"},
    {IdentityId::dual, "dual", "dual sides agree and match q^(3N^2/2+N/2) L_N(1/q)"},
    {IdentityId::t0_binom, "t0-binom", "T_0 weighted sum as a binomial sum"},
    {IdentityId::t0_limit, "t0-limit", "T_0 weighted sum vs 1/((q^2;q^3)(q;q^6)) below q^(T+1)"},
    {IdentityId::qt_limit, "qt-limit", "Q_t limit sum vs 1/((q^2;q^3)(q;q^6))"},
    {IdentityId::summation_m, "summation-m", "finite summation formula"},
    {IdentityId::warnaar, "warnaar", "T_0 binomial sum vs q^(a^2/2)[2L choose L-a]"},
    {IdentityId::rec_andrews, "rec-andrews", "recurrence for R_N"},
    {IdentityId::rec_l, "rec-l", "recurrence for L_N"},
    {IdentityId::rec_summand, "rec-summand", "termwise recurrence for the L_N summands"},
    {IdentityId::gf_bounded, "gf-bounded", "bounded generating function vs enumeration"},
    {IdentityId::gf_ali_eq_kursungoz, "gf-ali-eq-kursungoz", "two triple series agree"},
    {IdentityId::gf_even_odd_split, "gf-even-odd-split", "even/odd split reconstruction"},
    {IdentityId::analytic_schur, "analytic-schur", "triple series at x=1 vs (-q,-q^2;q^3)_inf"},
    {IdentityId::q1_triple, "q1-triple", "L_M(1) = 3^M"},
    {IdentityId::q1_quad, "q1-quad", "summation formula at q=1 is 4^M"},
    {IdentityId::exponent_diff, "exponent-diff", "A(2n1,2n2,m) - K(n1,n2,m) = 2m"},
    {IdentityId::partition_counts, "partition-counts", "Schur vs distinct +-1 mod 3 counts vs product"},
    {IdentityId::bijection_sweep, "bijection-sweep", "encode/decode certification up to a size bound"},
}};

inline std::string_view identity_name(IdentityId id)
{
    for (const auto &info : identity_table)
        if (info.id == id) return info.name;
    return "?";
}

inline std::optional<IdentityId> parse_identity(std::string_view text)
{
    std::string norm(text);
    for (auto &ch : norm) {
        if (ch == '_') ch = '-';
        if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    }
    for (const auto &info : identity_table)
        if (info.name == norm) return info.id;
    return std::nullopt;
}

/// Invalid parameters for an identity; reported as a usage error, not a failure.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, std::int64_t>;

struct Discrepancy {
    std::optional<std::int64_t> x_degree;
    HalfExp exponent_half_steps = 0;
    BigInt lhs;
    BigInt rhs;

    friend bool operator==(const Discrepancy &, const Discrepancy &) = default;
};

struct VerificationReport {
    IdentityId identity = IdentityId::schur_poly;
    Params params;
    bool verified = false;
    std::optional<Discrepancy> first_discrepancy;
    std::int64_t elapsed_ms = 0;
};

struct VerifyOptions {
    /// Test hook: adds 1 to the constant term of the left side before comparing.
    bool inject_fault = false;
};

// ------------------------------------------------------------ comparison

inline std::optional<Discrepancy> first_difference(const QPoly &lhs, const QPoly &rhs,
                                                   std::optional<std::int64_t> x_degree = std::nullopt)
{
    const auto &a = lhs.terms();
    const auto &b = rhs.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) return Discrepancy{x_degree, a[i].exp, a[i].coef, 0};
        if (i == a.size() || b[j].exp < a[i].exp) return Discrepancy{x_degree, b[j].exp, 0, b[j].coef};
        if (a[i].coef != b[j].coef) return Discrepancy{x_degree, a[i].exp, a[i].coef, b[j].coef};
        ++i;
        ++j;
    }
    return std::nullopt;
}

inline std::optional<Discrepancy> first_difference(const XSeries &lhs, const XSeries &rhs)
{
    if (lhs.truncation() != rhs.truncation()) throw std::invalid_argument("first_difference: truncation mismatch");
    std::vector<std::int64_t> degrees;
    for (const auto &[d, p] : lhs.strata()) degrees.push_back(d);
    for (const auto &[d, p] : rhs.strata()) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (auto d : degrees)
        if (auto diff = first_difference(lhs.stratum(d), rhs.stratum(d), d)) return diff;
    return std::nullopt;
}

inline std::optional<Discrepancy> first_difference(const BigInt &lhs, const BigInt &rhs)
{
    if (lhs == rhs) return std::nullopt;
    return Discrepancy{std::nullopt, 0, lhs, rhs};
}

namespace detail {

class ParamReader {
public:
    ParamReader(IdentityId id, const Params &p) : id_(id), params_(p) {}

    std::int64_t get(const std::string &key)
    {
        auto it = params_.find(key);
        if (it == params_.end())
            throw UsageError(std::string(identity_name(id_)) + ": missing parameter '" + key + "'");
        return it->second;
    }

    std::optional<std::int64_t> maybe(const std::string &key)
    {
        auto it = params_.find(key);
        if (it == params_.end()) return std::nullopt;
        return it->second;
    }

    std::int64_t at_least(const std::string &key, std::int64_t lo)
    {
        const std::int64_t v = get(key);
        if (v < lo)
            throw UsageError(std::string(identity_name(id_)) + ": parameter '" + key + "' must be >= " +
                             std::to_string(lo));
        return v;
    }

private:
    IdentityId id_;
    const Params &params_;
};

inline BigInt power_of(std::int64_t base, std::int64_t exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

inline std::optional<Discrepancy> chain(std::initializer_list<std::function<std::optional<Discrepancy>()>> checks)
{
    for (const auto &c : checks)
        if (auto d = c()) return d;
    return std::nullopt;
}

inline QPoly faulted(QPoly p, bool fault) { return fault ? p + QPoly::one() : p; }

inline XSeries faulted(XSeries s, bool fault)
{
    if (fault) s.accumulate(0, QPoly::one());
    return s;
}

/// Sum over x of bounded_gf(3N-1), which must reproduce L_N.
inline QPoly bounded_total(std::int64_t N)
{
    const std::int64_t largest = 3 * N - 1;
    return bounded_gf(largest, N * largest).at_x_one();
}

/// Summation-formula left side evaluated at q = 1 factor by factor.
inline BigInt summation_lhs_at_one(std::int64_t M)
{
    BigInt total = 0;
    for (std::int64_t N = 0; N <= M; ++N) {
        BigInt inner = 0;
        for (std::int64_t m = 0; m <= N; ++m)
            for (std::int64_t n1 = 0; m + n1 <= N; ++n1)
                for (std::int64_t n2 = 0; m + n1 + n2 <= N; ++n2)
                    inner += schur_binomial_triple(N, m, n1, n2).eval_at_one();
        total += gauss_binomial(M, N, 3).eval_at_one() * inner;
    }
    return total;
}

inline XSeries count_series(const PartitionsBySize &by_size, std::int64_t t)
{
    XSeries s(t);
    for (std::size_t n = 0; n < by_size.size() && static_cast<std::int64_t>(n) <= t; ++n)
        if (!by_size[n].empty())
            s.accumulate(0, QPoly::monomial(static_cast<long>(by_size[n].size()), static_cast<std::int64_t>(n)));
    return s;
}

inline std::optional<Discrepancy> run_identity(IdentityId id, ParamReader &in, bool fault)
{
    switch (id) {
    case IdentityId::schur_poly: {
        const auto N = in.get("N");
        return first_difference(faulted(lhs_schur(N), fault), rhs_schur(N));
    }
    case IdentityId::dual: {
        const auto N = in.at_least("N", 0);
        const auto [lhs, rhs] = dual_sides(N);
        const QPoly left = faulted(lhs, fault);
        return chain({[&] { return first_difference(left, rhs); },
                      [&] { return first_difference(left, dual_oracle(N)); }});
    }
    case IdentityId::t0_binom: {
        const auto [lhs, rhs] = t0_binomial_identity(in.at_least("N", 0));
        return first_difference(faulted(lhs, fault), rhs);
    }
    case IdentityId::t0_limit: {
        const auto N = in.at_least("N", 0);
        const auto T = in.at_least("T", 0);
        return first_difference(faulted(truncate(t0_weighted_sum(N), T), fault), t0_limit_product(T));
    }
    case IdentityId::qt_limit: {
        const auto t = in.get("t");
        if (t != 1 && t != 2) throw UsageError("qt-limit: parameter 't' must be 1 or 2");
        const auto T = in.at_least("T", 0);
        return first_difference(faulted(qt_limit_sum(static_cast<int>(t), T), fault), t0_limit_product(T));
    }
    case IdentityId::summation_m: {
        const auto [lhs, rhs] = summation_formula_sides(in.at_least("M", 0));
        return first_difference(faulted(lhs, fault), rhs);
    }
    case IdentityId::warnaar: {
        const auto L = in.at_least("L", 0);
        const auto a = in.get("a");
        const auto [lhs, rhs] = warnaar_sides(L, a);
        return first_difference(faulted(lhs, fault), rhs);
    }
    case IdentityId::rec_andrews:
        return first_difference(faulted(andrews_residual(in.at_least("N", 2)), fault), QPoly{});
    case IdentityId::rec_l:
        return first_difference(faulted(left_sum_residual(in.at_least("N", 4)), fault), QPoly{});
    case IdentityId::rec_summand: {
        const auto N = in.at_least("N", 4);
        const auto m = in.maybe("m");
        const auto n1 = in.maybe("n1");
        const auto n2 = in.maybe("n2");
        if (m || n1 || n2) {
            if (!(m && n1 && n2)) throw UsageError("rec-summand: give all of m, n1, n2 or none");
            if (*m < 0 || *n1 < 0 || *n2 < 0) throw UsageError("rec-summand: m, n1, n2 must be >= 0");
            return first_difference(faulted(summand_residual(N, *m, *n1, *n2), fault), QPoly{});
        }
        for (std::int64_t mm = 0; mm <= N; ++mm)
            for (std::int64_t a = 0; mm + a <= N; ++a)
                for (std::int64_t b = 0; mm + a + b <= N; ++b) {
                    const bool first = mm == 0 && a == 0 && b == 0;
                    if (auto d = first_difference(faulted(summand_residual(N, mm, a, b), fault && first), QPoly{}))
                        return d;
                }
        return std::nullopt;
    }
    case IdentityId::gf_bounded: {
        if (auto N = in.maybe("N")) {
            if (in.maybe("largest_part") || in.maybe("T"))
                throw UsageError("gf-bounded: use either N or largest_part with T");
            if (*N < 1)throw UsageError("gf-bounded: parameter 'N' must be >= 1");
            return first_difference(faulted(bounded_total(*N), fault), lhs_schur(*N));
        }
        const auto bound = in.at_least("largest_part", 0);
        const auto T = in.at_least("T", 0);
        return first_difference(faulted(bounded_gf(bound, T), fault), schur_gf_oracle(T, bound));
    }
    case IdentityId::gf_ali_eq_kursungoz: {
        const auto T = in.at_least("T", 0);
        return first_difference(faulted(ali_gf_truncated(T), fault), kursungoz_gf_truncated(T));
    }
    case IdentityId::gf_even_odd_split: {
        const auto T = in.at_least("T", 0);
        return first_difference(faulted(even_odd_split_lhs(T), fault), kursungoz_gf_truncated(T));
    }
    case IdentityId::analytic_schur: {
        const auto T = in.at_least("T", 0);
        return first_difference(faulted(ali_gf_truncated(T).at_x_one(), fault), schur_product_truncated(T));
    }
    case IdentityId::q1_triple: {
        const auto M = in.at_least("M", 0);
        BigInt lhs = lhs_schur(M).eval_at_one();
        if (fault) lhs += 1;
        return first_difference(lhs, power_of(3, M));
    }
    case IdentityId::q1_quad: {
        const auto M = in.at_least("M", 0);
        BigInt lhs = summation_lhs_at_one(M);
        if (fault) lhs += 1;
        return first_difference(lhs, power_of(4, M));
    }
    case IdentityId::exponent_diff: {
        // x-degree holds m; the exponent slot holds the index n1 * (max + 1) + n2.
        const auto top = in.at_least("max", 0);
        for (std::int64_t n1 = 0; n1 <= top; ++n1)
            for (std::int64_t n2 = 0; n2 <= top; ++n2)
                for (std::int64_t m = 0; m <= top; ++m) {
                    std::int64_t diff = weight_A(2 * n1, 2 * n2, m) - weight_K(n1, n2, m);
                    if (fault && n1 == 0 && n2 == 0 && m == 0) diff += 1;
                    if (diff != 2 * m)
                        return Discrepancy{m, n1 * (top + 1) + n2, BigInt(static_cast<long>(diff)),
                                           BigInt(static_cast<long>(2 * m))};
                }
        return std::nullopt;
    }
    case IdentityId::partition_counts: {
        const auto n = in.at_least("max_n", 0);
        const XSeries schur = faulted(count_series(enumerate_schur(n), n), fault);
        const XSeries distinct = count_series(enumerate_distinct_pm1_mod3(n), n);
        XSeries product(n);
        product.accumulate(0, schur_product_truncated(n));
        return chain({[&] { return first_difference(schur, distinct); },
                      [&] { return first_difference(distinct, product); }});
    }
    case IdentityId::bijection_sweep: {
        const auto n = in.at_least("max_size", 0);
        const auto sweep = certify_bijection(n);
        if (auto d = first_difference(faulted(sweep.certified, fault), schur_gf_oracle(n))) return d;
        if (!sweep.ok())
            return Discrepancy{std::nullopt, 0, BigInt(static_cast<long>(sweep.problem_count())), BigInt(0)};
        return std::nullopt;
    }
    }
    throw std::logic_error("verify: unknown identity");
}

} // namespace detail

/// Parameter names each identity accepts.
inline std::vector<std::string> accepted_params(IdentityId id)
{
    switch (id) {
    case IdentityId::schur_poly:
    case IdentityId::dual:
    case IdentityId::t0_binom:
    case IdentityId::rec_andrews:
    case IdentityId::rec_l: return {"N"};
    case IdentityId::t0_limit: return {"N", "T"};
    case IdentityId::qt_limit: return {"t", "T"};
    case IdentityId::summation_m:
    case IdentityId::q1_triple:
    case IdentityId::q1_quad: return {"M"};
    case IdentityId::warnaar: return {"L", "a"};
    case IdentityId::rec_summand: return {"N", "m", "n1", "n2"};
    case IdentityId::gf_bounded: return {"N", "largest_part", "T"};
    case IdentityId::gf_ali_eq_kursungoz:
    case IdentityId::gf_even_odd_split:
    case IdentityId::analytic_schur: return {"T"};
    case IdentityId::exponent_diff: return {"max"};
    case IdentityId::partition_counts: return {"max_n"};
    case IdentityId::bijection_sweep: return {"max_size"};
    }
    return {};
}

inline VerificationReport verify(IdentityId id, const Params &params, const VerifyOptions &opts = {})
{
    const auto start = std::chrono::steady_clock::now();
    const auto accepted = accepted_params(id);
    for (const auto &[k, v] : params)
        if (std::find(accepted.begin(), accepted.end(), k) == accepted.end())
            throw UsageError(std::string(identity_name(id)) + ": unexpected parameter '" + k + "'");
    detail::ParamReader reader(id, params);
    VerificationReport report;
    report.identity = id;
    report.params = params;
    report.first_discrepancy = detail::run_identity(id, reader, opts.inject_fault);
    report.verified = !report.first_discrepancy.has_value();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace qschur
