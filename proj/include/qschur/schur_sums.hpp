#pragma once

// Weight functions and the two sides of every polynomial / series identity
// around the Schur polynomial identity
//
//   L_N(q) = sum_{m,n1,n2} q^A [3M' choose m]_q [M'+n1/2 choose n1/2]_{q^6} [M'+n2/2 choose n2/2]_{q^6}
//          = sum_j q^{j(3j-1)/2} (N; j; q^3 choose j)_2 = R_N(q),     M' = N - m - n1 - n2,
//
// together with its dual, limits, recurrences and x-graded generating functions.

#include "qschur/qcoeff.hpp"
#include "qschur/qpoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qschur {

/// Floor division for possibly negative numerators.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Arguments shared by the weight functions.  `bound` is N and `y` the
/// change of variable used in the Q_t limit.
struct WeightArgs {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t m = 0;
    std::int64_t bound = 0;
    std::int64_t y = 0;
    int t = 1;
};

// ---------------------------------------------------------------- weights

inline std::int64_t weight_A(std::int64_t n1, std::int64_t n2, std::int64_t m)
{
    const std::int64_t s = 2 * m + n1 + n2;
    const std::int64_t p = n1 + n2;
    return (s + 1) * s / 2 + m * p + p * p - n1;
}

inline std::int64_t weight_K(std::int64_t n1, std::int64_t n2, std::int64_t m)
{
    const std::int64_t p = n1 + n2;
    return 6 * p * p + 2 * m * m + 6 * m * p - n1 + n2 - m;
}

/// 3N^2/2 - (3M'-m)m - 6M'(floor(n1/2)+floor(n2/2)), returned in half-steps.
inline HalfExp weight_B_half(std::int64_t n1, std::int64_t n2, std::int64_t m, std::int64_t N)
{
    const std::int64_t inner = N - m - n1 - n2;
    if (inner < 0) throw std::domain_error("weight_B: N - m - n1 - n2 must be >= 0");
    return 3 * N * N - 2 * (3 * inner - m) * m - 12 * inner * (n1 / 2 + n2 / 2);
}

/// Q_t(m, n1, y), t in {1, 2}.
inline std::int64_t weight_Q(std::int64_t m, std::int64_t n1, std::int64_t y, int t)
{
    if (t != 1 && t != 2) throw std::invalid_argument("weight_Q: t must be 1 or 2");
    auto rem2 = [](std::int64_t v) { return ((v % 2) + 2) % 2; };
    return m * (m - 1) / 2 + y * (3 * y + 1) / 2 + n1 + 3 * y * rem2(m + y + t) +
           6 * y * rem2(n1) * rem2(m + y + 1 + t);
}

// ------------------------------------------------------- polynomial sides

/// [3M' choose m]_q [M'+floor(n1/2) choose floor(n1/2)]_{q^6} [M'+floor(n2/2) choose floor(n2/2)]_{q^6}.
inline QPoly schur_binomial_triple(std::int64_t N, std::int64_t m, std::int64_t n1, std::int64_t n2)
{
    if (m < 0 || n1 < 0 || n2 < 0) return {};
    const std::int64_t inner = N - m - n1 - n2;
    if (inner < 0) return {};
    QPoly b = gauss_binomial(3 * inner, m, 1);
    if (b.is_zero()) return b;
    b *= gauss_binomial(inner + n1 / 2, n1 / 2, 6);
    b *= gauss_binomial(inner + n2 / 2, n2 / 2, 6);
    return b;
}

/// The (m, n1, n2) summand F_N(m, n1, n2) of L_N; zero for negative indices.
inline QPoly lhs_schur_summand(std::int64_t N, std::int64_t m, std::int64_t n1, std::int64_t n2)
{
    QPoly b = schur_binomial_triple(N, m, n1, n2);
    if (b.is_zero()) return b;
    return b.shifted(half_steps(weight_A(n1, n2, m)));
}

inline QPoly lhs_schur(std::int64_t N)
{
    QPoly sum;
    for (std::int64_t m = 0; m <= N; ++m)
        for (std::int64_t n1 = 0; m + n1 <= N; ++n1)
            for (std::int64_t n2 = 0; m + n1 + n2 <= N; ++n2) sum += lhs_schur_summand(N, m, n1, n2);
    return sum;
}

inline QPoly rhs_schur(std::int64_t N)
{
    QPoly sum;
    for (std::int64_t j = -N; j <= N; ++j)
        sum += round_trinomial(N, j, j, 3).shifted(j * (3 * j - 1));
    return sum;
}

using SidePair = std::pair<QPoly, QPoly>;

/// Both sides of the q -> 1/q dual, each multiplied by q^(N/2).
inline SidePair dual_sides(std::int64_t N)
{
    if (N < 0) throw std::invalid_argument("dual_sides: N must be >= 0");
    QPoly lhs;
    for (std::int64_t m = 0; m <= N; ++m)
        for (std::int64_t n1 = 0; m + n1 <= N; ++n1)
            for (std::int64_t n2 = 0; m + n1 + n2 <= N; ++n2) {
                QPoly b = schur_binomial_triple(N, m, n1, n2);
                if (b.is_zero()) continue;
                lhs += b.shifted(weight_B_half(n1, n2, m, N) - half_steps(weight_A(n1, n2, m)));
            }
    QPoly rhs;
    for (std::int64_t j = -N; j <= N; ++j) rhs += t_trinomial(0, N, j, 3).shifted(j);
    return {lhs.shifted(N), rhs.shifted(N)};
}

/// q^(3N^2/2 + N/2) L_N(1/q), built from L_N directly.
inline QPoly dual_oracle(std::int64_t N) { return lhs_schur(N).substitute_q_power(-1).shifted(3 * N * N + N); }

/// sum_j q^((N+j)/2) T_0(N; q^3 choose j).
inline QPoly t0_weighted_sum(std::int64_t N)
{
    QPoly lhs;
    for (std::int64_t j = -N; j <= N; ++j) lhs += t_trinomial(0, N, j, 3).shifted(N + j);
    return lhs;
}

/// (sum_j q^((N+j)/2) T_0(N; q^3 choose j),  sum_k q^k [N choose k]_{q^3} (-q^2; q^3)_{N-k}).
inline SidePair t0_binomial_identity(std::int64_t N)
{
    if (N < 0) throw std::invalid_argument("t0_binomial_identity: N must be >= 0");
    QPoly rhs;
    const MonomialBase minus_q2 = MonomialBase::of(-1, 2, 3);
    for (std::int64_t k = 0; k <= N; ++k)
        rhs += (gauss_binomial(N, k, 3) * pochhammer_finite(minus_q2, N - k)).shifted(half_steps(k));
    return {t0_weighted_sum(N), rhs};
}

/// 1 / ((q^2; q^3)_inf (q; q^6)_inf) mod q^(t+1/2).
inline QPoly t0_limit_product(std::int64_t t)
{
    QPoly denom = QPoly::multiply_truncated(pochhammer_infinite_truncated(MonomialBase::of(1, 2, 3), t),
                                            pochhammer_infinite_truncated(MonomialBase::of(1, 1, 6), t), half_steps(t));
    return series_reciprocal_truncated(denom, t);
}

/// (-q, -q^2; q^3)_inf mod q^(t+1/2).
inline QPoly schur_product_truncated(std::int64_t t)
{
    return QPoly::multiply_truncated(pochhammer_infinite_truncated(MonomialBase::of(-1, 1, 3), t),
                                     pochhammer_infinite_truncated(MonomialBase::of(-1, 2, 3), t), half_steps(t));
}

namespace detail {

/// recip[k] = 1 / (q^step; q^step)_k mod q^(t+1/2), for k = 0..count.
inline std::vector<QPoly> reciprocal_factorials(std::int64_t step, std::int64_t count, std::int64_t t)
{
    std::vector<QPoly> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    for (std::int64_t k = 0; k <= count; ++k)
        out.push_back(series_reciprocal_truncated(truncate(pochhammer_finite(MonomialBase::of(1, step, step), k), t), t));
    return out;
}

inline QPoly times_truncated(const QPoly &a, const QPoly &b, HalfExp bound) { return QPoly::multiply_truncated(a, b, bound); }

} // namespace detail

/// sum_{m,n1,y} q^{Q_t} / (q^6;q^6)_y [3y choose m]_q [y + floor(n1/2) choose y]_{q^6}, mod q^(t_bound+1/2).
inline QPoly qt_limit_sum(int t, std::int64_t t_bound)
{
    if (t != 1 && t != 2) throw std::invalid_argument("qt_limit_sum: t must be 1 or 2");
    if (t_bound < 0) throw std::invalid_argument("qt_limit_sum: negative truncation");
    const HalfExp bound = half_steps(t_bound);
    std::int64_t y_max = 0;
    while ((y_max + 1) * (3 * (y_max + 1) + 1) / 2 <= t_bound) ++y_max;
    const auto recip6 = detail::reciprocal_factorials(6, y_max, t_bound);

    QPoly sum;
    for (std::int64_t y = 0; y <= y_max; ++y)
        for (std::int64_t m = 0; m <= 3 * y && m * (m - 1) / 2 <= t_bound; ++m)
            for (std::int64_t n1 = 0; n1 <= t_bound; ++n1) {
                const std::int64_t w = weight_Q(m, n1, y, t);
                if (w > t_bound) {
                    if (m * (m - 1) / 2 + y * (3 * y + 1) / 2 + n1 > t_bound) break;
                    continue;
                }
                const HalfExp room = bound - half_steps(w);
                QPoly term = detail::times_truncated(gauss_binomial(3 * y, m, 1), gauss_binomial(y + n1 / 2, y, 6), room);
                term = detail::times_truncated(term, recip6[static_cast<std::size_t>(y)], room);
                sum += term.shifted(half_steps(w));
            }
    return sum;
}

/// (LHS, RHS) of the finite summation formula for outer bound M.
inline SidePair summation_formula_sides(std::int64_t M)
{
    if (M < 0) throw std::invalid_argument("summation_formula_sides: M must be >= 0");
    QPoly lhs;
    for (std::int64_t N = 0; N <= M; ++N) {
        const QPoly outer = gauss_binomial(M, N, 3);
        QPoly inner_sum;
        for (std::int64_t m = 0; m <= N; ++m)
            for (std::int64_t n1 = 0; m + n1 <= N; ++n1)
                for (std::int64_t n2 = 0; m + n1 + n2 <= N; ++n2) {
                    QPoly b = schur_binomial_triple(N, m, n1, n2);
                    if (b.is_zero()) continue;
                    inner_sum += b.shifted(3 * N * N + weight_B_half(n1, n2, m, N) - half_steps(weight_A(n1, n2, m)));
                }
        lhs += inner_sum * outer;
    }
    const QPoly rhs = pochhammer_finite(MonomialBase::of(-1, 1, 3), M) * pochhammer_finite(MonomialBase::of(-1, 2, 3), M);
    return {lhs, rhs};
}

/// sum_i q^{i^2/2} [L choose i]_q T_0(i; q choose a)  vs  q^{a^2/2} [2L choose L-a]_q.
inline SidePair warnaar_sides(std::int64_t L, std::int64_t a)
{
    if (L < 0) throw std::invalid_argument("warnaar_sides: L must be >= 0");
    QPoly lhs;
    for (std::int64_t i = 0; i <= L; ++i)
        lhs += (gauss_binomial(L, i, 1) * t_trinomial(0, i, a, 1)).shifted(i * i);
    return {lhs, gauss_binomial(2 * L, L - a, 1).shifted(a * a)};
}

// ------------------------------------------------------------ recurrences

enum class RecurrenceKind { andrews, left_sum, summand };

namespace detail {

inline QPoly mono(std::int64_t k) { return QPoly::monomial(1, k); }
inline QPoly one_q_q2() { return QPoly::one() + mono(1) + mono(2); }

} // namespace detail

/// R_N - (1+q^{3N-2}+q^{3N-1}) R_{N-1} - q^{3N-3}(1-q^{3N-3}) R_{N-2}.
inline QPoly andrews_residual(std::int64_t N)
{
    using detail::mono;
    auto R = [](std::int64_t n) { return n < 0 ? QPoly{} : rhs_schur(n); };
    return R(N) - (QPoly::one() + mono(3 * N - 2) + mono(3 * N - 1)) * R(N - 1) -
           (mono(3 * N - 3) - mono(6 * N - 6)) * R(N - 2);
}

/// The fourth-order recurrence for L_N, as LHS - RHS.
inline QPoly left_sum_residual(std::int64_t N)
{
    using detail::mono;
    auto L = [](std::int64_t n) { return n < 0 ? QPoly{} : lhs_schur(n); };
    const QPoly c2 = mono(3 * N - 3) * (detail::one_q_q2() + mono(3 * N - 4) + mono(3 * N - 2));
    const QPoly c3 = mono(6 * N - 8) * detail::one_q_q2();
    const QPoly c4 = mono(9 * N - 15) - mono(12 * N - 24);
    return L(N) - L(N - 1) - c2 * L(N - 2) - c3 * L(N - 3) - c4 * L(N - 4);
}

/// The termwise recurrence for F_N(m, n1, n2), as LHS - RHS.  The chain
/// indices n1, n2 step by whole pairs (n -> n - 2, i.e. floor(n/2) -> floor(n/2) - 1).
inline QPoly summand_residual(std::int64_t N, std::int64_t m, std::int64_t n1, std::int64_t n2)
{
    using detail::mono;
    auto F = [](std::int64_t n, std::int64_t mm, std::int64_t a, std::int64_t b) {
        return n < 0 ? QPoly{} : lhs_schur_summand(n, mm, a, b);
    };
    QPoly rhs = F(N - 1, m, n1, n2);
    rhs += mono(6 * N - 5) * F(N - 2, m, n1, n2 - 2);
    rhs += mono(6 * N - 7) * F(N - 2, m, n1 - 2, n2);
    rhs += mono(3 * N - 3) * detail::one_q_q2() * F(N - 2, m - 1, n1, n2);
    rhs += mono(6 * N - 8) * detail::one_q_q2() * F(N - 3, m - 2, n1, n2);
    rhs -= mono(12 * N - 24) * F(N - 4, m, n1 - 2, n2 - 2);
    rhs += mono(9 * N - 15) * F(N - 4, m - 3, n1, n2);
    return F(N, m, n1, n2) - rhs;
}

inline QPoly recurrence_residual(RecurrenceKind kind, std::int64_t N, std::int64_t m = 0, std::int64_t n1 = 0,
                                 std::int64_t n2 = 0)
{
    switch (kind) {
    case RecurrenceKind::andrews: return andrews_residual(N);
    case RecurrenceKind::left_sum: return left_sum_residual(N);
    case RecurrenceKind::summand: return summand_residual(N, m, n1, n2);
    }
    throw std::logic_error("recurrence_residual: unknown kind");
}

// ------------------------------------------------------ x-graded series

/// Largest part of the minimal configuration for (n1, n2, m); 0 when empty.
inline std::int64_t minimal_configuration_top(std::int64_t n1, std::int64_t n2, std::int64_t m)
{
    if (m > 0) return 3 * (n1 + n2) + 3 + 4 * (m - 1);
    if (n2 > 0) return 3 * (n1 + n2 - 1) + 2;
    if (n1 > 0) return 3 * (n1 - 1) + 1;
    return 0;
}

namespace detail {

// Generating function of `movers` weakly ordered motions capped at `cap`
// steps each; a factor with no movers is 1 whatever the cap.
inline QPoly capped_motions(std::int64_t cap, std::int64_t movers, std::int64_t modulus)
{
    if (movers == 0) return QPoly::one();
    return gauss_binomial(cap + movers, movers, modulus);
}

} // namespace detail

/// Generating function of admissible partitions with every part <= N, mod q^(t+1/2);
/// the exponent of x is the number of parts.  Minimal configurations whose
/// largest part exceeds N are skipped.
inline XSeries bounded_gf(std::int64_t N, std::int64_t t)
{
    if (N < 0) throw std::invalid_argument("bounded_gf: N must be >= 0");
    XSeries gf(t);
    const HalfExp bound = gf.max_half();
    for (std::int64_t m = 0; m <= N && weight_A(0, 0, m) <= t; ++m)
        for (std::int64_t n1 = 0; m + n1 <= N && weight_A(n1, 0, m) <= t; ++n1)
            for (std::int64_t n2 = 0; m + n1 + n2 <= N && weight_A(n1, n2, m) <= t; ++n2) {
                if (minimal_configuration_top(n1, n2, m) > N) continue;
                const std::int64_t w = weight_A(n1, n2, m);
                const HalfExp room = bound - half_steps(w);
                // singleton cap N - top, so the binomial top is N - 3(n1+n2+m) + 1
                QPoly term = detail::capped_motions(N - 3 * (n1 + n2 + m) + 1 - m, m, 1);
                term = detail::times_truncated(
                    term, detail::capped_motions(floor_div(N - 3 * n1 + 2, 3) - m - n2, n1 / 2, 6), room);
                term = detail::times_truncated(
                    term, detail::capped_motions(floor_div(N - 3 * (n1 + n2) + 1, 3) - m, n2 / 2, 6), room);
                gf.accumulate(n1 + n2 + m, term.shifted(half_steps(w)));
            }
    return gf;
}

/// sum x^{n1+n2+m} q^A / ((q^6;q^6)_{n1/2} (q^6;q^6)_{n2/2} (q)_m), mod q^(t+1/2).
inline XSeries ali_gf_truncated(std::int64_t t)
{
    XSeries gf(t);
    const HalfExp bound = gf.max_half();
    std::int64_t m_max = 0;
    while (weight_A(0, 0, m_max + 1) <= t) ++m_max;
    std::int64_t n_max = 0;
    while (weight_A(n_max + 1, 0, 0) <= t) ++n_max;
    const auto recip1 = detail::reciprocal_factorials(1, m_max, t);
    const auto recip6 = detail::reciprocal_factorials(6, n_max / 2 + 1, t);
    for (std::int64_t m = 0; weight_A(0, 0, m) <= t; ++m)
        for (std::int64_t n1 = 0; weight_A(n1, 0, m) <= t; ++n1)
            for (std::int64_t n2 = 0; weight_A(n1, n2, m) <= t; ++n2) {
                const std::int64_t w = weight_A(n1, n2, m);
                const HalfExp room = bound - half_steps(w);
                QPoly term = detail::times_truncated(recip1[static_cast<std::size_t>(m)],
                                                     recip6[static_cast<std::size_t>(n1 / 2)], room);
                term = detail::times_truncated(term, recip6[static_cast<std::size_t>(n2 / 2)], room);
                gf.accumulate(n1 + n2 + m, term.shifted(half_steps(w)));
            }
    return gf;
}

/// sum x^{2n1+2n2+m} q^K / ((q^6;q^6)_{n1} (q^6;q^6)_{n2} (q)_m), mod q^(t+1/2).
inline XSeries kursungoz_gf_truncated(std::int64_t t)
{
    XSeries gf(t);
    const HalfExp bound = gf.max_half();
    std::int64_t m_max = 0;
    while (weight_K(0, 0, m_max + 1) <= t) ++m_max;
    std::int64_t n_max = 0;
    while (weight_K(n_max + 1, 0, 0) <= t) ++n_max;
    const auto recip1 = detail::reciprocal_factorials(1, m_max, t);
    const auto recip6 = detail::reciprocal_factorials(6, n_max, t);
    for (std::int64_t m = 0; weight_K(0, 0, m) <= t; ++m)
        for (std::int64_t n1 = 0; weight_K(n1, 0, m) <= t; ++n1)
            for (std::int64_t n2 = 0; weight_K(n1, n2, m) <= t; ++n2) {
                const std::int64_t w = weight_K(n1, n2, m);
                const HalfExp room = bound - half_steps(w);
                QPoly term = detail::times_truncated(recip1[static_cast<std::size_t>(m)],
                                                     recip6[static_cast<std::size_t>(n1)], room);
                term = detail::times_truncated(term, recip6[static_cast<std::size_t>(n2)], room);
                gf.accumulate(2 * n1 + 2 * n2 + m, term.shifted(half_steps(w)));
            }
    return gf;
}

/// The even-odd regrouping of the triple series: the Kursungoz summand with
/// q^{K+2m} and the four-term correction factor in x.
inline XSeries even_odd_split_lhs(std::int64_t t)
{
    XSeries gf(t);
    const HalfExp bound = gf.max_half();
    auto w0 = [](std::int64_t n1, std::int64_t n2, std::int64_t m) { return weight_K(n1, n2, m) + 2 * m; };
    std::int64_t m_max = 0;
    while (w0(0, 0, m_max + 1) <= t) ++m_max;
    std::int64_t n_max = 0;
    while (w0(n_max + 1, 0, 0) <= t) ++n_max;
    const auto recip1 = detail::reciprocal_factorials(1, m_max, t);
    const auto recip6 = detail::reciprocal_factorials(6, n_max, t);
    for (std::int64_t m = 0; w0(0, 0, m) <= t; ++m)
        for (std::int64_t n1 = 0; w0(n1, 0, m) <= t; ++n1)
            for (std::int64_t n2 = 0; w0(n1, n2, m) <= t; ++n2) {
                const std::int64_t w = w0(n1, n2, m);
                const HalfExp room = bound - half_steps(w);
                QPoly base = detail::times_truncated(recip1[static_cast<std::size_t>(m)],
                                                     recip6[static_cast<std::size_t>(n1)], room);
                base = detail::times_truncated(base, recip6[static_cast<std::size_t>(n2)], room).shifted(half_steps(w));
                const std::int64_t x0 = 2 * n1 + 2 * n2 + m;
                const std::int64_t lin = 6 * n1 + 6 * n2 + 3 * m;
                gf.accumulate(x0, base);
                gf.accumulate(x0 + 1, base.shifted(half_steps(lin + 1)) + base.shifted(half_steps(lin + 2)));
                gf.accumulate(x0 + 2, base.shifted(half_steps(2 * lin + 6)));
            }
    return gf;
}

} // namespace qschur
