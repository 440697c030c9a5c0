#pragma once

// q-Pochhammer symbols, Gaussian binomials, the round and T_n q-trinomials,
// and truncated infinite products / reciprocals.

#include "qschur/qpoly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qschur {

/// The monomial sign * q^(exponent/2), used as the argument a of (a; q^modulus)_n.
struct MonomialBase {
    int sign = 1;
    HalfExp exponent = 0;
    std::int64_t modulus = 1;

    MonomialBase() = default;
    MonomialBase(int s, HalfExp e, std::int64_t k) : sign(s), exponent(e), modulus(k)
    {
        if (s != 1 && s != -1) throw std::invalid_argument("MonomialBase: sign must be +1 or -1");
        if (k < 1) throw std::invalid_argument("MonomialBase: modulus must be >= 1");
    }

    /// sign * q^power in base q^modulus (integer power).
    static MonomialBase of(int sign, std::int64_t power, std::int64_t modulus)
    {
        return {sign, half_steps(power), modulus};
    }
};

namespace detail {

using Dense = std::vector<BigInt>;

// [n choose k]_q as a dense coefficient list in q.  Uses the product
// formula with exact division by (1 - q^i) performed as a prefix recurrence.
inline Dense gauss_binomial_dense_uncached(std::int64_t n, std::int64_t k)
{
    if (k > n - k) k = n - k;
    const std::int64_t degree = k * (n - k);
    Dense v(static_cast<std::size_t>(degree + k) + 1);
    v[0] = 1;
    std::int64_t cur = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
        const std::int64_t a = n - k + i;
        cur += a;
        for (std::int64_t e = cur; e >= a; --e) v[e] -= v[e - a];
        cur -= i;
        for (std::int64_t e = i; e <= cur; ++e) v[e] += v[e - i];
        for (std::int64_t e = cur + 1; e <= cur + i; ++e) v[e] = 0;
    }
    v.resize(static_cast<std::size_t>(degree) + 1);
    return v;
}

inline std::shared_ptr<const Dense> gauss_binomial_dense(std::int64_t n, std::int64_t k)
{
    static std::mutex mtx;
    static std::map<std::pair<std::int64_t, std::int64_t>, std::shared_ptr<const Dense>> cache;
    if (k > n - k) k = n - k;
    const auto key = std::make_pair(n, k);
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto value = std::make_shared<const Dense>(gauss_binomial_dense_uncached(n, k));
    std::lock_guard lock(mtx);
    return cache.emplace(key, std::move(value)).first->second;
}

} // namespace detail

/// (a; q^k)_n = prod_{i<n} (1 - a q^{k i}).
inline QPoly pochhammer_finite(const MonomialBase &a, std::int64_t n)
{
    if (n < 0) throw std::invalid_argument("pochhammer_finite: n must be >= 0");
    QPoly r = QPoly::one();
    for (std::int64_t i = 0; i < n; ++i) {
        QPoly factor = QPoly::one() + QPoly::monomial_half(-a.sign, a.exponent + half_steps(a.modulus * i));
        r *= factor;
    }
    return r;
}

/// (a; q^k)_infinity mod q^(t+1/2).  Requires a positive exponent on a.
inline QPoly pochhammer_infinite_truncated(const MonomialBase &a, std::int64_t t)
{
    if (a.exponent <= 0)
        throw std::invalid_argument("pochhammer_infinite_truncated: base exponent must be positive");
    const HalfExp bound = half_steps(t);
    QPoly r = QPoly::one();
    for (HalfExp e = a.exponent; e <= bound; e += half_steps(a.modulus)) {
        QPoly factor = QPoly::one() + QPoly::monomial_half(-a.sign, e);
        r = QPoly::multiply_truncated(r, factor, bound);
    }
    return r.truncated_half(bound);
}

/// r with p * r == 1 mod q^(t+1/2).  p must have non-negative exponents and constant term +-1.
inline QPoly series_reciprocal_truncated(const QPoly &p, std::int64_t t)
{
    if (p.is_zero() || p.min_exp() < 0)
        throw std::invalid_argument("series_reciprocal_truncated: needs non-negative exponents");
    const BigInt c0 = p.coefficient(0);
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("series_reciprocal_truncated: constant term must be +1 or -1");
    const HalfExp bound = half_steps(t);
    std::vector<BigInt> r(static_cast<std::size_t>(bound) + 1);
    r[0] = c0;
    for (HalfExp e = 1; e <= bound; ++e) {
        BigInt s = 0;
        for (const auto &term : p.terms()) {
            if (term.exp == 0) continue;
            if (term.exp > e) break;
            mpz_addmul(s.get_mpz_t(), term.coef.get_mpz_t(), r[static_cast<std::size_t>(e - term.exp)].get_mpz_t());
        }
        r[static_cast<std::size_t>(e)] = -s * c0;
    }
    std::vector<QPoly::Term> terms;
    for (HalfExp e = 0; e <= bound; ++e)
        if (r[static_cast<std::size_t>(e)] != 0) terms.push_back({e, r[static_cast<std::size_t>(e)]});
    return QPoly(std::move(terms));
}

/// Gaussian binomial [top choose bottom] in base q^modulus; zero unless 0 <= bottom <= top.
inline QPoly gauss_binomial(std::int64_t top, std::int64_t bottom, std::int64_t modulus = 1)
{
    if (modulus < 1) throw std::invalid_argument("gauss_binomial: modulus must be >= 1");
    if (bottom < 0 || bottom > top) return {};
    auto dense = detail::gauss_binomial_dense(top, bottom);
    return QPoly::from_dense(*dense, modulus);
}

/// (m; b; q^modulus choose a)_2 = sum_k q^{modulus k(k+b)} [m choose k] [m-k choose k+a].
inline QPoly round_trinomial(std::int64_t m, std::int64_t b, std::int64_t a, std::int64_t modulus = 1)
{
    QPoly sum;
    for (std::int64_t k = std::max<std::int64_t>(0, -a); 2 * k + a <= m; ++k) {
        QPoly term = gauss_binomial(m, k, modulus) * gauss_binomial(m - k, k + a, modulus);
        sum += term.shifted(half_steps(modulus * k * (k + b)));
    }
    return sum;
}

/// T_n(m; q^modulus choose a) = q^{modulus (m(m-n) - a(a-n))/2} (m; a-n; q^{-modulus} choose a)_2.
inline QPoly t_trinomial(std::int64_t n_sub, std::int64_t m, std::int64_t a, std::int64_t modulus = 1)
{
    const HalfExp prefactor = modulus * (m * (m - n_sub) - a * (a - n_sub));
    return round_trinomial(m, a - n_sub, a, modulus).substitute_q_power(-1).shifted(prefactor);
}

} // namespace qschur
