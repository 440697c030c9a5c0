#pragma once

// Exact sparse Laurent polynomials in q^(1/2) with big-integer coefficients,
// plus an x-graded truncated extension (XSeries).
//
// Exponents are stored as integers counting half-steps: the key 2k is q^k and
// the key 1 is q^(1/2).  Truncation bounds are always given in whole q-units.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

using BigInt = mpz_class;

/// Exponent in units of q^(1/2).
using HalfExp = std::int64_t;

constexpr HalfExp half_steps(std::int64_t q_units) { return 2 * q_units; }

inline std::string to_decimal(const BigInt &v) { return v.get_str(10); }

class QPoly {
public:
    struct Term {
        HalfExp exp;
        BigInt coef;
        bool operator==(const Term &o) const { return exp == o.exp && coef == o.coef; }
    };

    QPoly() = default;

    /// Canonicalizes: sorts, merges equal exponents, drops zeros.
    explicit QPoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

    static QPoly constant(const BigInt &c) { return monomial_half(c, 0); }
    static QPoly one() { return constant(1); }

    /// c * q^k
    static QPoly monomial(const BigInt &c, std::int64_t k) { return monomial_half(c, half_steps(k)); }

    /// c * q^(e/2)
    static QPoly monomial_half(const BigInt &c, HalfExp e)
    {
        QPoly p;
        if (c != 0) p.terms_.push_back({e, c});
        return p;
    }

    /// Dense coefficient list c[i] at q^(i * stride_q) (integer q-units), shifted by q^offset.
    static QPoly from_dense(const std::vector<BigInt> &coefs, std::int64_t stride_q = 1, std::int64_t offset_q = 0)
    {
        QPoly p;
        p.terms_.reserve(coefs.size());
        for (std::size_t i = 0; i < coefs.size(); ++i)
            if (coefs[i] != 0)
                p.terms_.push_back({half_steps(offset_q + static_cast<std::int64_t>(i) * stride_q), coefs[i]});
        return p;
    }

    const std::vector<Term> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    HalfExp min_exp() const
    {
        if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
        return terms_.front().exp;
    }
    HalfExp max_exp() const
    {
        if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
        return terms_.back().exp;
    }

    BigInt coefficient(HalfExp e) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term &t, HalfExp v) { return t.exp < v; });
        if (it != terms_.end() && it->exp == e) return it->coef;
        return 0;
    }

    BigInt eval_at_one() const
    {
        BigInt s = 0;
        for (const auto &t : terms_) s += t.coef;
        return s;
    }

    bool has_only_integer_exponents() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return t.exp % 2 == 0; });
    }

    bool has_nonnegative_coefficients() const
    {
        return std::all_of(terms_.begin(), terms_.end(), [](const Term &t) { return t.coef > 0; });
    }

    QPoly operator-() const
    {
        QPoly r = *this;
        for (auto &t : r.terms_) t.coef = -t.coef;
        return r;
    }

    friend QPoly operator+(const QPoly &a, const QPoly &b) { return merge(a, b, false); }
    friend QPoly operator-(const QPoly &a, const QPoly &b) { return merge(a, b, true); }
    friend QPoly operator*(const QPoly &a, const QPoly &b) { return multiply(a, b, nullptr); }
    QPoly &operator+=(const QPoly &o) { return *this = *this + o; }
    QPoly &operator-=(const QPoly &o) { return *this = *this - o; }
    QPoly &operator*=(const QPoly &o) { return *this = *this * o; }

    friend bool operator==(const QPoly &a, const QPoly &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QPoly &a, const QPoly &b) { return !(a == b); }

    /// Multiplies by c * q^(e/2).
    QPoly times_monomial(const BigInt &c, HalfExp e) const
    {
        if (c == 0) return {};
        QPoly r = *this;
        for (auto &t : r.terms_) {
            t.exp += e;
            t.coef *= c;
        }
        return r;
    }

    QPoly shifted(HalfExp e) const { return times_monomial(1, e); }

    /// Product with every term of exponent > max_half discarded.
    static QPoly multiply_truncated(const QPoly &a, const QPoly &b, HalfExp max_half)
    {
        return multiply(a, b, &max_half);
    }

    /// Drops every term with exponent above max_half (half-steps).
    QPoly truncated_half(HalfExp max_half) const
    {
        QPoly r;
        for (const auto &t : terms_)
            if (t.exp <= max_half) r.terms_.push_back(t);
        return r;
    }

    /// q -> q^k
    QPoly substitute_q_power(std::int64_t k) const
    {
        if (k == 0) throw std::invalid_argument("substitute_q_power: k must be nonzero");
        QPoly r = *this;
        for (auto &t : r.terms_) t.exp *= k;
        if (k < 0) std::reverse(r.terms_.begin(), r.terms_.end());
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &t : terms_) {
            BigInt c = t.coef;
            if (first) {
                if (c < 0) {
                    os << "-";
                    c = -c;
                }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            if (t.exp == 0) {
                os << c.get_str();
                continue;
            }
            if (c != 1) os << c.get_str() << "*";
            os << "q";
            if (t.exp % 2 == 0) {
                if (t.exp != 2) os << "^" << (t.exp / 2);
            } else {
                os << "^(" << t.exp << "/2)";
            }
        }
        return os.str();
    }

private:
    std::vector<Term> terms_;

    void canonicalize()
    {
        std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) { return a.exp < b.exp; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto &t : terms_) {
            if (!out.empty() && out.back().exp == t.exp)
                out.back().coef += t.coef;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term &t) { return t.coef == 0; });
        terms_ = std::move(out);
    }

    static QPoly merge(const QPoly &a, const QPoly &b, bool subtract)
    {
        QPoly r;
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->exp < j->exp)) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || j->exp < i->exp) {
                r.terms_.push_back({j->exp, subtract ? BigInt(-j->coef) : j->coef});
                ++j;
            } else {
                BigInt c = subtract ? BigInt(i->coef - j->coef) : BigInt(i->coef + j->coef);
                if (c != 0) r.terms_.push_back({i->exp, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    static HalfExp exponent_stride(const QPoly &p)
    {
        HalfExp g = 0;
        const HalfExp base = p.terms_.front().exp;
        for (const auto &t : p.terms_) g = std::gcd(g, t.exp - base);
        return g;
    }

    // Dense accumulation on the lattice spanned by both operands' exponent
    // strides; falls back to an ordered map when that lattice is too large.
    static QPoly multiply(const QPoly &a, const QPoly &b, const HalfExp *max_half)
    {
        if (a.is_zero() || b.is_zero()) return {};
        const HalfExp lo = a.min_exp() + b.min_exp();
        if (max_half && lo > *max_half) return {};
        HalfExp hi = a.max_exp() + b.max_exp();
        if (max_half) hi = std::min(hi, *max_half);

        HalfExp stride = std::gcd(exponent_stride(a), exponent_stride(b));
        if (stride == 0) stride = 1;
        const HalfExp span = (hi - lo) / stride + 1;

        if (span <= (HalfExp{1} << 24)) {
            std::vector<BigInt> acc(static_cast<std::size_t>(span));
            for (const auto &ta : a.terms_) {
                for (const auto &tb : b.terms_) {
                    const HalfExp e = ta.exp + tb.exp;
                    if (e > hi) break;
                    BigInt &slot = acc[static_cast<std::size_t>((e - lo) / stride)];
                    mpz_addmul(slot.get_mpz_t(), ta.coef.get_mpz_t(), tb.coef.get_mpz_t());
                }
            }
            QPoly r;
            for (HalfExp i = 0; i < span; ++i)
                if (acc[static_cast<std::size_t>(i)] != 0)
                    r.terms_.push_back({lo + i * stride, std::move(acc[static_cast<std::size_t>(i)])});
            return r;
        }

        std::map<HalfExp, BigInt> acc;
        for (const auto &ta : a.terms_)
            for (const auto &tb : b.terms_) {
                const HalfExp e = ta.exp + tb.exp;
                if (e > hi) break;
                mpz_addmul(acc[e].get_mpz_t(), ta.coef.get_mpz_t(), tb.coef.get_mpz_t());
            }
        QPoly r;
        for (auto &[e, c] : acc)
            if (c != 0) r.terms_.push_back({e, std::move(c)});
        return r;
    }
};

// Free-function spellings of the core operations.

inline QPoly add(const QPoly &p, const QPoly &r) { return p + r; }
inline QPoly mul(const QPoly &p, const QPoly &r) { return p * r; }
inline QPoly substitute_q_power(const QPoly &p, std::int64_t k) { return p.substitute_q_power(k); }
inline BigInt eval_at_one(const QPoly &p) { return p.eval_at_one(); }
inline BigInt coefficient(const QPoly &p, HalfExp e) { return p.coefficient(e); }

/// Keeps terms of degree <= t (q-units); i.e. reduction mod q^(t+1/2).
inline QPoly truncate(const QPoly &p, std::int64_t t) { return p.truncated_half(half_steps(t)); }

/// The x-graded family of truncated QPoly values.
class XSeries {
public:
    explicit XSeries(std::int64_t truncation) : truncation_(truncation)
    {
        if (truncation < 0) throw std::invalid_argument("XSeries: negative truncation");
    }

    std::int64_t truncation() const { return truncation_; }
    HalfExp max_half() const { return half_steps(truncation_); }
    const std::map<std::int64_t, QPoly> &strata() const { return strata_; }

    /// Adds p * x^d, truncating p first.
    void accumulate(std::int64_t x_degree, const QPoly &p)
    {
        if (x_degree < 0) throw std::invalid_argument("XSeries: negative x-degree");
        QPoly cut = p.truncated_half(max_half());
        if (cut.is_zero()) return;
        auto it = strata_.find(x_degree);
        if (it == strata_.end()) {
            strata_.emplace(x_degree, std::move(cut));
            return;
        }
        it->second += cut;
        if (it->second.is_zero()) strata_.erase(it);
    }

    QPoly stratum(std::int64_t x_degree) const
    {
        auto it = strata_.find(x_degree);
        return it == strata_.end() ? QPoly{} : it->second;
    }

    /// Sum over all strata (x = 1).
    QPoly at_x_one() const
    {
        QPoly s;
        for (const auto &[d, p] : strata_) s += p;
        return s;
    }

    bool is_zero() const { return strata_.empty(); }

    friend bool operator==(const XSeries &a, const XSeries &b)
    {
        return a.truncation_ == b.truncation_ && a.strata_ == b.strata_;
    }
    friend bool operator!=(const XSeries &a, const XSeries &b) { return !(a == b); }

private:
    std::int64_t truncation_;
    std::map<std::int64_t, QPoly> strata_;
};

enum class SeriesOp { add, mul };

inline XSeries xseries_combine(const XSeries &a, const XSeries &b, SeriesOp op)
{
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("xseries_combine: mismatched truncation bounds");
    XSeries out(a.truncation());
    if (op == SeriesOp::add) {
        for (const auto &[d, p] : a.strata()) out.accumulate(d, p);
        for (const auto &[d, p] : b.strata()) out.accumulate(d, p);
        return out;
    }
    for (const auto &[da, pa] : a.strata())
        for (const auto &[db, pb] : b.strata())
            out.accumulate(da + db, QPoly::multiply_truncated(pa, pb, out.max_half()));
    return out;
}

} // namespace qschur
