#pragma once

// Brute-force partition enumeration: the two classes in Schur's theorem and
// their bivariate generating polynomials.  Nothing here depends on the
// analytic side builders; these are the independent oracles.

#include "qschur/qpoly.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

/// Non-decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] < parts_[i - 1]) throw std::invalid_argument("Partition: parts must be non-decreasing");
        }
    }

    const std::vector<std::int64_t> &parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::int64_t largest() const { return parts_.empty() ? 0 : parts_.back(); }

    std::int64_t size() const
    {
        std::int64_t s = 0;
        for (auto p : parts_) s += p;
        return s;
    }

    /// "1,4,8,12"; the empty partition is "".
    std::string to_string() const
    {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        return os.str();
    }

    static Partition parse(const std::string &text)
    {
        std::vector<std::int64_t> parts;
        std::string item;
        std::istringstream is(text);
        while (std::getline(is, item, ',')) {
            std::size_t pos = 0;
            auto first = item.find_first_not_of(" \t");
            if (first == std::string::npos) throw std::invalid_argument("Partition::parse: empty part in '" + text + "'");
            long long v = 0;
            try {
                v = std::stoll(item.substr(first), &pos);
            } catch (const std::exception &) {
                throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
            }
            if (item.find_first_not_of(" \t", first + pos) != std::string::npos)
                throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Gap condition between consecutive parts lo < hi of a Schur partition.
inline bool schur_gap_ok(std::int64_t lo, std::int64_t hi)
{
    const std::int64_t gap = hi - lo;
    if (gap < 3) return false;
    if (lo % 3 == 0 && hi % 3 == 0) return gap >= 6;
    return true;
}

/// Consecutive parts differ by at least 3, and by at least 6 when both are multiples of 3.
inline bool is_schur_admissible(const std::vector<std::int64_t> &parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && !schur_gap_ok(parts[i - 1], parts[i])) return false;
    }
    return true;
}

inline bool is_schur_admissible(const Partition &p) { return is_schur_admissible(p.parts()); }

/// Partitions grouped by size: result[n] lists the partitions of n in lexicographic order.
using PartitionsBySize = std::vector<std::vector<Partition>>;

namespace detail {

template <class Accept>
void enumerate_ascending(std::vector<std::int64_t> &prefix, std::int64_t remaining_budget, std::int64_t min_next,
                         std::int64_t max_part, std::int64_t total, const Accept &accept_next,
                         PartitionsBySize &out)
{
    out[static_cast<std::size_t>(total)].emplace_back(prefix);
    for (std::int64_t v = min_next; v <= remaining_budget && v <= max_part; ++v) {
        if (!prefix.empty() && !accept_next(prefix.back(), v)) continue;
        prefix.push_back(v);
        enumerate_ascending(prefix, remaining_budget - v, v + 1, max_part, total + v, accept_next, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All Schur-admissible partitions of every size <= n_max, optionally with parts <= largest_part.
inline PartitionsBySize enumerate_schur(std::int64_t n_max, std::optional<std::int64_t> largest_part = std::nullopt)
{
    if (n_max < 0) throw std::invalid_argument("enumerate_schur: n_max must be >= 0");
    PartitionsBySize out(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::int64_t> prefix;
    detail::enumerate_ascending(prefix, n_max, 1, largest_part.value_or(n_max), 0, schur_gap_ok, out);
    return out;
}

/// All partitions into distinct parts congruent to 1 or 2 mod 3, by size.
inline PartitionsBySize enumerate_distinct_pm1_mod3(std::int64_t n_max)
{
    if (n_max < 0) throw std::invalid_argument("enumerate_distinct_pm1_mod3: n_max must be >= 0");
    PartitionsBySize out(static_cast<std::size_t>(n_max) + 1);
    std::vector<std::int64_t> prefix;
    // Recursion with a residue filter on each chosen part.
    struct Walker {
        PartitionsBySize &out;
        std::vector<std::int64_t> &prefix;
        void operator()(std::int64_t budget, std::int64_t min_next, std::int64_t total)
        {
            out[static_cast<std::size_t>(total)].emplace_back(prefix);
            for (std::int64_t v = min_next; v <= budget; ++v) {
                if (v % 3 == 0) continue;
                prefix.push_back(v);
                (*this)(budget - v, v + 1, total + v);
                prefix.pop_back();
            }
        }
    } walk{out, prefix};
    walk(n_max, 1, 0);
    return out;
}

/// sum over admissible partitions of x^(number of parts) q^(size), truncated at q-degree t.
inline XSeries schur_gf_oracle(std::int64_t t, std::optional<std::int64_t> largest_part = std::nullopt)
{
    if (t < 0) throw std::invalid_argument("schur_gf_oracle: t must be >= 0");
    XSeries gf(t);
    const auto by_size = enumerate_schur(t, largest_part);
    for (std::size_t n = 0; n < by_size.size(); ++n)
        for (const auto &p : by_size[n])
            gf.accumulate(static_cast<std::int64_t>(p.length()), QPoly::monomial(1, static_cast<std::int64_t>(n)));
    return gf;
}

} // namespace qschur
