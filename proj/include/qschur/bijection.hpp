#pragma once

// Constructive bijection between (minimal configuration, motion data) and
// Schur-admissible partitions.
//
// A minimal configuration (n1, n2, m) is
//   1, 4, ..., 3n1-2 | 3n1+2, ..., 3(n1+n2)-1 | 3(n1+n2)+3, +4, +4, ...
// (a 1-mod-3 chain, a 2-mod-3 chain, m singletons).  Forward motions are
// applied in a fixed global order: singletons (largest first), then pairs
// split off the top of the 2-mod-3 chain (largest pair first), then pairs
// split off the 1-mod-3 chain.  Every pair step adds 6 to the size: the pair
// advances 3(1 + c) while the c parts it crosses drop back by 6 each.

#include "qschur/partitions.hpp"
#include "qschur/schur_sums.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

struct MinimalConfig {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t m = 0;

    std::int64_t pairs1() const { return n1 / 2; }
    std::int64_t pairs2() const { return n2 / 2; }
    std::int64_t parts() const { return n1 + n2 + m; }

    friend bool operator==(const MinimalConfig &, const MinimalConfig &) = default;
    friend auto operator<=>(const MinimalConfig &, const MinimalConfig &) = default;
};

/// Motion amounts, each list stored smallest mover first and weakly increasing.
/// r[i] moves singleton i; rho2[i] / rho1[i] count the steps of pair i of the
/// 2-mod-3 / 1-mod-3 chain (pair 0 is the lowest).
struct MotionData {
    std::vector<std::int64_t> r;
    std::vector<std::int64_t> rho2;
    std::vector<std::int64_t> rho1;

    std::int64_t size_increment() const
    {
        std::int64_t s = 0;
        for (auto v : r) s += v;
        for (auto v : rho2) s += 6 * v;
        for (auto v : rho1) s += 6 * v;
        return s;
    }

    friend bool operator==(const MotionData &, const MotionData &) = default;
};

enum class PartRole { chain1, chain2, pair1, pair2, singleton };

inline const char *role_name(PartRole r)
{
    switch (r) {
    case PartRole::chain1: return "chain1";
    case PartRole::chain2: return "chain2";
    case PartRole::pair1: return "pair1";
    case PartRole::pair2: return "pair2";
    case PartRole::singleton: return "singleton";
    }
    return "?";
}

struct LabeledPart {
    std::int64_t value = 0;
    PartRole role = PartRole::singleton;
    std::int64_t index = 0; // pair or singleton index; position within the chain otherwise

    friend bool operator==(const LabeledPart &, const LabeledPart &) = default;
};

/// Parts in increasing order, each carrying the object it belongs to.
class DecoratedPartition {
public:
    DecoratedPartition() = default;
    explicit DecoratedPartition(std::vector<LabeledPart> parts) : parts_(std::move(parts)) { sort(); }

    const std::vector<LabeledPart> &parts() const { return parts_; }
    std::vector<LabeledPart> &mutable_parts() { return parts_; }

    std::vector<std::int64_t> values() const
    {
        std::vector<std::int64_t> v;
        v.reserve(parts_.size());
        for (const auto &p : parts_) v.push_back(p.value);
        return v;
    }

    Partition partition() const { return Partition(values()); }

    /// Position of the lower element of the given pair.
    std::size_t pair_position(PartRole role, std::int64_t index) const
    {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
            if (parts_[i].role == role && parts_[i].index == index) return i;
        throw std::logic_error("DecoratedPartition: pair not found");
    }

    void sort()
    {
        std::stable_sort(parts_.begin(), parts_.end(),
                         [](const LabeledPart &a, const LabeledPart &b) { return a.value < b.value; });
    }

private:
    std::vector<LabeledPart> parts_;
};

enum class MotionRule { free, cross_one, cross_two, cross_three, cross_chain };

inline const char *rule_name(MotionRule r)
{
    switch (r) {
    case MotionRule::free: return "free";
    case MotionRule::cross_one: return "cross_one";
    case MotionRule::cross_two: return "cross_two";
    case MotionRule::cross_three: return "cross_three";
    case MotionRule::cross_chain: return "cross_chain";
    }
    return "?";
}

/// One logged pair step.
struct PairStep {
    PartRole pair = PartRole::pair2;
    std::int64_t pair_index = 0;
    MotionRule rule = MotionRule::free;
    std::int64_t crossed = 0;
    std::int64_t larger_before = 0;
    std::int64_t larger_after = 0;
    std::int64_t size_before = 0;
    std::int64_t size_after = 0;
};

/// Thrown when a pair step has no applicable rule, or when strict mode finds an
/// inadmissible intermediate state.  The message carries the local configuration.
class MotionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MotionOptions {
    bool strict = false;
    std::function<void(const PairStep &)> on_step;
};

namespace detail {

inline std::string describe(const std::vector<std::int64_t> &values, std::size_t pos)
{
    std::ostringstream os;
    os << "parts (";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ",";
        if (i == pos) os << "[";
        os << values[i];
        if (i == pos + 1) os << "]";
    }
    os << ")";
    return os.str();
}

/// How many parts the pair at `pos` crosses on its next forward step, and by
/// which rule.  Free motion is tried first, then the crossing rules in order
/// of the number of parts crossed; the first whose pattern matches and whose
/// result is admissible wins.
struct StepChoice {
    MotionRule rule;
    std::int64_t crossed;
};

inline bool admissible_after(const std::vector<std::int64_t> &values, std::size_t pos, std::int64_t crossed)
{
    std::vector<std::int64_t> next(values);
    const std::int64_t advance = 3 * (1 + crossed);
    next[pos] += advance;
    next[pos + 1] += advance;
    for (std::int64_t c = 0; c < crossed; ++c) next[pos + 2 + static_cast<std::size_t>(c)] -= 6;
    std::sort(next.begin(), next.end());
    return is_schur_admissible(next);
}

inline std::optional<StepChoice> choose_step(const std::vector<std::int64_t> &values, std::size_t pos,
                                             bool one_mod_three)
{
    const std::int64_t x = values[pos];
    const std::int64_t y = values[pos + 1];
    const std::size_t above = values.size() - pos - 2;
    auto up = [&](std::size_t k) { return values[pos + 1 + k]; }; // k-th part above the pair, 1-based

    if (above == 0 || up(1) >= y + 6) return StepChoice{MotionRule::free, 0};

    const std::int64_t r = up(1) - (x + 6);
    if (r >= 0 && r <= 2 && admissible_after(values, pos, 1)) return StepChoice{MotionRule::cross_one, 1};

    if (above >= 2) {
        const std::int64_t s = up(2) - (x + 10);
        if (r >= 0 && r <= 2 && s >= 0 && s <= 2 && s - r <= 1 && admissible_after(values, pos, 2))
            return StepChoice{MotionRule::cross_two, 2};
    }
    if (above >= 3) {
        const std::int64_t s = up(2) - (x + 10);
        const std::int64_t t = up(3) - (x + 14);
        auto in01 = [](std::int64_t v) { return v == 0 || v == 1; };
        if (in01(r) && in01(s) && in01(t) && s - r <= 1 && t - s <= 1 && admissible_after(values, pos, 3))
            return StepChoice{MotionRule::cross_three, 3};
    }
    if (one_mod_three && up(1) == x + 7) {
        std::size_t run = 1;
        while (run < above && up(run + 1) == up(run) + 3) ++run;
        if (run >= 3 && admissible_after(values, pos, static_cast<std::int64_t>(run)))
            return StepChoice{MotionRule::cross_chain, static_cast<std::int64_t>(run)};
    }
    return std::nullopt;
}

inline std::int64_t sum_of(const std::vector<std::int64_t> &v)
{
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

} // namespace detail

/// The minimal configuration with labels; its size is weight_A(n1, n2, m).
inline DecoratedPartition minimal_configuration(const MinimalConfig &c)
{
    if (c.n1 < 0 || c.n2 < 0 || c.m < 0) throw std::invalid_argument("minimal_configuration: negative field");
    std::vector<LabeledPart> parts;
    const std::int64_t residual1 = c.n1 - 2 * c.pairs1();
    for (std::int64_t j = 0; j < c.n1; ++j) {
        const std::int64_t v = 3 * j + 1;
        if (j < residual1)
            parts.push_back({v, PartRole::chain1, j});
        else
            parts.push_back({v, PartRole::pair1, (j - residual1) / 2});
    }
    const std::int64_t residual2 = c.n2 - 2 * c.pairs2();
    for (std::int64_t j = 0; j < c.n2; ++j) {
        const std::int64_t v = 3 * (c.n1 + j) + 2;
        if (j < residual2)
            parts.push_back({v, PartRole::chain2, j});
        else
            parts.push_back({v, PartRole::pair2, (j - residual2) / 2});
    }
    for (std::int64_t i = 0; i < c.m; ++i) parts.push_back({3 * (c.n1 + c.n2) + 3 + 4 * i, PartRole::singleton, i});
    return DecoratedPartition(std::move(parts));
}

inline bool motion_data_fits(const MinimalConfig &c, const MotionData &d)
{
    auto ok = [](const std::vector<std::int64_t> &v, std::int64_t len) {
        if (static_cast<std::int64_t>(v.size()) != len) return false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) return false;
            if (i > 0 && v[i] < v[i - 1]) return false;
        }
        return true;
    };
    return ok(d.r, c.m) && ok(d.rho2, c.pairs2()) && ok(d.rho1, c.pairs1());
}

/// Advances one pair by one step in place and returns the step record.
inline PairStep step_pair(DecoratedPartition &state, PartRole role, std::int64_t index)
{
    auto &parts = state.mutable_parts();
    const std::size_t pos = state.pair_position(role, index);
    const auto values = state.values();
    const auto choice = detail::choose_step(values, pos, role == PartRole::pair1);
    if (!choice)
        throw MotionError(std::string("no rule applies to ") + role_name(role) + " " + std::to_string(index) +
                          " in " + detail::describe(values, pos));
    PairStep step;
    step.pair = role;
    step.pair_index = index;
    step.rule = choice->rule;
    step.crossed = choice->crossed;
    step.larger_before = values[pos + 1];
    step.size_before = detail::sum_of(values);
    const std::int64_t advance = 3 * (1 + choice->crossed);
    parts[pos].value += advance;
    parts[pos + 1].value += advance;
    for (std::int64_t c = 0; c < choice->crossed; ++c) parts[pos + 2 + static_cast<std::size_t>(c)].value -= 6;
    state.sort();
    step.larger_after = parts[state.pair_position(role, index) + 1].value;
    step.size_after = step.size_before + 6;
    return step;
}

/// Runs every motion on the labeled state and returns it.
inline DecoratedPartition apply_motions_decorated(const MinimalConfig &c, const MotionData &d,
                                                  const MotionOptions &opts = {})
{
    if (!motion_data_fits(c, d)) throw std::invalid_argument("apply_motions: motion data not shaped for configuration");
    DecoratedPartition state = minimal_configuration(c);
    for (auto &p : state.mutable_parts())
        if (p.role == PartRole::singleton) p.value += d.r[static_cast<std::size_t>(p.index)];
    state.sort();
    if (opts.strict && !is_schur_admissible(state.values()))
        throw MotionError("singleton motions produced an inadmissible partition");

    auto run_pairs = [&](PartRole role, const std::vector<std::int64_t> &amounts) {
        for (std::int64_t i = static_cast<std::int64_t>(amounts.size()) - 1; i >= 0; --i)
            for (std::int64_t k = 0; k < amounts[static_cast<std::size_t>(i)]; ++k) {
                PairStep step = step_pair(state, role, i);
                if (opts.strict) {
                    const auto v = state.values();
                    if (!is_schur_admissible(v))
                        throw MotionError("inadmissible state after " + std::string(rule_name(step.rule)) + ": " +
                                          detail::describe(v, state.pair_position(role, i)));
                    if (step.larger_after - step.larger_before != 3 * (1 + step.crossed) ||
                        detail::sum_of(v) != step.size_after)
                        throw MotionError("displacement contract violated");
                }
                if (opts.on_step) opts.on_step(step);
            }
    };
    run_pairs(PartRole::pair2, d.rho2);
    run_pairs(PartRole::pair1, d.rho1);
    return state;
}

inline Partition apply_motions(const MinimalConfig &c, const MotionData &d, const MotionOptions &opts = {})
{
    return apply_motions_decorated(c, d, opts).partition();
}

/// Per-mover caps on the motions when every part must stay <= N.
struct MotionCaps {
    std::int64_t r_cap = 0;
    std::int64_t rho2_cap = 0;
    std::int64_t rho1_cap = 0;
};

inline MotionCaps max_motions(const MinimalConfig &c, std::int64_t N)
{
    if (minimal_configuration_top(c.n1, c.n2, c.m) > N)
        throw std::invalid_argument("max_motions: minimal configuration exceeds the bound");
    MotionCaps caps;
    caps.r_cap = c.m > 0 ? N - (3 * (c.n1 + c.n2) + 3 + 4 * (c.m - 1)) : 0;
    caps.rho2_cap = floor_div(N - (3 * (c.n1 + c.n2 - 1) + 2), 3) - c.m;
    caps.rho1_cap = floor_div(N - (3 * (c.n1 - 1) + 1), 3) - c.m - c.n2;
    return caps;
}

// ------------------------------------------------------------------ decode

namespace detail {

struct Decoder {
    MinimalConfig config;
    std::vector<std::int64_t> rho1; // filled smallest pair first
    std::vector<std::int64_t> rho2;

    static std::int64_t chain_value(PartRole chain, const MinimalConfig &c, std::int64_t j)
    {
        return chain == PartRole::pair1 ? 3 * j + 1 : 3 * (c.n1 + j) + 2;
    }

    // Undo one forward step of the pair whose lower element sits at `pos`.
    // Each candidate pre-state is confirmed by re-running the forward rule.
    static std::vector<std::pair<std::vector<std::int64_t>, std::size_t>>
    predecessors(const std::vector<std::int64_t> &values, std::size_t pos, bool one_mod_three)
    {
        std::vector<std::pair<std::vector<std::int64_t>, std::size_t>> out;
        const std::size_t max_crossed = pos;
        for (std::size_t crossed = 0; crossed <= max_crossed; ++crossed) {
            if (crossed > 3 && !one_mod_three) break;
            const std::int64_t advance = 3 * (1 + static_cast<std::int64_t>(crossed));
            std::vector<std::int64_t> prev(values);
            prev[pos] -= advance;
            prev[pos + 1] -= advance;
            for (std::size_t c = 1; c <= crossed; ++c) prev[pos - c] += 6;
            if (!std::is_sorted(prev.begin(), prev.end())) {
                // the crossed parts must sit right above the pair afterwards
                std::vector<std::int64_t> sorted(prev);
                std::sort(sorted.begin(), sorted.end());
                std::size_t new_pos = pos - crossed;
                if (sorted[new_pos] != prev[pos] || sorted[new_pos + 1] != prev[pos + 1]) continue;
                prev = std::move(sorted);
            }
            const std::size_t prev_pos = pos - crossed;
            if (prev[prev_pos] < 1 || !is_schur_admissible(prev)) continue;
            const auto choice = choose_step(prev, prev_pos, one_mod_three);
            if (!choice || choice->crossed != static_cast<std::int64_t>(crossed)) continue;
            out.emplace_back(std::move(prev), prev_pos);
        }
        return out;
    }

    // Move the pair at `pos` back to `home`; invokes `next` for every way of doing so.
    template <class Next>
    static bool unwind_pair(const std::vector<std::int64_t> &values, std::size_t pos, std::int64_t home,
                            bool one_mod_three, std::int64_t steps, const Next &next)
    {
        if (values[pos] == home) return next(values, steps);
        if (values[pos] < home) return false;
        for (auto &[prev, prev_pos] : predecessors(values, pos, one_mod_three))
            if (prev[prev_pos] >= home && unwind_pair(prev, prev_pos, home, one_mod_three, steps + 1, next))
                return true;
        return false;
    }

    // Reverses the pairs of one chain, smallest pair first, then continues with `rest`.
    template <class Rest>
    bool unwind_chain(const std::vector<std::int64_t> &values, PartRole chain, std::int64_t pair,
                      std::vector<std::int64_t> &amounts, const Rest &rest)
    {
        const std::int64_t n = chain == PartRole::pair1 ? config.n1 : config.n2;
        const std::int64_t pairs = n / 2;
        const std::int64_t residual = n - 2 * pairs;
        const std::size_t below_chain = chain == PartRole::pair1 ? 0 : static_cast<std::size_t>(config.n1);
        if (pair == pairs) return rest(values);

        const std::int64_t home_index = residual + 2 * pair;
        const std::int64_t home = chain_value(chain, config, home_index);
        const std::size_t fixed = below_chain + static_cast<std::size_t>(home_index);
        if (values.size() < fixed + 2) return false;
        for (std::size_t i = 0; i < fixed; ++i) {
            const std::int64_t want = i < below_chain ? chain_value(PartRole::pair1, config, static_cast<std::int64_t>(i))
                                                      : chain_value(chain, config, static_cast<std::int64_t>(i - below_chain));
            if (values[i] != want) return false;
        }
        const bool one_mod_three = chain == PartRole::pair1;
        const std::int64_t residue = one_mod_three ? 1 : 2;
        for (std::size_t pos = fixed; pos + 1 < values.size(); ++pos) {
            if (values[pos] % 3 != residue || values[pos + 1] != values[pos] + 3) continue;
            const bool found = unwind_pair(values, pos, home, one_mod_three, 0,
                                           [&](const std::vector<std::int64_t> &at_home, std::int64_t steps) {
                                               if (pair > 0 && steps < amounts[static_cast<std::size_t>(pair - 1)])
                                                   return false;
                                               amounts.push_back(steps);
                                               if (unwind_chain(at_home, chain, pair + 1, amounts, rest)) return true;
                                               amounts.pop_back();
                                               return false;
                                           });
            if (found) return true;
        }
        return false;
    }
};

} // namespace detail

struct Decoded {
    MinimalConfig config;
    MotionData motions;
};

/// Inverse of apply_motions.
inline Decoded decode(const Partition &p)
{
    if (!is_schur_admissible(p)) throw std::invalid_argument("decode: partition is not Schur-admissible");
    const auto &values = p.parts();
    const std::int64_t parts = static_cast<std::int64_t>(values.size());
    const std::int64_t size = p.size();

    for (std::int64_t m = 0; m <= parts; ++m)
        for (std::int64_t n1 = 0; n1 + m <= parts; ++n1) {
            const MinimalConfig c{n1, parts - m - n1, m};
            if (weight_A(c.n1, c.n2, c.m) > size) continue;
            detail::Decoder dec{c, {}, {}};
            std::optional<Decoded> result;
            auto singletons = [&](const std::vector<std::int64_t> &state) {
                const auto base = minimal_configuration(c).values();
                MotionData d;
                for (std::size_t i = 0; i < state.size(); ++i) {
                    const std::int64_t shift = state[i] - base[i];
                    if (i < static_cast<std::size_t>(c.n1 + c.n2)) {
                        if (shift != 0) return false;
                    } else {
                        if (shift < 0 || (!d.r.empty() && shift < d.r.back())) return false;
                        d.r.push_back(shift);
                    }
                }
                d.rho1 = dec.rho1;
                d.rho2 = dec.rho2;
                if (apply_motions(c, d) != p) return false;
                result = Decoded{c, std::move(d)};
                return true;
            };
            auto second_chain = [&](const std::vector<std::int64_t> &state) {
                return dec.unwind_chain(state, PartRole::pair2, 0, dec.rho2, singletons);
            };
            if (dec.unwind_chain(values, PartRole::pair1, 0, dec.rho1, second_chain)) return *result;
        }
    throw MotionError("decode: no preimage found for (" + p.to_string() + ")");
}

// -------------------------------------------------------------- enumeration

namespace detail {

// Weakly increasing lists of length `len` with weight * sum <= budget.
inline void monotone_lists(std::int64_t len, std::int64_t budget, std::int64_t weight, std::int64_t cap,
                           std::vector<std::int64_t> &cur, const std::function<void(std::int64_t)> &emit)
{
    if (static_cast<std::int64_t>(cur.size()) == len) {
        emit(budget);
        return;
    }
    const std::int64_t lo = cur.empty() ? 0 : cur.back();
    const std::int64_t remaining = len - static_cast<std::int64_t>(cur.size());
    for (std::int64_t v = lo; v <= cap && weight * v * remaining <= budget; ++v) {
        cur.push_back(v);
        monotone_lists(len, budget - weight * v, weight, cap, cur, emit);
        cur.pop_back();
    }
}

} // namespace detail

/// Every (configuration, motion data) pair whose image has size <= max_size,
/// optionally with each motion amount within the caps for largest part <= N.
inline void for_each_motion_datum(std::int64_t max_size, std::optional<std::int64_t> largest_part,
                                  const std::function<void(const MinimalConfig &, const MotionData &)> &visit)
{
    constexpr std::int64_t unbounded = std::numeric_limits<std::int32_t>::max();
    for (std::int64_t m = 0; weight_A(0, 0, m) <= max_size; ++m)
        for (std::int64_t n1 = 0; weight_A(n1, 0, m) <= max_size; ++n1)
            for (std::int64_t n2 = 0; weight_A(n1, n2, m) <= max_size; ++n2) {
                const MinimalConfig c{n1, n2, m};
                MotionCaps caps{unbounded, unbounded, unbounded};
                if (largest_part) {
                    if (minimal_configuration_top(n1, n2, m) > *largest_part) continue;
                    caps = max_motions(c, *largest_part);
                }
                MotionData d;
                std::vector<std::int64_t> cur;
                const std::int64_t budget = max_size - weight_A(n1, n2, m);
                detail::monotone_lists(c.m, budget, 1, caps.r_cap, cur, [&](std::int64_t b1) {
                    d.r = cur;
                    std::vector<std::int64_t> cur2;
                    detail::monotone_lists(c.pairs2(), b1, 6, caps.rho2_cap, cur2, [&](std::int64_t b2) {
                        d.rho2 = cur2;
                        std::vector<std::int64_t> cur1;
                        detail::monotone_lists(c.pairs1(), b2, 6, caps.rho1_cap, cur1, [&](std::int64_t) {
                            d.rho1 = cur1;
                            visit(c, d);
                        });
                    });
                });
            }
}

/// Outcome of an exhaustive encode/decode sweep.
struct BijectionSweep {
    std::int64_t max_size = 0;
    std::int64_t data = 0;
    std::int64_t rule_errors = 0;
    std::int64_t duplicates = 0;
    std::int64_t roundtrip_failures = 0;
    std::int64_t contract_failures = 0;
    std::int64_t missing = 0;
    std::vector<std::string> problems; // first few, verbatim
    XSeries certified{0};               // x^parts q^size over distinct images that decode back to their datum

    std::int64_t problem_count() const
    {
        return rule_errors + duplicates + roundtrip_failures + contract_failures + missing;
    }
    bool ok() const { return problem_count() == 0; }
};

/// Encodes every datum of size <= max_size in strict mode, then checks
/// injectivity, coverage of the admissible set, and decode on every image.
inline BijectionSweep certify_bijection(std::int64_t max_size)
{
    if (max_size < 0) throw std::invalid_argument("certify_bijection: negative size bound");
    BijectionSweep out;
    out.max_size = max_size;
    out.certified = XSeries(max_size);
    auto note = [&](std::string msg) {
        if (out.problems.size() < 20) out.problems.push_back(std::move(msg));
    };

    std::map<std::vector<std::int64_t>, std::pair<MinimalConfig, MotionData>> images;
    for_each_motion_datum(max_size, std::nullopt, [&](const MinimalConfig &c, const MotionData &d) {
        ++out.data;
        bool contracts = true;
        MotionOptions opts;
        opts.strict = true;
        opts.on_step = [&](const PairStep &s) {
            if (s.larger_after - s.larger_before != 3 * (1 + s.crossed) || s.size_after - s.size_before != 6)
                contracts = false;
        };
        Partition p;
        try {
            p = apply_motions(c, d, opts);
        } catch (const MotionError &e) {
            ++out.rule_errors;
            note(e.what());
            return;
        }
        if (!contracts || p.size() != weight_A(c.n1, c.n2, c.m) + d.size_increment()) {
            ++out.contract_failures;
            note("contract violated for (" + p.to_string() + ")");
        }
        if (!images.emplace(p.parts(), std::make_pair(c, d)).second) {
            ++out.duplicates;
            note("two data encode to (" + p.to_string() + ")");
        }
    });

    const auto admissible = enumerate_schur(max_size);
    for (const auto &bucket : admissible)
        for (const auto &p : bucket) {
            auto it = images.find(p.parts());
            if (it == images.end()) {
                ++out.missing;
                note("no datum encodes (" + p.to_string() + ")");
                continue;
            }
            try {
                const Decoded back = decode(p);
                if (!(back.config == it->second.first && back.motions == it->second.second)) {
                    ++out.roundtrip_failures;
                    note("decode mismatch on (" + p.to_string() + ")");
                    continue;
                }
            } catch (const std::exception &e) {
                ++out.roundtrip_failures;
                note(e.what());
                continue;
            }
            out.certified.accumulate(static_cast<std::int64_t>(p.length()), QPoly::monomial(1, p.size()));
        }
    return out;
}

} // namespace qschur
