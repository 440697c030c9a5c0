#pragma once

// Helpers shared by the test binaries.

#include "qschur/qpoly.hpp"

#include <cctype>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qschur::fixtures {

/// Polynomial from (q-exponent, coefficient) pairs.
inline QPoly poly(std::initializer_list<std::pair<std::int64_t, long>> terms)
{
    std::vector<QPoly::Term> t;
    for (auto [e, c] : terms) t.push_back({half_steps(e), BigInt(c)});
    return QPoly(std::move(t));
}

/// Same, exponents given in half-steps.
inline QPoly poly_half(std::initializer_list<std::pair<std::int64_t, long>> terms)
{
    std::vector<QPoly::Term> t;
    for (auto [e, c] : terms) t.push_back({e, BigInt(c)});
    return QPoly(std::move(t));
}

/// Reads "1 + q + 2 q^5 + q^{10}" as typeset in print.
inline QPoly parse_typeset(const std::string &text)
{
    std::vector<QPoly::Term> terms;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto number = [&] {
        std::int64_t v = 0;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("parse_typeset: digit expected in '" + text + "'");
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = 10 * v + (text[i++] - '0');
        return v;
    };
    int sign = 1;
    skip();
    while (i < text.size()) {
        std::int64_t coef = 1;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            coef = number();
            skip();
        }
        std::int64_t exp = 0;
        if (i < text.size() && text[i] == 'q') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (text[i] == '{') {
                    ++i;
                    exp = number();
                    ++i;
                } else {
                    exp = number();
                }
            }
        }
        terms.push_back({half_steps(exp), BigInt(static_cast<long>(sign * coef))});
        skip();
        if (i < text.size()) {
            if (text[i] != '+' && text[i] != '-') throw std::invalid_argument("parse_typeset: bad text '" + text + "'");
            sign = text[i] == '+' ? 1 : -1;
            ++i;
            skip();
        }
    }
    return QPoly(std::move(terms));
}

/// Small random Laurent polynomial in q^(1/2).
inline QPoly random_poly(std::mt19937 &rng, int max_terms = 5, int exp_span = 8, int coef_span = 5)
{
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_span, exp_span);
    std::uniform_int_distribution<int> coef(-coef_span, coef_span);
    std::vector<QPoly::Term> terms;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) terms.push_back({exp(rng), BigInt(coef(rng))});
    return QPoly(std::move(terms));
}

/// Random polynomial with non-negative integer exponents.
inline QPoly random_series_poly(std::mt19937 &rng, int max_terms = 6, int max_exp = 12)
{
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<QPoly::Term> terms;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) terms.push_back({half_steps(exp(rng)), BigInt(coef(rng))});
    return QPoly(std::move(terms));
}

} // namespace qschur::fixtures
