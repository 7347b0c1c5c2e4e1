#pragma once

/**
 * @file augmented.hpp
 * @brief Augmented-Max/Min: run vectors x((s)) of alternating blocks of s ones
 *        and s zeros, for run sizes derived from k = 2, 3, 4, 6, 8, 12, ...
 *        plus the shifted variants.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "divgen/bit_vector.hpp"
#include "divgen/collection.hpp"
#include "divgen/error.hpp"

namespace divgen {

enum class RunRounding { half_round, floor };

enum class KSchedule {
    /// k = 2, 3, 4, 6, 8, 12, ... with the sqrt(n) cutoff and the 1..sLim-1 tail.
    mixed,
    /// k = 2, 4, 8, ... up to n, no cutoff and no tail.
    powers_of_two,
};

struct AugmentedParams {
    std::size_t n = 0;
    std::size_t rlim = 1000;
    bool include_shift = false;
    RunRounding rounding = RunRounding::half_round;
    KSchedule schedule = KSchedule::mixed;
};

/// floor(sqrt(n) + 0.5), computed exactly: the m with (2m-1)^2 <= 4n < (2m+1)^2.
inline std::size_t rounded_sqrt(std::size_t n) {
    std::size_t m = 0;
    while ((2 * m + 1) * (2 * m + 1) <= 4 * n) ++m;
    return m;
}

namespace detail {

inline std::size_t run_size(std::size_t n, std::size_t k, RunRounding rounding) {
    // floor(n/k + 1/2) == floor((2n + k) / 2k)
    return rounding == RunRounding::half_round ? (2 * n + k) / (2 * k) : n / k;
}

inline void push_unique(std::vector<std::size_t>& out, std::size_t s) {
    if (s >= 1 && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

} // namespace detail

/// Run sizes in emission order, duplicates removed (first occurrence kept).
inline std::vector<std::size_t> k_sequence(std::size_t n, RunRounding rounding = RunRounding::half_round,
                                           KSchedule schedule = KSchedule::mixed) {
    if (n < 2) throw Error(ErrorCode::invalid_parameter, "augmented: n must be at least 2");
    std::vector<std::size_t> out;
    if (schedule == KSchedule::powers_of_two) {
        for (std::size_t k = 2; k <= n; k *= 2) detail::push_unique(out, detail::run_size(n, k, rounding));
        return out;
    }
    const std::size_t s_lim = rounded_sqrt(n);
    // k alternates 2^p and 2^(p-1) + 2^p: 2, 3, 4, 6, 8, 12, ...
    for (std::size_t p = 1;; ++p) {
        const std::size_t pow = std::size_t{1} << p;
        const std::size_t s1 = detail::run_size(n, pow, rounding);
        if (s1 <= s_lim) break;
        detail::push_unique(out, s1);
        const std::size_t s2 = detail::run_size(n, pow + pow / 2, rounding);
        if (s2 <= s_lim) break;
        detail::push_unique(out, s2);
    }
    for (std::size_t s = s_lim; s-- > 1;) detail::push_unique(out, s);
    return out;
}

/// s ones, s zeros, s ones, ... truncated to n components.
inline BinaryVector run_vector(std::size_t n, std::size_t s) {
    if (s < 1 || s > n) {
        throw Error(ErrorCode::invalid_parameter,
                    "run size " + std::to_string(s) + " outside 1.." + std::to_string(n));
    }
    BinaryVector v(n);
    for (std::size_t j = 1; j <= n; ++j) {
        if (((j - 1) / s) % 2 == 0) v.set(j);
    }
    return v;
}

/// Shifts right by floor(s/2): that many zeros enter on the left, the tail drops off.
inline BinaryVector shift_vector(const BinaryVector& v, std::size_t s) {
    if (s < 2) throw Error(ErrorCode::invalid_parameter, "shift requires run size >= 2");
    const std::size_t shift = s / 2;
    BinaryVector out(v.size());
    for (std::size_t j = shift + 1; j <= v.size(); ++j) {
        if (v.test(j - shift)) out.set(j);
    }
    return out;
}

inline Collection generate_augmented(const AugmentedParams& params) {
    if (params.rlim < 2) throw Error(ErrorCode::invalid_parameter, "augmented: rlim must be at least 2");
    const auto sizes = k_sequence(params.n, params.rounding, params.schedule);
    auto meta = [&](std::size_t s, bool shifted) {
        return Provenance{"augmented",
                          {{"n", static_cast<std::int64_t>(params.n)},
                           {"rlim", static_cast<std::int64_t>(params.rlim)},
                           {"s", static_cast<std::int64_t>(s)},
                           {"shifted", static_cast<std::int64_t>(shifted)}}};
    };

    Collection out(params.n);
    for (const auto s : sizes) {
        const auto run = run_vector(params.n, s);
        out.push_pair(run, meta(s, false));
        if (out.size() >= params.rlim) break;
        if (params.include_shift && s >= 2) {
            out.push_pair(shift_vector(run, s), meta(s, true));
            if (out.size() >= params.rlim) break;
        }
    }
    return out;
}

} // namespace divgen
