#pragma once

/**
 * @file progressive_gap.hpp
 * @brief Progressive Gap generator: comb masks complementing s, s+g, s+2g, ...
 *        for gaps g = 1..gMax, and the extended form that fills runs of
 *        length Delta_g + 1 starting at 1, 1+g, 1+2g, ...
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "divgen/augmented.hpp"
#include "divgen/bit_vector.hpp"
#include "divgen/collection.hpp"
#include "divgen/error.hpp"

namespace divgen {

enum class PgMode { basic, extended };

struct PgParams {
    std::size_t n = 0;
    std::size_t rlim = 1000;
    PgMode mode = PgMode::basic;
    /// Drop the complement of the first vector (it equals the seed).
    bool skip_first_complement = false;
};

/// Positions s + k*g for k = 0..floor((n - s) / g).
inline BinaryVector pg_mask(std::size_t n, std::size_t g, std::size_t s) {
    if (g < 1 || s < 1 || s > n) {
        throw Error(ErrorCode::invalid_parameter, "pg: need g >= 1 and 1 <= s <= n");
    }
    BinaryVector v(n);
    for (std::size_t j = s; j <= n; j += g) v.set(j);
    return v;
}

/// Runs [j1, min(j1 + delta, n)] for j1 = 1, 1 + g, 1 + 2g, ...
inline BinaryVector pg_extended_mask(std::size_t n, std::size_t g, std::size_t delta) {
    if (g < 1) throw Error(ErrorCode::invalid_parameter, "pg: need g >= 1");
    BinaryVector v(n);
    for (std::size_t j1 = 1; j1 <= n; j1 += g) {
        v.set_range(j1, std::min(j1 + delta, n));
    }
    return v;
}

inline Collection generate_pg(const PgParams& params) {
    if (params.n < 1) throw Error(ErrorCode::invalid_parameter, "pg: n must be at least 1");
    if (params.rlim < 1) throw Error(ErrorCode::invalid_parameter, "pg: rlim must be at least 1");
    const std::size_t n = params.n;
    const std::size_t g_max = rounded_sqrt(n);
    const bool extended = params.mode == PgMode::extended;

    Collection out(n);
    auto emit = [&](const BinaryVector& v, Provenance meta) {
        const bool first = out.empty();
        out.push_back(v, meta);
        if (!(first && params.skip_first_complement)) out.push_back(complement(v), std::move(meta));
        return out.size() >= params.rlim;
    };
    auto meta = [&](std::size_t g, const char* key, std::size_t value) {
        return Provenance{extended ? "pg-extended" : "pg",
                          {{"n", static_cast<std::int64_t>(n)},
                           {"rlim", static_cast<std::int64_t>(params.rlim)},
                           {"g", static_cast<std::int64_t>(g)},
                           {key, static_cast<std::int64_t>(value)}}};
    };

    for (std::size_t g = 1; g <= g_max; ++g) {
        if (extended) {
            const std::size_t delta_max = g == 1 ? 0 : g - 2;
            for (std::size_t delta = 0; delta <= delta_max; ++delta) {
                if (emit(pg_extended_mask(n, g, delta), meta(g, "delta_g", delta))) return out;
            }
        } else {
            const std::size_t s_lim = g == 2 ? 1 : g;
            for (std::size_t s = 1; s <= s_lim && s <= n; ++s) {
                if (emit(pg_mask(n, g, s), meta(g, "s", s))) return out;
            }
        }
    }
    return out;
}

} // namespace divgen
