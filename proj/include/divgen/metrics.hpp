#pragma once

/**
 * @file metrics.hpp
 * @brief Exact diversity statistics over a collection: mean pairwise Hamming
 *        distance, gap pairs and mean gap, coverage, plus balance and dedup.
 *
 * A member z lies between x and y when it agrees with them wherever they
 * agree and differs (as a value) from both; that is the hypercube interval
 * of x and y. Gap pairs are unordered index pairs with no member between
 * them. Pairs of equal values are gap pairs at distance 0.
 */

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "divgen/bit_vector.hpp"
#include "divgen/collection.hpp"
#include "divgen/error.hpp"

namespace divgen {

/// Non-negative rational in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error(ErrorCode::invalid_parameter, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const auto g = std::gcd(num, den);
        return {num / g, den / g};
    }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw Error(ErrorCode::invalid_parameter, "division by zero rational");
        return of(a.num * b.den, a.den * b.num);
    }

    /// num/den, e.g. "32/7".
    std::string exact() const { return std::to_string(num) + "/" + std::to_string(den); }

    /// Six decimal places, rounded half away from zero.
    std::string decimal() const {
        const bool negative = num < 0;
        const __int128 scaled = static_cast<__int128>(negative ? -num : num) * 1'000'000;
        const __int128 q = (2 * scaled + den) / (2 * static_cast<__int128>(den));
        const auto whole = static_cast<std::int64_t>(q / 1'000'000);
        auto frac = std::to_string(static_cast<std::int64_t>(q % 1'000'000));
        frac.insert(0, 6 - frac.size(), '0');
        return (negative ? "-" : "") + std::to_string(whole) + "." + frac;
    }
};

namespace detail {

inline void require_pairs(const Collection& c, const char* what) {
    if (c.size() < 2) {
        throw Error(ErrorCode::insufficient_vectors,
                    std::string(what) + ": need at least 2 vectors, got " + std::to_string(c.size()));
    }
}

/// z agrees with x on every coordinate where x and y agree.
inline bool within_interval(const BinaryVector& x, const BinaryVector& y, const BinaryVector& z) {
    const auto& wx = x.words();
    const auto& wy = y.words();
    const auto& wz = z.words();
    for (std::size_t k = 0; k < wx.size(); ++k) {
        if (((wz[k] ^ wx[k]) & ~(wx[k] ^ wy[k])) != 0) return false;
    }
    return true;
}

} // namespace detail

inline bool is_between(const BinaryVector& x, const BinaryVector& y, const BinaryVector& z) {
    BinaryVector::require_same_length(x, y);
    BinaryVector::require_same_length(x, z);
    return z != x && z != y && detail::within_interval(x, y, z);
}

/// Average Hamming distance over all unordered index pairs.
inline Rational mean_diversity(const Collection& c) {
    detail::require_pairs(c, "mean_diversity");
    std::int64_t total = 0;
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) total += static_cast<std::int64_t>(hamming(c[a], c[b]));
    }
    const auto count = static_cast<std::int64_t>(c.size());
    return Rational::of(total, count * (count - 1) / 2);
}

inline std::size_t min_pairwise(const Collection& c) {
    detail::require_pairs(c, "min_pairwise");
    std::size_t best = c.length();
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) best = std::min(best, hamming(c[a], c[b]));
    }
    return best;
}

/// Index pairs (a, b), a < b, with no member strictly between c[a] and c[b].
inline std::vector<std::pair<std::size_t, std::size_t>> gap_pairs(const Collection& c) {
    detail::require_pairs(c, "gap_pairs");
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            const auto& x = c[a];
            const auto& y = c[b];
            bool blocked = false;
            for (std::size_t k = 0; k < c.size() && !blocked; ++k) {
                const auto& z = c[k];
                if (z == x || z == y || !detail::within_interval(x, y, z)) continue;
                assert(hamming(x, z) + hamming(z, y) == hamming(x, y));
                blocked = true;
            }
            if (!blocked) out.emplace_back(a, b);
        }
    }
    return out;
}

inline Rational mean_gap(const Collection& c) {
    const auto pairs = gap_pairs(c);
    std::int64_t total = 0;
    for (const auto& [a, b] : pairs) total += static_cast<std::int64_t>(hamming(c[a], c[b]));
    return Rational::of(total, static_cast<std::int64_t>(pairs.size()));
}

/// Mean diversity divided by mean gap.
inline Rational coverage(const Collection& c) {
    const auto gap = mean_gap(c);
    if (gap.num == 0) {
        throw Error(ErrorCode::insufficient_vectors, "coverage undefined: all vectors are identical (mean gap 0)");
    }
    return mean_diversity(c) / gap;
}

/// popcount -> number of members with that popcount.
inline std::map<std::size_t, std::size_t> balance_histogram(const Collection& c) {
    std::map<std::size_t, std::size_t> out;
    for (const auto& v : c) ++out[v.popcount()];
    return out;
}

/// Keeps the first occurrence of each value, preserving order and provenance.
inline Collection dedup(const Collection& c) {
    Collection out(c.length());
    std::unordered_set<BinaryVector> seen;
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (seen.insert(c[r]).second) out.push_back(c[r], c.provenance(r));
    }
    return out;
}

struct DiversityReport {
    std::size_t n = 0;
    std::size_t count = 0;
    Rational mean_diversity;
    std::size_t min_pairwise = 0;
    std::size_t gap_pair_count = 0;
    Rational mean_gap;
    /// Absent when the mean gap is 0.
    std::optional<Rational> coverage;
    std::map<std::size_t, std::size_t> balance_histogram;
};

inline DiversityReport diversity_report(const Collection& c) {
    DiversityReport r;
    r.n = c.length();
    r.count = c.size();
    r.mean_diversity = mean_diversity(c);
    r.min_pairwise = min_pairwise(c);
    const auto pairs = gap_pairs(c);
    r.gap_pair_count = pairs.size();
    std::int64_t total = 0;
    for (const auto& [a, b] : pairs) total += static_cast<std::int64_t>(hamming(c[a], c[b]));
    r.mean_gap = Rational::of(total, static_cast<std::int64_t>(pairs.size()));
    if (r.mean_gap.num != 0) r.coverage = r.mean_diversity / r.mean_gap;
    r.balance_histogram = balance_histogram(c);
    return r;
}

/**
 * One "key value" line per statistic. Rationals appear twice: rounded to six
 * decimals under their own key and as num/den under key_exact. Histogram
 * rows read "balance <popcount> <count>".
 */
inline std::string format_report(const DiversityReport& r) {
    std::string out;
    auto line = [&](const std::string& key, const std::string& value) { out += key + " " + value + "\n"; };
    line("n", std::to_string(r.n));
    line("count", std::to_string(r.count));
    line("mean_diversity", r.mean_diversity.decimal());
    line("mean_diversity_exact", r.mean_diversity.exact());
    line("min_pairwise", std::to_string(r.min_pairwise));
    line("gap_pairs", std::to_string(r.gap_pair_count));
    line("mean_gap", r.mean_gap.decimal());
    line("mean_gap_exact", r.mean_gap.exact());
    line("coverage", r.coverage ? r.coverage->decimal() : "undefined");
    line("coverage_exact", r.coverage ? r.coverage->exact() : "undefined");
    for (const auto& [ones, count] : r.balance_histogram) {
        line("balance", std::to_string(ones) + " " + std::to_string(count));
    }
    return out;
}

} // namespace divgen
