#pragma once

/**
 * @file constructive.hpp
 * @brief Vectors assembled from short sub-vectors: doubled (y', y'') and
 *        tripled (y', y'', y°) blocks over all 2^p sub-vectors, and the
 *        recursively paired strongly balanced family.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divgen/bit_vector.hpp"
#include "divgen/collection.hpp"
#include "divgen/error.hpp"

namespace divgen {

using SubvectorPair = std::pair<BinaryVector, BinaryVector>;

inline constexpr std::size_t max_subvector_dimension = 20;

/// All 2^p sub-vectors y' from all-ones down to all-zeros, each with y'' = Comp(y').
inline std::vector<SubvectorPair> enumerate_pairs(std::size_t p) {
    if (p < 1 || p > max_subvector_dimension) {
        throw Error(ErrorCode::invalid_parameter, "sub-vector dimension p must be in 1.." +
                                                      std::to_string(max_subvector_dimension));
    }
    const std::uint64_t count = std::uint64_t{1} << p;
    std::vector<SubvectorPair> out;
    out.reserve(count);
    for (std::uint64_t value = count; value-- > 0;) {
        BinaryVector y(p);
        // most significant bit first
        for (std::size_t j = 1; j <= p; ++j) {
            if ((value >> (p - j)) & 1U) y.set(j);
        }
        auto yc = complement(y);
        out.emplace_back(std::move(y), std::move(yc));
    }
    return out;
}

namespace detail {

/// Repeats the concatenation of `parts` end to end, truncated to n components.
inline BinaryVector replicate(const std::vector<const BinaryVector*>& parts, std::size_t n) {
    std::vector<bool> block;
    for (const auto* part : parts) {
        for (std::size_t j = 1; j <= part->size(); ++j) block.push_back(part->test(j));
    }
    BinaryVector out(n);
    for (std::size_t j = 1; j <= n; ++j) {
        if (block[(j - 1) % block.size()]) out.set(j);
    }
    return out;
}

inline BinaryVector replicate(const BinaryVector& block, std::size_t n) { return replicate({&block}, n); }

} // namespace detail

/// (y', y'', y', y'', ...) truncated to n.
inline BinaryVector build_doubled(const SubvectorPair& pair, std::size_t n) {
    BinaryVector::require_same_length(pair.first, pair.second);
    return detail::replicate({&pair.first, &pair.second}, n);
}

/// y° keeps the first floor(p/2) components of y' and takes the rest from y''.
inline BinaryVector third_block(const SubvectorPair& pair) {
    BinaryVector::require_same_length(pair.first, pair.second);
    const std::size_t p = pair.first.size();
    BinaryVector y = pair.second;
    for (std::size_t j = 1; j <= p / 2; ++j) y.set(j, pair.first.test(j));
    return y;
}

/// (y', y'', y°, y', y'', y°, ...) truncated to n.
inline BinaryVector build_tripled(const SubvectorPair& pair, std::size_t n) {
    const auto y3 = third_block(pair);
    return detail::replicate({&pair.first, &pair.second, &y3}, n);
}

enum class SubvectorForm { doubled, tripled };

struct SubvectorParams {
    std::size_t p = 3;
    std::size_t n = 0;
    SubvectorForm form = SubvectorForm::doubled;
    std::size_t rlim = 1000;
};

inline Collection generate_subvector(const SubvectorParams& params) {
    if (params.n < 1) throw Error(ErrorCode::invalid_parameter, "subvector: n must be at least 1");
    const auto pairs = enumerate_pairs(params.p);
    const bool tripled = params.form == SubvectorForm::tripled;
    Collection out(params.n);
    for (std::size_t h = 0; h < pairs.size() && out.size() < params.rlim; ++h) {
        out.push_back(tripled ? build_tripled(pairs[h], params.n) : build_doubled(pairs[h], params.n),
                      {"subvector",
                       {{"n", static_cast<std::int64_t>(params.n)},
                        {"p", static_cast<std::int64_t>(params.p)},
                        {"form", std::string(tripled ? "triple" : "double")},
                        {"h", static_cast<std::int64_t>(h + 1)}}});
    }
    return out;
}

inline constexpr std::size_t max_strongly_balanced_level = 5;

struct StronglyBalancedParams {
    std::size_t level = 1;
    /// Target length; 0 means the natural block length 2^level.
    std::size_t n = 0;
    std::size_t rlim = 1000;
};

/**
 * Blocks y(1..N) of one level of the strongly balanced family.
 *
 * Level 1 is (1,0), (0,1). Level L+1 lists every ordered pair (y(p), y(q))
 * in row-major order, where the level-L blocks are taken in the order
 * y(1), y(N), y(N-1), ..., y(2).
 */
inline std::vector<BinaryVector> strongly_balanced_blocks(std::size_t level) {
    if (level < 1) throw Error(ErrorCode::invalid_parameter, "strongly balanced level must be >= 1");
    if (level > max_strongly_balanced_level) {
        const std::string count = level - 1 < 64 ? "2^" + std::to_string(std::size_t{1} << (level - 1))
                                                  : "2^(2^" + std::to_string(level - 1) + ")";
        throw Error(ErrorCode::capacity_exceeded,
                    "strongly balanced level " + std::to_string(level) + " would produce " + count +
                        " vectors; the maximum level is " + std::to_string(max_strongly_balanced_level));
    }
    std::vector<BinaryVector> blocks{BinaryVector::from_string("10"), BinaryVector::from_string("01")};
    for (std::size_t l = 1; l < level; ++l) {
        std::vector<const BinaryVector*> order{&blocks.front()};
        for (std::size_t k = blocks.size(); k-- > 1;) order.push_back(&blocks[k]);

        const std::size_t width = blocks.front().size();
        std::vector<BinaryVector> next;
        next.reserve(order.size() * order.size());
        for (const auto* left : order) {
            for (const auto* right : order) {
                BinaryVector y(2 * width);
                for (std::size_t j = 1; j <= width; ++j) {
                    y.set(j, left->test(j));
                    y.set(width + j, right->test(j));
                }
                next.push_back(std::move(y));
            }
        }
        blocks = std::move(next);
    }
    return blocks;
}

inline Collection generate_strongly_balanced(const StronglyBalancedParams& params) {
    const auto blocks = strongly_balanced_blocks(params.level);
    const std::size_t n = params.n == 0 ? blocks.front().size() : params.n;
    Collection out(n);
    for (std::size_t h = 0; h < blocks.size() && out.size() < params.rlim; ++h) {
        out.push_back(detail::replicate(blocks[h], n),
                      {"strongly-balanced",
                       {{"n", static_cast<std::int64_t>(n)},
                        {"level", static_cast<std::int64_t>(params.level)},
                        {"h", static_cast<std::int64_t>(h + 1)}}});
    }
    return out;
}

} // namespace divgen
