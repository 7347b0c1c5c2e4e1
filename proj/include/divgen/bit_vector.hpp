#pragma once

/**
 * @file bit_vector.hpp
 * @brief Fixed-length packed binary vector plus the elementary transforms
 *        every generator is built from.
 *
 * Positions are 1-indexed throughout the public interface: position 1 is the
 * leftmost character of the textual form and the lowest bit of word 0.
 * Storage keeps the unused high bits of the last word at zero so that word
 * comparisons and popcounts need no masking.
 */

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "divgen/error.hpp"

namespace divgen {

class BinaryVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BinaryVector() = default;

    /// All-zero vector of length n (n >= 1).
    explicit BinaryVector(std::size_t n) : size_(n), words_(word_count(n), 0) {
        if (n == 0) {
            throw Error(ErrorCode::invalid_parameter, "binary vector length must be at least 1");
        }
    }

    static BinaryVector zeros(std::size_t n) { return BinaryVector(n); }

    static BinaryVector ones(std::size_t n) {
        BinaryVector v(n);
        for (auto& w : v.words_) w = ~word_type{0};
        v.clear_tail();
        return v;
    }

    /// Parses a run of '0'/'1' characters; the leftmost character is position 1.
    static BinaryVector from_string(std::string_view text) {
        if (text.empty()) {
            throw Error(ErrorCode::parse_error, "empty binary vector");
        }
        BinaryVector v(text.size());
        for (std::size_t k = 0; k < text.size(); ++k) {
            const char c = text[k];
            if (c == '1') {
                v.words_[k / word_bits] |= word_type{1} << (k % word_bits);
            } else if (c != '0') {
                throw Error(ErrorCode::parse_error,
                            "invalid character '" + std::string(1, c) + "' at position " +
                                std::to_string(k + 1));
            }
        }
        return v;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (std::size_t k = 0; k < size_; ++k) {
            if (bit(k)) s[k] = '1';
        }
        return s;
    }

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    /// Value at 1-indexed position j.
    bool test(std::size_t j) const {
        check_position(j);
        return bit(j - 1);
    }

    void set(std::size_t j, bool value = true) {
        check_position(j);
        const word_type mask = word_type{1} << ((j - 1) % word_bits);
        if (value) {
            words_[(j - 1) / word_bits] |= mask;
        } else {
            words_[(j - 1) / word_bits] &= ~mask;
        }
    }

    void flip(std::size_t j) {
        check_position(j);
        words_[(j - 1) / word_bits] ^= word_type{1} << ((j - 1) % word_bits);
    }

    /// Sets every position in the closed range [first, last]; no-op when first > last.
    void set_range(std::size_t first, std::size_t last) {
        for (std::size_t j = first; j <= last; ++j) set(j);
    }

    std::size_t popcount() const noexcept {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    const std::vector<word_type>& words() const noexcept { return words_; }

    BinaryVector operator~() const {
        BinaryVector v = *this;
        for (auto& w : v.words_) w = ~w;
        v.clear_tail();
        return v;
    }

    BinaryVector& operator^=(const BinaryVector& other) {
        require_same_length(*this, other);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
        return *this;
    }

    friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) { return a ^= b; }

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

    /// Orders by length, then lexicographically by textual form.
    friend std::strong_ordering operator<=>(const BinaryVector& a, const BinaryVector& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        for (std::size_t k = 0; k < a.size_; ++k) {
            if (a.bit(k) != b.bit(k)) {
                return a.bit(k) ? std::strong_ordering::greater : std::strong_ordering::less;
            }
        }
        return std::strong_ordering::equal;
    }

    static void require_same_length(const BinaryVector& a, const BinaryVector& b) {
        if (a.size_ != b.size_) {
            throw Error(ErrorCode::length_mismatch, "incompatible vectors: lengths " +
                                                        std::to_string(a.size_) + " and " +
                                                        std::to_string(b.size_));
        }
    }

private:
    static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }

    bool bit(std::size_t k) const { return (words_[k / word_bits] >> (k % word_bits)) & 1U; }

    void check_position(std::size_t j) const {
        if (j == 0 || j > size_) {
            throw Error(ErrorCode::invalid_parameter, "position " + std::to_string(j) +
                                                          " outside 1.." + std::to_string(size_));
        }
    }

    void clear_tail() {
        if (const auto rem = size_ % word_bits; rem != 0 && !words_.empty()) {
            words_.back() &= (word_type{1} << rem) - 1;
        }
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

inline BinaryVector complement(const BinaryVector& v) { return ~v; }

/// Number of positions where a and b differ. Lengths must agree.
inline std::size_t hamming(const BinaryVector& a, const BinaryVector& b) {
    BinaryVector::require_same_length(a, b);
    std::size_t d = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k) {
        d += static_cast<std::size_t>(std::popcount(wa[k] ^ wb[k]));
    }
    return d;
}

/// Complements the seed wherever the mask is 1.
inline BinaryVector apply_seed(const BinaryVector& seed, const BinaryVector& mask) {
    return seed ^ mask;
}

enum class RebalanceTarget { complemented, uncomplemented };

/**
 * Changes the treatment of every stride-th designated position.
 *
 * The designated positions are those with mask value 1 (complemented target)
 * or 0 (uncomplemented target), in ascending order. The members ranked
 * stride, 2*stride, ... are flipped; the first stride-1 are kept.
 */
inline BinaryVector rebalance(const BinaryVector& mask, RebalanceTarget target, unsigned stride) {
    if (stride != 2 && stride != 3) {
        throw Error(ErrorCode::invalid_parameter,
                    "rebalance stride must be 2 or 3, got " + std::to_string(stride));
    }
    const bool designated = target == RebalanceTarget::complemented;
    BinaryVector out = mask;
    std::size_t rank = 0;
    for (std::size_t j = 1; j <= mask.size(); ++j) {
        if (mask.test(j) != designated) continue;
        if (++rank % stride == 0) out.flip(j);
    }
    return out;
}

} // namespace divgen

template <>
struct std::hash<divgen::BinaryVector> {
    std::size_t operator()(const divgen::BinaryVector& v) const noexcept {
        std::size_t h = std::hash<std::size_t>{}(v.size());
        for (auto w : v.words()) {
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};
