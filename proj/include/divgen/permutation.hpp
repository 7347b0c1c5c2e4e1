#pragma once

/**
 * @file permutation.hpp
 * @brief Permutation mappings M = (m(1), ..., m(n)) on 1-based indices, the
 *        interleaved gap permutation P_n(g), and recursive expansion of a
 *        collection by successive powers of M until the cycle closes.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "divgen/bit_vector.hpp"
#include "divgen/collection.hpp"
#include "divgen/error.hpp"

namespace divgen {

class PermutationMap {
public:
    PermutationMap() = default;

    /// Validates that `m` is a bijection on 1..m.size().
    explicit PermutationMap(std::vector<std::size_t> m) : m_(std::move(m)) {
        if (m_.empty()) throw Error(ErrorCode::invalid_parameter, "permutation must not be empty");
        std::vector<std::size_t> seen_at(m_.size() + 1, 0);
        for (std::size_t j = 1; j <= m_.size(); ++j) {
            const auto i = m_[j - 1];
            if (i < 1 || i > m_.size()) {
                throw Error(ErrorCode::invalid_parameter, "permutation index " + std::to_string(i) +
                                                              " at position " + std::to_string(j) +
                                                              " outside 1.." + std::to_string(m_.size()));
            }
            if (seen_at[i] != 0) {
                throw Error(ErrorCode::invalid_parameter,
                            "permutation is not a bijection: index " + std::to_string(i) +
                                " appears at positions " + std::to_string(seen_at[i]) + " and " +
                                std::to_string(j));
            }
            seen_at[i] = j;
        }
    }

    PermutationMap(std::initializer_list<std::size_t> m) : PermutationMap(std::vector<std::size_t>(m)) {}

    static PermutationMap identity(std::size_t n) {
        std::vector<std::size_t> m(n);
        for (std::size_t j = 0; j < n; ++j) m[j] = j + 1;
        return PermutationMap(std::move(m));
    }

    std::size_t size() const noexcept { return m_.size(); }

    /// m(j), both 1-based.
    std::size_t operator()(std::size_t j) const { return m_.at(j - 1); }

    const std::vector<std::size_t>& indices() const noexcept { return m_; }

    bool is_identity() const noexcept {
        for (std::size_t j = 0; j < m_.size(); ++j) {
            if (m_[j] != j + 1) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < m_.size(); ++j) {
            if (j != 0) s += ' ';
            s += std::to_string(m_[j]);
        }
        return s;
    }

    friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

private:
    std::vector<std::size_t> m_;
};

/**
 * P_n(g): the sub-permutations (s, s+g, ..., s + kMax*g) for s = g, g-1, ..., 1
 * placed end to end. g = 1 yields the identity, which is rejected as a
 * degenerate mapping.
 */
inline PermutationMap build_pn_g(std::size_t n, std::size_t g) {
    if (n < 2 || g < 1 || g > n - 1) {
        throw Error(ErrorCode::invalid_parameter,
                    "gap g=" + std::to_string(g) + " outside 1.." + std::to_string(n < 2 ? 0 : n - 1));
    }
    if (g == 1) {
        throw Error(ErrorCode::degenerate_mapping, "degenerate identity mapping: P_n(1) is the identity");
    }
    std::vector<std::size_t> m;
    m.reserve(n);
    for (std::size_t s = g; s >= 1; --s) {
        for (std::size_t j = s; j <= n; j += g) m.push_back(j);
    }
    return PermutationMap(std::move(m));
}

/// floor(n/2) - 1, the recommended gap; degenerate (< 2) for n <= 5.
inline std::size_t default_gap(std::size_t n) { return n / 2 >= 1 ? n / 2 - 1 : 0; }

/// result[j] = v[m(j)].
inline BinaryVector apply_mapping(const PermutationMap& m, const BinaryVector& v) {
    if (m.size() != v.size()) {
        throw Error(ErrorCode::length_mismatch, "mapping of length " + std::to_string(m.size()) +
                                                    " applied to vector of length " +
                                                    std::to_string(v.size()));
    }
    BinaryVector out(v.size());
    for (std::size_t j = 1; j <= v.size(); ++j) {
        if (v.test(m(j))) out.set(j);
    }
    return out;
}

/// M(P): result(j) = p(m(j)).
inline PermutationMap compose(const PermutationMap& m, const PermutationMap& p) {
    if (m.size() != p.size()) {
        throw Error(ErrorCode::length_mismatch, "cannot compose permutations of lengths " +
                                                    std::to_string(m.size()) + " and " +
                                                    std::to_string(p.size()));
    }
    std::vector<std::size_t> out(m.size());
    for (std::size_t j = 1; j <= m.size(); ++j) out[j - 1] = p(m(j));
    return PermutationMap(std::move(out));
}

/// m^-1(m(j)) = j.
inline PermutationMap invert(const PermutationMap& m) {
    std::vector<std::size_t> out(m.size());
    for (std::size_t j = 1; j <= m.size(); ++j) out[m(j) - 1] = j;
    return PermutationMap(std::move(out));
}

/// Smallest h >= 1 with M^h = identity.
inline std::size_t cycle_order(const PermutationMap& m) {
    std::size_t h = 1;
    for (auto power = m; !power.is_identity(); power = compose(m, power)) ++h;
    return h;
}

/**
 * Appends M^h(v) for h = 1, 2, ... and every v of `base` (base order within
 * each h) until M^(h+1) is the identity or the collection reaches rlim.
 * The base collection is copied to the front of the result.
 */
inline Collection recursive_expand(const Collection& base, const PermutationMap& m, std::size_t rlim,
                                   const ParamList& tag = {}) {
    if (m.is_identity()) {
        throw Error(ErrorCode::degenerate_mapping, "degenerate identity mapping: no diversification possible");
    }
    if (!base.empty() && base.length() != m.size()) {
        throw Error(ErrorCode::length_mismatch, "mapping of length " + std::to_string(m.size()) +
                                                    " applied to collection of length " +
                                                    std::to_string(base.length()));
    }
    Collection out = base;
    if (base.empty()) return out;

    auto power = m;
    for (std::int64_t h = 1; out.size() < rlim; ++h) {
        for (std::size_t r = 0; r < base.size() && out.size() < rlim; ++r) {
            Provenance meta{"permutation-map", tag};
            meta.params.emplace_back("h", h);
            meta.params.emplace_back("source", static_cast<std::int64_t>(r));
            out.push_back(apply_mapping(power, base[r]), std::move(meta));
        }
        power = compose(m, power);
        if (power.is_identity()) break;
    }
    return out;
}

} // namespace divgen
