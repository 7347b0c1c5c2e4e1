#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "divgen/bit_vector.hpp"
#include "divgen/error.hpp"

namespace divgen {

using ParamValue = std::variant<std::int64_t, std::string>;
using ParamList = std::vector<std::pair<std::string, ParamValue>>;

/// Where a vector came from: generator name and an ordered parameter echo.
struct Provenance {
    std::string generator;
    ParamList params;

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

inline std::string param_to_string(const ParamValue& value) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
    return std::get<std::string>(value);
}

/**
 * Ordered list of equal-length vectors with per-vector provenance.
 *
 * The ordinal r of a member is its insertion index (0-based). A collection
 * built with length 0 adopts the length of its first member.
 */
class Collection {
public:
    Collection() = default;
    explicit Collection(std::size_t n) : n_(n) {}

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }

    void push_back(BinaryVector v, Provenance meta = {}) {
        if (n_ == 0) n_ = v.size();
        if (v.size() != n_) {
            throw Error(ErrorCode::length_mismatch,
                        "vector " + std::to_string(vectors_.size()) + " has length " +
                            std::to_string(v.size()) + ", collection length is " +
                            std::to_string(n_));
        }
        vectors_.push_back(std::move(v));
        meta_.push_back(std::move(meta));
    }

    /// Appends v followed by its complement, both tagged with meta.
    void push_pair(const BinaryVector& v, const Provenance& meta) {
        push_back(v, meta);
        push_back(complement(v), meta);
    }

    const BinaryVector& operator[](std::size_t r) const { return vectors_.at(r); }
    const Provenance& provenance(std::size_t r) const { return meta_.at(r); }

    const std::vector<BinaryVector>& vectors() const noexcept { return vectors_; }

    auto begin() const noexcept { return vectors_.begin(); }
    auto end() const noexcept { return vectors_.end(); }

private:
    std::size_t n_ = 0;
    std::vector<BinaryVector> vectors_;
    std::vector<Provenance> meta_;
};

/// Turns zero-seed masks into vectors derived from an arbitrary seed.
inline Collection apply_seed(const BinaryVector& seed, const Collection& masks) {
    Collection out(seed.size());
    for (std::size_t r = 0; r < masks.size(); ++r) {
        out.push_back(apply_seed(seed, masks[r]), masks.provenance(r));
    }
    return out;
}

} // namespace divgen
