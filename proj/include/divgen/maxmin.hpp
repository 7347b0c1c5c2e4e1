#pragma once

/**
 * @file maxmin.hpp
 * @brief Max/Min generation by recursive halving of the index set, with the
 *        balanced variant.
 *
 * Every set of the current partition is an interval [First, Last] of
 * 1-indexed positions. An iteration splits each set into a left and a right
 * part, emits the mask complementing all left parts together with its
 * complement, then relabels the parts as the next partition. The relabelling
 * goes through a Location table so the intervals never move in storage.
 * Masks are relative to the zero seed; see apply_seed for other seeds.
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

enum class SplitRule { odd_i, even_i, balanced_floor, balanced_ceil };

struct Interval {
    std::size_t first;
    std::size_t last;  // first == last + 1 encodes the empty set

    std::size_t size() const noexcept { return last + 1 - first; }
    bool empty() const noexcept { return first > last; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

struct SplitResult {
    Interval left;
    Interval right;
};

/// Splits [first, last] into a left part of Split elements and the remainder.
inline SplitResult split_set(std::size_t first, std::size_t last, SplitRule rule) {
    if (first == 0 || first > last + 1) {
        throw Error(ErrorCode::invalid_parameter, "split_set: invalid interval [" +
                                                      std::to_string(first) + ", " +
                                                      std::to_string(last) + "]");
    }
    const std::size_t set_size = last + 1 - first;
    const std::size_t half_up = (set_size + 1) / 2;
    const std::size_t half_down = set_size / 2;
    std::size_t split = 0;
    switch (rule) {
    case SplitRule::odd_i:
    case SplitRule::balanced_ceil:
        split = half_up;
        break;
    case SplitRule::even_i:
    case SplitRule::balanced_floor:
        split = half_down;
        break;
    }
    // first + split - 1, written so that split == 0 never underflows
    const std::size_t split_point_plus_one = first + split;
    return {Interval{first, split_point_plus_one - 1}, Interval{split_point_plus_one, last}};
}

enum class MaxMinVariant { standard, balanced };

struct MaxMinParams {
    std::size_t n = 0;
    std::size_t rlim = 1000;
    std::size_t threshold = 0;
    MaxMinVariant variant = MaxMinVariant::standard;
    /// Leave out the leading all-0 / all-1 pair.
    bool omit_seed_pair = false;

    static std::size_t default_threshold(std::size_t n) { return n / 16; }

    static MaxMinParams with_defaults(std::size_t n) {
        MaxMinParams p;
        p.n = n;
        p.threshold = default_threshold(n);
        return p;
    }
};

/**
 * First / Last / Location bookkeeping for the current partition.
 *
 * Arrays are 1-indexed (slot 0 unused). For partition index i in 1..ilast
 * the set N(i) is [First(Location(i)), Last(Location(i))].
 */
class PartitionState {
public:
    explicit PartitionState(std::size_t n)
        : n_(n), first_{0, 1}, last_{0, n}, location_{0, 1} {}

    std::size_t n() const noexcept { return n_; }
    std::size_t ilast() const noexcept { return ilast_; }

    Interval set(std::size_t i) const {
        const auto loc = location_.at(i);
        return {first_.at(loc), last_.at(loc)};
    }

    std::size_t location(std::size_t i) const { return location_.at(i); }

    /// |N(1)|; Location(1) = 1 throughout.
    std::size_t max_num() const { return last_[1] + 1 - first_[1]; }

    std::vector<Interval> sets() const {
        std::vector<Interval> out;
        out.reserve(ilast_);
        for (std::size_t i = 1; i <= ilast_; ++i) out.push_back(set(i));
        return out;
    }

    /// True when the sets, taken in partition order, tile 1..n and Location(1) = 1.
    bool is_partition() const {
        if (location_[1] != 1) return false;
        std::size_t next = 1;
        for (std::size_t i = 1; i <= ilast_; ++i) {
            const auto s = set(i);
            if (s.first != next || s.last + 1 < s.first || s.last > n_) return false;
            next = s.last + 1;
        }
        return next == n_ + 1;
    }

    /// Splits every set, writing left parts in place and right parts at Loc + ilast.
    /// Returns the mask complementing every left part.
    template <class RuleFor>
    BinaryVector split_all(RuleFor&& rule_for) {
        grow(2 * ilast_);
        BinaryVector mask(n_);
        for (std::size_t i = 1; i <= ilast_; ++i) {
            const auto loc = location_[i];
            const auto parts = split_set(first_[loc], last_[loc], rule_for(i, last_[loc] + 1 - first_[loc]));
            mask.set_range(parts.left.first, parts.left.last);
            last_[loc] = parts.left.last;
            first_[loc + ilast_] = parts.right.first;
            last_[loc + ilast_] = parts.right.last;
        }
        return mask;
    }

    /// Relabels N(2i-1) = left part of N(i), N(2i) = right part, and doubles ilast.
    void relabel() {
        grow(2 * ilast_);
        for (std::size_t i = ilast_; i >= 1; --i) {
            const auto loc = location_[i];
            location_[2 * i - 1] = loc;
            location_[2 * i] = loc + ilast_;
        }
        ilast_ *= 2;
    }

    /// Number of stored sets with more than one element (storage order).
    std::size_t count_pairs() const {
        std::size_t num2 = 0;
        for (std::size_t k = 1; k <= ilast_; ++k) {
            if (last_[k] > first_[k]) ++num2;
        }
        return num2;
    }

private:
    void grow(std::size_t slots) {
        if (first_.size() <= slots) {
            first_.resize(slots + 1, 0);
            last_.resize(slots + 1, 0);
            location_.resize(slots + 1, 0);
        }
    }

    std::size_t n_;
    std::size_t ilast_ = 1;
    std::vector<std::size_t> first_;
    std::vector<std::size_t> last_;
    std::vector<std::size_t> location_;
};

struct NoPartitionObserver {
    void operator()(const PartitionState&) const noexcept {}
};

namespace detail {

inline Provenance maxmin_provenance(const MaxMinParams& p, std::int64_t iter) {
    const bool balanced = p.variant == MaxMinVariant::balanced;
    return {balanced ? "maxmin-balanced" : "maxmin",
            {{"n", static_cast<std::int64_t>(p.n)},
             {"rlim", static_cast<std::int64_t>(p.rlim)},
             {"threshold", static_cast<std::int64_t>(p.threshold)},
             {"iter", iter}}};
}

inline void validate(const MaxMinParams& p) {
    if (p.n < 1) throw Error(ErrorCode::invalid_parameter, "maxmin: n must be at least 1");
    if (p.rlim < 2) throw Error(ErrorCode::invalid_parameter, "maxmin: rlim must be at least 2");
}

} // namespace detail

/**
 * Runs the Max/Min method and returns the zero-seed masks.
 *
 * Output order: all-0, all-1 (unless omitted), then one (x', x'') pair per
 * iteration. Generation stops once the collection holds at least rlim
 * vectors (checked after each pair), when |N(1)| drops to 1, or when
 * |N(1)| = 2 and at most `threshold` sets still have two elements. With the
 * balanced variant that last case instead emits the odd-position pair.
 *
 * The observer sees the partition after every relabelling.
 */
template <class Observer = NoPartitionObserver>
Collection generate_maxmin(const MaxMinParams& params, Observer&& observe = {}) {
    detail::validate(params);
    const std::size_t n = params.n;
    const bool balanced = params.variant == MaxMinVariant::balanced;
    constexpr int max_iter = 100;

    Collection out(n);
    if (!params.omit_seed_pair) {
        out.push_pair(BinaryVector::zeros(n), detail::maxmin_provenance(params, 0));
        if (out.size() >= params.rlim) return out;
    }

    PartitionState state(n);
    for (int iter = 1; iter <= max_iter; ++iter) {
        bool odd_set = true;
        auto rule_for = [&](std::size_t i, std::size_t set_size) {
            if (!balanced) return i % 2 == 1 ? SplitRule::odd_i : SplitRule::even_i;
            if (set_size % 2 == 0) return SplitRule::balanced_floor;
            odd_set = !odd_set;
            return odd_set ? SplitRule::balanced_ceil : SplitRule::balanced_floor;
        };
        out.push_pair(state.split_all(rule_for), detail::maxmin_provenance(params, iter));
        if (out.size() >= params.rlim) break;

        const std::size_t max_num = state.max_num();
        if (max_num <= 1) break;

        state.relabel();
        observe(std::as_const(state));

        if (max_num == 2) {
            if (state.count_pairs() <= params.threshold) break;
            if (balanced) {
                BinaryVector odd(n);
                for (std::size_t j = 1; j <= n; j += 2) odd.set(j);
                out.push_pair(odd, detail::maxmin_provenance(params, iter + 1));
                break;
            }
        }
    }
    return out;
}

} // namespace divgen
