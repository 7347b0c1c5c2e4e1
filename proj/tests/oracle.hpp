#pragma once

// Brute-force reference computations used only by the tests. Everything here
// works on plain '0'/'1' strings and explicit index lists so it shares no code
// path with the library.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Bits = std::string;

inline std::size_t hamming(const Bits& a, const Bits& b) {
    std::size_t d = 0;
    for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
    return d;
}

/// Unreduced fraction; compare with same_value.
struct Frac {
    std::int64_t num;
    std::int64_t den;
};

inline bool same_value(std::int64_t num_a, std::int64_t den_a, const Frac& b) {
    return static_cast<__int128>(num_a) * b.den == static_cast<__int128>(b.num) * den_a;
}

inline Frac mean_diversity(const std::vector<Bits>& c) {
    std::int64_t sum = 0;
    std::int64_t pairs = 0;
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = 0; b < c.size(); ++b) {
            if (a < b) {
                sum += static_cast<std::int64_t>(hamming(c[a], c[b]));
                ++pairs;
            }
        }
    }
    return {sum, pairs};
}

/// z on the hypercube segment from x to y, distinct from both.
inline bool between(const Bits& x, const Bits& y, const Bits& z) {
    if (z == x || z == y) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] == y[j] && z[j] != x[j]) return false;
    }
    return true;
}

inline Frac mean_gap(const std::vector<Bits>& c) {
    std::int64_t sum = 0;
    std::int64_t pairs = 0;
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a + 1; b < c.size(); ++b) {
            bool gap = true;
            for (const auto& z : c) {
                if (between(c[a], c[b], z)) gap = false;
            }
            if (gap) {
                sum += static_cast<std::int64_t>(hamming(c[a], c[b]));
                ++pairs;
            }
        }
    }
    return {sum, pairs};
}

inline Frac coverage(const std::vector<Bits>& c) {
    const auto d = mean_diversity(c);
    const auto g = mean_gap(c);
    return {d.num * g.den, d.den * g.num};
}

/**
 * Max/Min masks built from explicit index lists: each set is a std::vector
 * of positions, the partition a list of such sets, split by the odd/even
 * (or OddSet-toggling) rule and rebuilt as a new list every iteration.
 */
inline std::vector<Bits> maxmin_masks(std::size_t n, std::size_t threshold, bool balanced, std::size_t rlim = 1000000) {
    std::vector<Bits> out{Bits(n, '0'), Bits(n, '1')};
    std::vector<std::vector<std::size_t>> partition(1);
    for (std::size_t j = 1; j <= n; ++j) partition[0].push_back(j);

    auto flip = [](const Bits& b) {
        Bits c = b;
        for (auto& ch : c) ch = ch == '1' ? '0' : '1';
        return c;
    };

    for (int iter = 0; iter < 100; ++iter) {
        Bits mask(n, '0');
        std::vector<std::vector<std::size_t>> next;
        bool odd_set = true;
        for (std::size_t i = 1; i <= partition.size(); ++i) {
            const auto& set = partition[i - 1];
            const std::size_t size = set.size();
            std::size_t left = 0;
            if (!balanced) {
                left = (i % 2 == 1) ? (size + 1) / 2 : size / 2;
            } else if (size % 2 == 0) {
                left = size / 2;
            } else if (odd_set) {
                left = size / 2;
                odd_set = false;
            } else {
                left = (size + 1) / 2;
                odd_set = true;
            }
            std::vector<std::size_t> l(set.begin(), set.begin() + static_cast<std::ptrdiff_t>(left));
            std::vector<std::size_t> r(set.begin() + static_cast<std::ptrdiff_t>(left), set.end());
            for (auto j : l) mask[j - 1] = '1';
            next.push_back(l);
            next.push_back(r);
        }
        out.push_back(mask);
        out.push_back(flip(mask));
        if (out.size() >= rlim) break;
        partition = next;
        const std::size_t max_num = partition[0].size();
        if (max_num <= 1) break;
        if (max_num == 2) {
            std::size_t num2 = 0;
            for (const auto& s : partition) num2 += s.size() >= 2;
            if (num2 <= threshold) break;
            if (balanced) {
                Bits odd(n, '0');
                for (std::size_t j = 0; j < n; j += 2) odd[j] = '1';
                out.push_back(odd);
                out.push_back(flip(odd));
                break;
            }
        }
    }
    return out;
}

} // namespace oracle
