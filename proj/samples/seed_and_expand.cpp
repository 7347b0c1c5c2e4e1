// Builds a diversified starting population around a seed solution:
// Max/Min masks applied to the seed, expanded by one permutation mapping,
// then deduplicated and summarized.

#include <iostream>

#include "divgen/divgen.hpp"

int main() {
    using namespace divgen;

    const auto seed = BinaryVector::from_string("101100101101011010");
    const std::size_t n = seed.size();

    const auto masks = generate_maxmin(MaxMinParams::with_defaults(n));
    const auto base = apply_seed(seed, masks);
    const std::size_t g = default_gap(n);
    const auto expanded = recursive_expand(base, build_pn_g(n, g), 64, {{"g", static_cast<std::int64_t>(g)}});
    const auto population = dedup(expanded);

    std::cout << format_lines(population) << '\n';
    std::cout << format_report(diversity_report(population));
}
