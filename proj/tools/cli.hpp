#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with string streams.
//
// Exit codes: 0 success, 1 usage (bad or missing flags, invalid parameter
// values), 2 data (unreadable or malformed files, length mismatches).

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divgen/divgen.hpp"

namespace divgen::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_data = 2;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

/// Decimal, non-negative, no sign or prefix.
inline std::size_t parse_count(const std::string& flag, const std::string& text) {
    if (text.empty() || text.size() > 18 || text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError("--" + flag + ": expected a decimal integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(std::stoull(text));
}

inline std::string read_file(const std::string& flag, const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("--" + flag + ": cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DataError("--output: cannot write '" + path + "'");
    file << text;
}

inline Collection read_collection(const std::string& path) {
    const auto text = read_file("input", path);
    try {
        return parse_collection(text);
    } catch (const Error& e) {
        throw DataError(path + ": " + e.what());
    }
}

/// Flags accepted by `generate` for each method, besides the common ones.
inline const std::map<std::string, std::set<std::string>>& method_flags() {
    static const std::map<std::string, std::set<std::string>> table{
        {"maxmin", {"n", "threshold", "omit-seed-pair"}},
        {"maxmin-balanced", {"n", "threshold", "omit-seed-pair"}},
        {"augmented", {"n", "rounding", "include-shift", "k-schedule"}},
        {"pg", {"n", "skip-first-complement"}},
        {"pg-extended", {"n", "skip-first-complement"}},
        {"subvector", {"n", "p", "form"}},
        {"strongly-balanced", {"n", "level"}},
    };
    return table;
}

struct Options {
    // generate
    std::string method;
    std::string n;
    std::string rlim;
    std::string threshold;
    std::string p;
    std::string level;
    std::string form = "double";
    std::string rounding = "half";
    std::string k_schedule = "mixed";
    bool include_shift = false;
    bool skip_first_complement = false;
    bool omit_seed_pair = false;
    std::string seed;
    // map / metrics / dedup / rebalance
    std::string input;
    std::string g;
    std::string perm;
    std::string target;
    std::string stride;
    bool append = false;
    // shared
    std::string format = "lines";
    std::string output;
};

inline OutputFormat output_format(const Options& o) {
    return o.format == "records" ? OutputFormat::records : OutputFormat::lines;
}

inline std::size_t rlim_or_default(const Options& o) {
    if (o.rlim.empty()) return 1000;
    const auto r = parse_count("rlim", o.rlim);
    if (r < 1) throw UsageError("--rlim must be at least 1");
    return r;
}

inline std::size_t require_count(const std::string& flag, const std::string& value, const std::string& context) {
    if (value.empty()) throw UsageError(context + " requires --" + flag);
    return parse_count(flag, value);
}

inline void validate_generate(const Options& o, CLI::App& sub) {
    const auto& allowed = method_flags().at(o.method);
    static const std::set<std::string> method_specific{"n",    "threshold", "omit-seed-pair",  "rounding",
                                                       "include-shift", "k-schedule", "skip-first-complement",
                                                       "p",    "form",      "level"};
    for (const auto& flag : method_specific) {
        if (sub.count("--" + flag) > 0 && allowed.count(flag) == 0) {
            throw UsageError("--" + flag + " does not apply to method " + o.method);
        }
    }
    const std::string ctx = "method " + o.method;
    if (o.method == "strongly-balanced") {
        require_count("level", o.level, ctx);
    } else {
        require_count("n", o.n, ctx);
    }
    if (o.method == "subvector") require_count("p", o.p, ctx);
    if (!o.n.empty()) parse_count("n", o.n);
    if (!o.threshold.empty()) parse_count("threshold", o.threshold);
    rlim_or_default(o);
}

inline Collection generate(const Options& o) {
    const std::string ctx = "method " + o.method;
    const auto rlim = rlim_or_default(o);

    if (o.method == "maxmin" || o.method == "maxmin-balanced") {
        MaxMinParams params;
        params.n = require_count("n", o.n, ctx);
        params.rlim = rlim;
        params.threshold =
            o.threshold.empty() ? MaxMinParams::default_threshold(params.n) : parse_count("threshold", o.threshold);
        params.variant = o.method == "maxmin" ? MaxMinVariant::standard : MaxMinVariant::balanced;
        params.omit_seed_pair = o.omit_seed_pair;
        return generate_maxmin(params);
    }
    if (o.method == "augmented") {
        AugmentedParams params;
        params.n = require_count("n", o.n, ctx);
        params.rlim = rlim;
        params.include_shift = o.include_shift;
        params.rounding = o.rounding == "floor" ? RunRounding::floor : RunRounding::half_round;
        params.schedule = o.k_schedule == "pow2" ? KSchedule::powers_of_two : KSchedule::mixed;
        return generate_augmented(params);
    }
    if (o.method == "pg" || o.method == "pg-extended") {
        PgParams params;
        params.n = require_count("n", o.n, ctx);
        params.rlim = rlim;
        params.mode = o.method == "pg" ? PgMode::basic : PgMode::extended;
        params.skip_first_complement = o.skip_first_complement;
        return generate_pg(params);
    }
    if (o.method == "subvector") {
        SubvectorParams params;
        params.p = require_count("p", o.p, ctx);
        params.n = require_count("n", o.n, ctx);
        params.form = o.form == "triple" ? SubvectorForm::tripled : SubvectorForm::doubled;
        params.rlim = rlim;
        return generate_subvector(params);
    }
    StronglyBalancedParams params;
    params.level = require_count("level", o.level, ctx);
    params.n = o.n.empty() ? 0 : parse_count("n", o.n);
    params.rlim = rlim;
    return generate_strongly_balanced(params);
}

inline std::string cmd_generate(const Options& o, CLI::App& sub) {
    validate_generate(o, sub);
    std::optional<BinaryVector> seed;
    if (!o.seed.empty()) {
        const auto text = read_file("seed", o.seed);
        try {
            seed = parse_seed(text);
        } catch (const Error& e) {
            throw DataError("--seed " + o.seed + ": " + e.what());
        }
    }
    auto masks = generate(o);
    if (!seed) return format_collection(masks, output_format(o));
    if (seed->size() != masks.length()) {
        throw DataError("--seed " + o.seed + ": seed length " + std::to_string(seed->size()) +
                        " does not match n = " + std::to_string(masks.length()));
    }
    return format_collection(apply_seed(*seed, masks), output_format(o));
}

inline std::string cmd_map(const Options& o) {
    if (o.g.empty() == o.perm.empty()) throw UsageError("map requires exactly one of --g or --perm");
    const auto rlim = rlim_or_default(o);
    std::optional<std::size_t> gap;
    if (!o.g.empty()) gap = parse_count("g", o.g);

    const auto base = read_collection(o.input);
    if (base.empty()) throw DataError(o.input + ": collection is empty");

    ParamList tag;
    PermutationMap m;
    if (gap) {
        m = build_pn_g(base.length(), *gap);
        tag.emplace_back("g", static_cast<std::int64_t>(*gap));
    } else {
        const auto text = read_file("perm", o.perm);
        try {
            m = parse_permutation(text);
        } catch (const Error& e) {
            throw DataError("--perm " + o.perm + ": " + e.what());
        }
        if (m.size() != base.length()) {
            throw DataError("--perm " + o.perm + ": permutation length " + std::to_string(m.size()) +
                            " does not match vector length " + std::to_string(base.length()));
        }
        tag.emplace_back("perm", m.to_string());
    }
    return format_collection(recursive_expand(base, m, rlim, tag), output_format(o));
}

inline std::string cmd_metrics(const Options& o) {
    const auto c = read_collection(o.input);
    if (c.size() < 2) {
        throw DataError(o.input + ": need at least 2 vectors, got " + std::to_string(c.size()));
    }
    return format_report(diversity_report(c));
}

inline std::string cmd_dedup(const Options& o) {
    return format_collection(dedup(read_collection(o.input)), output_format(o));
}

inline std::string cmd_rebalance(const Options& o) {
    const auto stride = static_cast<unsigned>(require_count("stride", o.stride, "rebalance"));
    if (stride != 2 && stride != 3) throw UsageError("--stride must be 2 or 3");
    if (o.target.empty()) throw UsageError("rebalance requires --target");
    const auto target = o.target == "complemented" ? RebalanceTarget::complemented : RebalanceTarget::uncomplemented;

    const auto in = read_collection(o.input);
    Collection out(in.length());
    if (o.append) {
        for (std::size_t r = 0; r < in.size(); ++r) out.push_back(in[r], in.provenance(r));
    }
    for (std::size_t r = 0; r < in.size(); ++r) {
        out.push_back(rebalance(in[r], target, stride),
                      {"rebalance",
                       {{"target", o.target},
                        {"stride", static_cast<std::int64_t>(stride)},
                        {"source", static_cast<std::int64_t>(r)}}});
    }
    return format_collection(out, output_format(o));
}

inline int report_error(std::ostream& err, const std::string& message, int code) {
    err << "divgen: " << message << '\n';
    return code;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using detail::Options;
    Options o;

    CLI::App app{"Diversified binary vector collections for metaheuristic seeding", "divgen"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"lines", "records"}));
        sub->add_option("--output,-o", o.output, "Output file (default: standard output)");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input,-i", o.input, "Input collection file ('-' for standard input)")->required();
    };

    auto* gen = app.add_subcommand("generate", "Generate a collection (zero-seed masks unless --seed is given)");
    gen->add_option("--method", o.method, "Generator")
        ->required()
        ->check(CLI::IsMember({"maxmin", "maxmin-balanced", "augmented", "pg", "pg-extended", "subvector",
                               "strongly-balanced"}));
    gen->add_option("--n", o.n, "Vector length");
    gen->add_option("--rlim", o.rlim, "Upper limit on the collection size (default 1000)");
    gen->add_option("--threshold", o.threshold, "maxmin: final-split threshold (default floor(n/16))");
    gen->add_option("--p", o.p, "subvector: sub-vector dimension");
    gen->add_option("--level", o.level, "strongly-balanced: recursion level");
    gen->add_option("--form", o.form, "subvector: block form")->check(CLI::IsMember({"double", "triple"}));
    gen->add_option("--rounding", o.rounding, "augmented: run-size rounding")
        ->check(CLI::IsMember({"half", "floor"}));
    gen->add_option("--k-schedule", o.k_schedule, "augmented: subset counts k")
        ->check(CLI::IsMember({"mixed", "pow2"}));
    gen->add_flag("--include-shift", o.include_shift, "augmented: add shifted run vectors");
    gen->add_flag("--skip-first-complement", o.skip_first_complement, "pg: omit the complement of the first vector");
    gen->add_flag("--omit-seed-pair", o.omit_seed_pair, "maxmin: omit the leading all-0/all-1 pair");
    gen->add_option("--seed", o.seed, "Seed file holding one vector");
    add_format(gen);

    auto* map = app.add_subcommand("map", "Expand a collection by successive powers of a permutation mapping");
    add_input(map);
    map->add_option("--g", o.g, "Gap for the interleaved permutation P_n(g)");
    map->add_option("--perm", o.perm, "File holding one permutation (space-separated 1-based indices)");
    map->add_option("--rlim", o.rlim, "Upper limit on the total collection size (default 1000)");
    add_format(map);

    auto* metrics = app.add_subcommand("metrics", "Report diversity statistics");
    add_input(metrics);
    metrics->add_option("--output,-o", o.output, "Output file (default: standard output)");

    auto* dd = app.add_subcommand("dedup", "Drop repeated vectors, keeping first occurrences");
    add_input(dd);
    add_format(dd);

    auto* rb = app.add_subcommand("rebalance", "Flip every second or third designated position of each vector");
    add_input(rb);
    rb->add_option("--target", o.target, "Which positions are designated")
        ->check(CLI::IsMember({"complemented", "uncomplemented"}));
    rb->add_option("--stride", o.stride, "2 or 3");
    rb->add_flag("--append", o.append, "Write the input vectors before the rebalanced ones");
    add_format(rb);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        return detail::report_error(err, e.what(), exit_usage);
    }

    try {
        std::string text;
        if (gen->parsed()) {
            text = detail::cmd_generate(o, *gen);
        } else if (map->parsed()) {
            text = detail::cmd_map(o);
        } else if (metrics->parsed()) {
            text = detail::cmd_metrics(o);
        } else if (dd->parsed()) {
            text = detail::cmd_dedup(o);
        } else {
            text = detail::cmd_rebalance(o);
        }
        detail::write_output(o.output, text, out);
        return exit_ok;
    } catch (const UsageError& e) {
        return detail::report_error(err, e.what(), exit_usage);
    } catch (const DataError& e) {
        return detail::report_error(err, e.what(), exit_data);
    } catch (const Error& e) {
        const bool data = e.code() == ErrorCode::parse_error || e.code() == ErrorCode::length_mismatch ||
                          e.code() == ErrorCode::insufficient_vectors;
        return detail::report_error(err, e.what(), data ? exit_data : exit_usage);
    }
}

} // namespace divgen::cli
