#pragma once

// Command-line surface: compute, patterns, verify, bench.
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlgt/bench.hpp"
#include "hlgt/determinant.hpp"
#include "hlgt/formulas.hpp"
#include "hlgt/gt_pattern.hpp"
#include "hlgt/io.hpp"
#include "hlgt/oracle.hpp"
#include "hlgt/partition.hpp"
#include "hlgt/verify.hpp"

namespace hlgt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for bad user input; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "1,0,0" -> (1,0,0). Trailing zeros are kept.
inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw UsageError("cannot parse partition '" + text + "': bad part '" + item + "'");
        if (v < 0)
            throw UsageError("partition '" + text + "' has a negative part");
        parts.push_back(v);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

inline std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    const Partition parsed = parse_partition(text);
    for (int v : parsed) {
        if (v == 0)
            throw UsageError("sizes must be positive");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

namespace detail {

inline void require_weakly_decreasing(const Partition& p, const std::string& what) {
    if (p.empty() || !p.is_weakly_decreasing())
        throw UsageError(what + " must be weakly decreasing");
}

inline void require_strictly_decreasing(const Partition& p, const std::string& what) {
    if (p.empty() || !p.is_strictly_decreasing())
        throw UsageError(what + " must be strictly decreasing");
}

inline void require_oracle_size(std::size_t n) {
    if (n > oracle_max_vars())
        throw UsageError("n = " + std::to_string(n) + " exceeds the oracle cap of " + std::to_string(oracle_max_vars()) +
                         " (GT_ORACLE_NMAX)");
}

/// Writes to --out when given, else to the command's stdout.
inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        throw UsageError("cannot open output file '" + out_path + "'");
    file << text;
}

inline std::string render(const Polynomial& p, const std::string& format) {
    return format == "json" ? to_json(p).dump() + "\n" : to_string(p) + "\n";
}

inline std::string pattern_triangle(const GtPattern& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += "  " + std::string(i, ' ');
        for (std::size_t k = 0; k < t.row(i).size(); ++k)
            out += (k ? " " : "") + std::to_string(t.row(i)[k]);
        out += '\n';
    }
    return out;
}

}  // namespace detail

struct ComputeOptions {
    std::string lambda;
    std::string mode = "oracle";
    std::string format = "text";
    std::string out;
};

inline Polynomial compute_polynomial(const Partition& lambda, const std::string& mode) {
    if (mode == "stanley") {
        detail::require_strictly_decreasing(lambda, "lambda for mode stanley");
        return stanley_expansion(lambda);
    }
    detail::require_weakly_decreasing(lambda, "lambda");
    if (mode == "oracle") {
        detail::require_oracle_size(lambda.size());
        return hall_littlewood(lambda);
    }
    if (mode == "closed")
        return closed_form_expansion(lambda);
    if (mode == "recursive") {
        detail::require_oracle_size(lambda.size());
        return recursive_expansion(lambda);
    }
    if (mode == "tokuyama")
        return tokuyama_expansion(lambda);
    throw UsageError("unknown mode '" + mode + "'");
}

inline int cmd_compute(const ComputeOptions& o, std::ostream& out) {
    const Polynomial p = compute_polynomial(parse_partition(o.lambda), o.mode);
    detail::emit(detail::render(p, o.format), o.out, out);
    return kExitOk;
}

struct PatternsOptions {
    std::string top;
    bool strict = false;
    bool stats = false;
    std::string out;
};

inline int cmd_patterns(const PatternsOptions& o, std::ostream& out) {
    const Partition top = parse_partition(o.top);
    if (o.strict)
        detail::require_strictly_decreasing(top, "top row for --strict");
    else
        detail::require_weakly_decreasing(top, "top row");

    std::ostringstream os;
    std::size_t count = 0;
    for_each_gt_pattern(top, o.strict, [&](const GtPattern& t) {
        ++count;
        os << "pattern " << count << '\n' << detail::pattern_triangle(t);
        const auto m = pattern_weight(t);
        const auto c = leaning_counts(t);
        os << "  m = (" << to_string(Partition(m)) << ")  left = " << c.left << "  right = " << c.right
           << "  special = " << c.special << '\n';
        if (o.stats) {
            if (!t.is_strict()) {
                os << "  coefficient: n/a (pattern is not strict)\n";
                return;
            }
            Polynomial coeff = Polynomial::one(0);
            for (std::size_t i = 0; i + 1 < t.size(); ++i) {
                const Polynomial row = row_coefficient(t.row(i), t.row(i + 1));
                os << "  row " << i + 1 << " coefficient: " << to_string(row) << '\n';
                coeff *= row;
            }
            std::vector<Exponent> x(m.begin(), m.end());
            os << "  coefficient: " << to_string(coeff) << '\n';
            os << "  contribution: " << to_string(embed(coeff, t.size()) * Polynomial::x_power(x)) << '\n';
        }
    });
    os << count << (count == 1 ? " pattern" : " patterns") << '\n';
    detail::emit(os.str(), o.out, out);
    return kExitOk;
}

struct VerifyOptions {
    std::size_t n = 3;
    int max_part = 3;
    std::string suite = "all";
    std::string format = "text";
    std::string out;
    unsigned threads = 0;  // 0: hardware concurrency
};

inline int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const auto suite = parse_suite(o.suite);
    if (!suite)
        throw UsageError("unknown suite '" + o.suite + "'");
    if (o.n == 0)
        throw UsageError("--n must be at least 1");
    if (o.max_part < 0)
        throw UsageError("--max-part must be nonnegative");
    detail::require_oracle_size(o.n);
    const unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    const VerifyReport report = run_verify(o.n, o.max_part, *suite, threads);

    std::ostringstream os;
    if (o.format == "json") {
        os << report.to_json().dump(2) << '\n';
    } else {
        for (const auto& c : report.cases)
            os << (c.passed ? "PASS" : "FAIL") << "  (" << to_string(c.lambda) << ")  " << c.identity << '\n';
        os << "suite " << report.suite << ": " << report.total << " cases, " << report.passed << " passed, "
           << report.failed << " failed in " << report.wall_time << " s\n";
    }
    detail::emit(os.str(), o.out, out);
    return report.ok() ? kExitOk : kExitFailed;
}

struct BenchOptions {
    std::string sizes = "3,4";
    int max_part = 2;
    unsigned repeats = 3;
    std::string out;
};

inline int cmd_bench(const BenchOptions& o, std::ostream& out) {
    const auto sizes = parse_size_list(o.sizes);
    if (o.repeats == 0)
        throw UsageError("--repeats must be positive");
    if (o.max_part < 0)
        throw UsageError("--max-part must be nonnegative");
    for (auto n : sizes)
        detail::require_oracle_size(n);
    const auto rows = run_bench(sizes, o.max_part, o.repeats);
    write_bench_table(out, rows);
    std::ostringstream csv;
    write_bench_csv(csv, rows);
    if (o.out.empty())
        out << '\n' << csv.str();
    else
        detail::emit(csv.str(), o.out, out);
    return kExitOk;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Hall-Littlewood polynomials from Gelfand-Tsetlin patterns", "hlgt"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* c = app.add_subcommand("compute", "Compute a polynomial");
    c->add_option("--lambda", compute.lambda, "Partition, comma separated with trailing zeros (e.g. 1,0,0)")
        ->required();
    c->add_option("--mode", compute.mode, "oracle | closed | recursive | tokuyama | stanley")
        ->check(CLI::IsMember({"oracle", "closed", "recursive", "tokuyama", "stanley"}));
    c->add_option("--format", compute.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", compute.out, "Write output to this file");

    PatternsOptions patterns;
    auto* p = app.add_subcommand("patterns", "List Gelfand-Tsetlin patterns with a given top row");
    p->add_option("--top", patterns.top, "Top row, comma separated")->required();
    p->add_flag("--strict", patterns.strict, "Only strict patterns");
    p->add_flag("--stats", patterns.stats, "Print row coefficients of the closed form");
    p->add_option("--out", patterns.out, "Write output to this file");

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Check the exact identities on a grid of partitions");
    v->add_option("--n", verify.n, "Maximum length");
    v->add_option("--max-part", verify.max_part, "Maximum part");
    v->add_option("--suite", verify.suite, "main | recursive | tokuyama | stanley | monomial | raising | all")
        ->check(CLI::IsMember({"main", "recursive", "tokuyama", "stanley", "monomial", "raising", "all"}));
    v->add_option("--format", verify.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    v->add_option("--out", verify.out, "Write the report to this file");
    v->add_option("--threads", verify.threads, "Worker threads (0 = hardware concurrency)");

    BenchOptions bench;
    auto* b = app.add_subcommand("bench", "Time the oracle against the closed form");
    b->add_option("--n", bench.sizes, "Comma-separated sizes");
    b->add_option("--max-part", bench.max_part, "Maximum part");
    b->add_option("--repeats", bench.repeats, "Repetitions per case");
    b->add_option("--out", bench.out, "Write CSV to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c->parsed())
            return cmd_compute(compute, out);
        if (p->parsed())
            return cmd_patterns(patterns, out);
        if (v->parsed())
            return cmd_verify(verify, out);
        return cmd_bench(bench, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace hlgt::cli
