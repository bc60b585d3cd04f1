#pragma once

/// @file commands.hpp
/// @brief The subcommands behind the `landau` executable.
///
/// Each command writes data to `out` (or a file) and diagnostics to `err`,
/// and returns the process exit code: 0 success, 1 failed check or bad
/// data, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "landau/bound_chain.hpp"
#include "landau/csv.hpp"
#include "landau/errors.hpp"
#include "landau/oracle.hpp"
#include "landau/primes.hpp"
#include "landau/structure.hpp"
#include "landau/table.hpp"

namespace landau::cli {

enum exit_code : int { ok = 0, check_failed = 1, usage = 2 };

struct TableArgs {
    std::uint64_t max_n = table_default_max_n;
    CutoffMode cutoff = CutoffMode::safe;
    std::string out_path; // empty: standard output
    bool long_run = false;
    unsigned threads = 1;
};

struct VerifyArgs {
    std::string which; // lemmas | bound | reduction
    std::optional<std::uint64_t> max_n;
    std::uint64_t q_max = bound_default_q_hi;
    std::string out_path; // optional CSV report
    bool long_run = false;
    unsigned threads = 1;
};

struct RatioArgs {
    std::uint64_t max_n = table_default_max_n;
    std::size_t top = 10;
    bool long_run = false;
    unsigned threads = 1;
};

struct OracleArgs {
    std::uint64_t max_n = oracle::partitions_max_n;
};

struct PlotArgs {
    std::string in_path;
    std::string out_path; // empty: standard output
    std::string series = "ratio"; // ratio | log_g | P
};

namespace detail {

/// Runs `body` against a file at `path`, or against `fallback` when path is empty.
template <typename Body>
int with_output(const std::string& path, std::ostream& fallback, std::ostream& err, Body&& body)
{
    if (path.empty()) return body(fallback);
    std::ostringstream buffer;
    int code = body(buffer);
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << buffer.str()) || !file.flush()) {
        err << "error: cannot write " << path << '\n';
        return check_failed;
    }
    return code;
}

inline BuildOptions build_options(CutoffMode mode, bool long_run, unsigned threads)
{
    BuildOptions o;
    o.cutoff = mode;
    o.long_run = long_run;
    o.threads = threads;
    return o;
}

} // namespace detail

inline int cmd_table(const TableArgs& args, std::ostream& out, std::ostream& err)
{
    try {
        const auto table = build_table(args.max_n, detail::build_options(args.cutoff, args.long_run, args.threads));
        return detail::with_output(args.out_path, out, err, [&](std::ostream& os) {
            write_table_csv(os, table);
            return ok;
        });
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

inline int verify_reduction_cmd(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    const std::uint64_t n_max = args.max_n.value_or(oracle::partitions_max_n);
    if (n_max < 1 || n_max > oracle::partitions_max_n) {
        err << "error: --max-n for reduction must lie in [1, " << oracle::partitions_max_n << "]\n";
        return usage;
    }
    std::ostringstream csv;
    csv << "n,g_by_partitions,g_by_prime_power_subsets,pass\n";
    std::uint64_t failures = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto a = oracle::g_by_partitions(n);
        const auto b = oracle::g_by_prime_power_subsets(n);
        const bool pass = b == a;
        if (!pass) {
            ++failures;
            err << "FAIL reduction n=" << n << ": partitions " << a << " vs prime-power subsets " << b << '\n';
        }
        csv << n << ',' << a << ',' << b << ',' << (pass ? "true" : "false") << '\n';
    }
    out << "reduction n<=" << n_max << ": " << (failures == 0 ? "pass" : "FAIL") << '\n';
    if (!args.out_path.empty()) {
        std::ostringstream unused;
        int code = detail::with_output(args.out_path, unused, err, [&](std::ostream& os) {
            os << csv.str();
            return ok;
        });
        if (code != ok) return code;
    }
    return failures == 0 ? ok : check_failed;
}

inline int verify_lemmas_cmd(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    const std::uint64_t n_max = args.max_n.value_or(10'000);
    if (n_max < constants::theorem_n_min) {
        err << "error: --max-n for lemmas must be at least " << constants::theorem_n_min << '\n';
        return usage;
    }
    const auto table = build_table(n_max, detail::build_options(CutoffMode::safe, args.long_run, args.threads));
    const PrimeSet ps = sieve(std::max<std::uint64_t>(table.prime_cutoff(), 2));
    const auto violations =
        scan_lemmas(table, constants::theorem_n_min, n_max, ps, IntervalSpec::standard(), args.threads);
    for (const auto& v : violations) err << "FAIL " << v.check << " n=" << v.n << ": " << v.detail << '\n';
    out << "lemmas " << constants::theorem_n_min << "<=n<=" << n_max << ": " << violations.size()
        << " violations: " << (violations.empty() ? "pass" : "FAIL") << '\n';
    if (!args.out_path.empty()) {
        int code = detail::with_output(args.out_path, out, err, [&](std::ostream& csv) {
            csv << "n,check,detail\n";
            for (const auto& v : violations) csv << v.n << ',' << v.check << ',' << v.detail << '\n';
            return ok;
        });
        if (code != ok) return code;
    }
    return violations.empty() ? ok : check_failed;
}

inline void write_bound_report_csv(std::ostream& os, const BoundReport& b)
{
    os << "link_name,range,pass,min_passing_q,details\n";
    for (const auto& l : b.links) {
        os << l.name << ',' << csv_field(l.range) << ',' << (l.pass ? "true" : "false") << ',';
        if (l.min_passing_q) os << *l.min_passing_q;
        os << ',' << csv_field(l.details) << '\n';
    }
}

inline int verify_bound_cmd(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.q_max <= constants::q_floor) {
        err << "error: --qmax must exceed " << constants::q_floor << '\n';
        return usage;
    }
    if (args.q_max > bound_default_q_hi && !args.long_run) {
        err << "error: --qmax above " << bound_default_q_hi << " needs --long-run\n";
        return usage;
    }
    if (args.q_max > bound_long_run_q_hi) {
        err << "error: --qmax is capped at " << bound_long_run_q_hi << '\n';
        return usage;
    }
    const BoundReport b = run_bound_chain(args.q_max, args.threads);
    for (const auto& l : b.links) {
        out << std::left << std::setw(15) << l.name << (l.pass ? "pass  " : "FAIL  ") << l.range << "  " << l.details
            << '\n';
        if (!l.pass) err << "FAIL " << l.name << ": " << l.details << '\n';
    }
    out << "residual_sum min_passing_q=" << b.residual_min_passing_q
        << (b.residual_meets_floor ? " (within the 3329 floor)" : " (exceeds the 3329 floor)") << '\n';
    out << "theta_link min_passing_q=" << b.theta_min_passing_q << '\n';
    out << "bound chain: " << (b.all_ok ? "pass" : "FAIL") << '\n';
    if (!args.out_path.empty()) {
        int code = detail::with_output(args.out_path, out, err, [&](std::ostream& csv) {
            write_bound_report_csv(csv, b);
            return ok;
        });
        if (code != ok) return code;
    }
    return b.all_ok ? ok : check_failed;
}

inline int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    try {
        if (args.which == "reduction") return verify_reduction_cmd(args, out, err);
        if (args.which == "lemmas") return verify_lemmas_cmd(args, out, err);
        if (args.which == "bound") return verify_bound_cmd(args, out, err);
        err << "error: unknown check '" << args.which << "' (expected lemmas, bound or reduction)\n";
        return usage;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

inline int cmd_ratio(const RatioArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.max_n < constants::theorem_n_min || args.top == 0) {
        err << "error: need --max-n >= " << constants::theorem_n_min << " and --top >= 1\n";
        return usage;
    }
    try {
        const auto table =
            build_table(args.max_n, detail::build_options(CutoffMode::safe, args.long_run, args.threads));
        struct Entry {
            std::uint64_t n;
            std::uint64_t p;
            double ratio;
        };
        std::vector<Entry> entries;
        for (std::uint64_t n = constants::theorem_n_min; n <= args.max_n; ++n)
            if (auto r = ratio_at(table, n)) entries.push_back({n, *table.largest_prime_at(n), *r});
        std::stable_sort(entries.begin(), entries.end(),
                         [](const Entry& a, const Entry& b) { return a.ratio > b.ratio; });
        out << "n,P,ratio\n";
        for (std::size_t i = 0; i < std::min(args.top, entries.size()); ++i)
            out << entries[i].n << ',' << entries[i].p << ',' << format_fixed(entries[i].ratio, ratio_decimals)
                << '\n';
        const auto scan = verify_theorem_on_table(table);
        out << "argmax n=" << scan.argmax_n << " ratio=" << format_fixed(scan.max_ratio, ratio_decimals) << '\n';
        out << "all ratios for " << constants::theorem_n_min << "<=n<=" << args.max_n << " are <= 1.328: "
            << (scan.ok ? "yes" : "no") << " (" << scan.violations.size() << " violations)\n";
        return ok;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
}

inline int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err)
{
    if (args.max_n < 1 || args.max_n > oracle::subsets_max_n) {
        err << "error: --max-n for oracle must lie in [1, " << oracle::subsets_max_n << "]\n";
        return usage;
    }
    out << "n,g_by_partitions,g_by_prime_power_subsets\n";
    for (std::uint64_t n = 1; n <= args.max_n; ++n) {
        out << n << ',';
        if (n <= oracle::partitions_max_n) out << oracle::g_by_partitions(n);
        out << ',' << oracle::g_by_prime_power_subsets(n) << '\n';
    }
    return ok;
}

inline int cmd_plot_data(const PlotArgs& args, std::ostream& out, std::ostream& err)
{
    std::size_t column = 0;
    if (args.series == "ratio")
        column = 5;
    else if (args.series == "log_g")
        column = 3;
    else if (args.series == "P")
        column = 4;
    else {
        err << "error: unknown series '" << args.series << "' (expected ratio, log_g or P)\n";
        return usage;
    }
    std::ifstream in(args.in_path, std::ios::binary);
    if (!in) {
        err << "error: cannot open " << args.in_path << '\n';
        return check_failed;
    }
    std::ostringstream data;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1) {
            if (line != table_csv_header && line != std::string(table_csv_header) + "\r") {
                err << "error: " << args.in_path << " line 1: not a table header\n";
                return check_failed;
            }
            continue;
        }
        try {
            parse_row(line);
        } catch (const error& e) {
            err << "error: " << args.in_path << " line " << line_no << ": " << e.what() << '\n';
            return check_failed;
        }
        std::string_view trimmed = line;
        if (!trimmed.empty() && trimmed.back() == '\r') trimmed.remove_suffix(1);
        const auto fields = split_fields(trimmed);
        if (fields[column].empty()) continue;
        data << fields[0] << '\t' << fields[column] << '\n';
    }
    if (line_no == 0) {
        err << "error: " << args.in_path << " is empty\n";
        return check_failed;
    }
    return detail::with_output(args.out_path, out, err, [&](std::ostream& os) {
        os << data.str();
        return ok;
    });
}

} // namespace landau::cli
