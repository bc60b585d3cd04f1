// landau: exact tables of Landau's function g(n) and checks on the largest
// prime factor of g(n).

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "landau/commands.hpp"

int main(int argc, char** argv)
{
    using namespace landau;

    CLI::App app{"Exact tables of Landau's function g(n) and checks on its largest prime factor"};
    app.require_subcommand(1);

    const std::map<std::string, CutoffMode> cutoffs{{"safe", CutoffMode::safe},
                                                    {"exhaustive", CutoffMode::exhaustive}};

    cli::TableArgs table_args;
    auto* table = app.add_subcommand("table", "Write the g(n) table as CSV");
    table->add_option("--max-n", table_args.max_n, "Largest n")->check(CLI::PositiveNumber);
    table->add_option("--cutoff", table_args.cutoff, "Prime cutoff mode")
        ->transform(CLI::CheckedTransformer(cutoffs, CLI::ignore_case));
    table->add_option("--out", table_args.out_path, "Output file (default: standard output)");
    table->add_flag("--long-run", table_args.long_run, "Allow max-n above 500000");
    table->add_option("--threads", table_args.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    cli::VerifyArgs verify_args;
    std::uint64_t verify_max_n = 0;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("which", verify_args.which, "lemmas | bound | reduction")
        ->required()
        ->check(CLI::IsMember({"lemmas", "bound", "reduction"}));
    auto* verify_max_n_opt = verify->add_option("--max-n", verify_max_n, "Largest n (lemmas, reduction)")
                                 ->check(CLI::PositiveNumber);
    verify->add_option("--qmax", verify_args.q_max, "Largest q (bound)")->check(CLI::PositiveNumber);
    verify->add_option("--out", verify_args.out_path, "Optional CSV report");
    verify->add_flag("--long-run", verify_args.long_run, "Allow the long-run ranges");
    verify->add_option("--threads", verify_args.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    cli::RatioArgs ratio_args;
    auto* ratio = app.add_subcommand("ratio", "Largest values of P(g(n)) / sqrt(n log n)");
    ratio->add_option("--max-n", ratio_args.max_n, "Largest n")->check(CLI::PositiveNumber);
    ratio->add_option("--top", ratio_args.top, "Rows to print")->check(CLI::PositiveNumber);
    ratio->add_flag("--long-run", ratio_args.long_run, "Allow max-n above 500000");
    ratio->add_option("--threads", ratio_args.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    cli::OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "Brute-force g(n) for small n");
    oracle->add_option("--max-n", oracle_args.max_n, "Largest n (at most 60)")->check(CLI::PositiveNumber);

    cli::PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot-data", "Extract one column of a table CSV as n<TAB>value");
    plot->add_option("--in", plot_args.in_path, "Table CSV")->required();
    plot->add_option("--out", plot_args.out_path, "Output file (default: standard output)");
    plot->add_option("--series", plot_args.series, "ratio | log_g | P")
        ->check(CLI::IsMember({"ratio", "log_g", "P"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::usage;
    }

    if (verify_max_n_opt->count() > 0) verify_args.max_n = verify_max_n;

    if (*table) return cli::cmd_table(table_args, std::cout, std::cerr);
    if (*verify) return cli::cmd_verify(verify_args, std::cout, std::cerr);
    if (*ratio) return cli::cmd_ratio(ratio_args, std::cout, std::cerr);
    if (*oracle) return cli::cmd_oracle(oracle_args, std::cout, std::cerr);
    if (*plot) return cli::cmd_plot_data(plot_args, std::cout, std::cerr);
    return cli::usage;
}
