// zdg: command-line front end for the zero-divisor graph library.
//
// Subcommands:
//   analyze <n>   one-modulus report (text or JSON); exit 2 on any
//                 formula mismatch, 1 when the graph is empty
//   matrix <n>    adjacency matrix as CSV or DOT on stdout
//   verify        sweep a family of moduli, JSON lines plus a summary;
//                 exit 0 iff every structural invariant held

#include "zdg/zdg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

zdg::Convention convention_from(const std::string& loops) {
    return loops == "simple" ? zdg::Convention::simple
                             : zdg::Convention::paper_loops;
}

struct AnalyzeArgs {
    std::uint64_t n = 0;
    std::string loops = "paper";
    bool json = false;
    double tol = zdg::kDefaultClosedFormTol;
    std::size_t dense_cap = zdg::kDefaultDenseCap;
    bool no_timings = false;
};

struct MatrixArgs {
    std::uint64_t n = 0;
    std::string loops = "paper";
    std::string format = "csv";
    std::size_t dense_cap = zdg::kDefaultDenseCap;
};

struct VerifyArgs {
    std::string form;
    std::uint64_t p_max = 0;
    std::uint64_t q_max = 0;
    std::uint64_t n_cap = 0;
    std::string loops = "paper";
    double tol = zdg::kDefaultClosedFormTol;
    std::size_t dense_cap = zdg::kDefaultDenseCap;
    int jobs = 1;
    bool no_timings = false;
};

int run_analyze(const AnalyzeArgs& args) {
    zdg::AnalyzeOptions options;
    options.convention = convention_from(args.loops);
    options.dense_cap = args.dense_cap;
    options.closed_form_tol = args.tol;
    options.collect_timings = !args.no_timings;

    const zdg::AnalysisReport report = zdg::analyze(args.n, options);
    const std::string out = args.json
                                ? zdg::render_json(report, !args.no_timings)
                                : zdg::render_text(report, !args.no_timings);
    std::fwrite(out.data(), 1, out.size(), stdout);
    return report.any_mismatch() ? 2 : 0;
}

int run_matrix(const MatrixArgs& args) {
    const zdg::ClassStructure cs =
        zdg::class_partition(zdg::factorize(args.n));
    const zdg::AdjacencyMatrix matrix = zdg::build_adjacency(
        cs, convention_from(args.loops), args.dense_cap);
    const std::string out = zdg::export_matrix(
        matrix, args.format == "dot" ? zdg::MatrixFormat::dot
                                     : zdg::MatrixFormat::csv);
    std::fwrite(out.data(), 1, out.size(), stdout);
    return 0;
}

int run_verify(const VerifyArgs& args) {
    zdg::SweepConfig config;
    if (args.form == "p3") {
        config.form = zdg::SweepForm::p3;
    } else if (args.form == "p2q") {
        config.form = zdg::SweepForm::p2q;
    } else {
        config.form = zdg::SweepForm::general;
    }
    if (config.form != zdg::SweepForm::general && args.p_max < 2) {
        std::cerr << "error: verify --form " << args.form
                  << " needs --p-max of at least 2\n";
        return 1;
    }
    if (config.form == zdg::SweepForm::general && args.n_cap < 4) {
        std::cerr << "error: verify --form general needs --n-cap of at "
                     "least 4\n";
        return 1;
    }
    config.p_max = args.p_max;
    config.q_max = args.q_max;
    config.n_cap = args.n_cap;
    config.analysis.convention = convention_from(args.loops);
    config.analysis.closed_form_tol = args.tol;
    config.analysis.dense_cap = args.dense_cap;
    config.jobs = args.jobs;
    config.timings = !args.no_timings;

    const zdg::SweepSummary summary = zdg::run_sweep(config, std::cout);
    return summary.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-divisor graphs of Z_n: structure, spectra, energy, "
                 "Wiener index"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "analyze the zero-divisor graph of one modulus");
    analyze_cmd->add_option("n", analyze_args.n, "modulus n of Z_n")
        ->required();
    analyze_cmd
        ->add_option("--loops", analyze_args.loops,
                     "diagonal convention: paper (loops kept) or simple")
        ->check(CLI::IsMember({"paper", "simple"}));
    analyze_cmd->add_flag("--json", analyze_args.json,
                          "emit a single JSON record instead of text");
    analyze_cmd->add_option("--tol", analyze_args.tol,
                            "closed-form comparison tolerance");
    analyze_cmd->add_option("--dense-cap", analyze_args.dense_cap,
                            "largest graph order for dense-matrix work");
    analyze_cmd->add_flag("--no-timings", analyze_args.no_timings,
                          "omit timings for byte-stable output");

    MatrixArgs matrix_args;
    CLI::App* matrix_cmd = app.add_subcommand(
        "matrix", "print the adjacency matrix of one modulus");
    matrix_cmd->add_option("n", matrix_args.n, "modulus n of Z_n")->required();
    matrix_cmd
        ->add_option("--format", matrix_args.format, "output format")
        ->check(CLI::IsMember({"csv", "dot"}));
    matrix_cmd
        ->add_option("--loops", matrix_args.loops,
                     "diagonal convention: paper (loops kept) or simple")
        ->check(CLI::IsMember({"paper", "simple"}));
    matrix_cmd->add_option("--dense-cap", matrix_args.dense_cap,
                           "largest graph order for dense-matrix work");

    VerifyArgs verify_args;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "sweep a family of moduli and tally formula verdicts");
    verify_cmd->add_option("--form", verify_args.form, "family to sweep")
        ->required()
        ->check(CLI::IsMember({"p3", "p2q", "general"}));
    verify_cmd->add_option("--p-max", verify_args.p_max,
                           "largest prime p (p3, p2q)");
    verify_cmd->add_option("--q-max", verify_args.q_max,
                           "largest prime q (p2q; defaults to --p-max)");
    verify_cmd->add_option("--n-cap", verify_args.n_cap,
                           "largest modulus (required for general)");
    verify_cmd
        ->add_option("--loops", verify_args.loops,
                     "diagonal convention: paper (loops kept) or simple")
        ->check(CLI::IsMember({"paper", "simple"}));
    verify_cmd->add_option("--tol", verify_args.tol,
                           "closed-form comparison tolerance");
    verify_cmd->add_option("--dense-cap", verify_args.dense_cap,
                           "largest graph order for dense-matrix work");
    verify_cmd
        ->add_option("--jobs", verify_args.jobs, "worker threads")
        ->envname("ZDG_JOBS");
    verify_cmd->add_flag("--no-timings", verify_args.no_timings,
                         "omit timings for byte-stable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed()) return run_analyze(analyze_args);
        if (matrix_cmd->parsed()) return run_matrix(matrix_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
    } catch (const zdg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
