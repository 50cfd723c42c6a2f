#include <braidchow/cli.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using braidchow::cli::RunConfig;

void add_output_flags(CLI::App* sub, RunConfig& cfg, std::string& output) {
    sub->add_option("--format", cfg.format, "json | csv | latex")->capture_default_str();
    sub->add_option("-o,--output", output, "write to this file instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant Chow polynomials of braid matroids"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string output;

    auto* table = app.add_subcommand("table", "equivariant Chow polynomials H_n(t)");
    table->add_option("--max-n", cfg.max_n, "largest n")->capture_default_str();
    table->add_option("--basis", cfg.basis, "schur | p")->capture_default_str();
    add_output_flags(table, cfg, output);

    auto* numeric = app.add_subcommand("numeric", "numeric Chow polynomials and Euler characteristics");
    numeric->add_option("--max-n", cfg.max_n, "largest n")->capture_default_str();
    numeric->add_option("--method", cfg.method, "solve | stirling | bell | lattice | strata | all")->capture_default_str();
    add_output_flags(numeric, cfg, output);

    auto* mseries = app.add_subcommand("m-series", "the series M of open moduli spaces");
    mseries->add_option("--max-n", cfg.max_n, "largest n")->capture_default_str();
    mseries->add_option("--basis", cfg.basis, "schur | p")->capture_default_str();
    add_output_flags(mseries, cfg, output);

    auto* strata = app.add_subcommand("strata", "level-tree census and stratum E-polynomial");
    strata->add_option("--n", cfg.max_n, "number of non-root markings")->required();
    strata->add_flag("--count-only", cfg.count_only, "skip the E-polynomial");
    add_output_flags(strata, cfg, output);

    auto* verify = app.add_subcommand("verify", "run the self-check suite");
    verify->add_option("--max-n", cfg.max_n, "largest n")->capture_default_str();
    verify->add_option("--inject-fault", cfg.inject_fault, "testing aid: stirling-sign");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(braidchow::cli::ExitCode::usage);
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            std::cerr << "error: cannot open " << output << "\n";
            return static_cast<int>(braidchow::cli::ExitCode::usage);
        }
    }
    std::ostream& out = output.empty() ? std::cout : file;

    namespace c = braidchow::cli;
    if (app.got_subcommand(table)) return c::cmd_table(cfg, out, std::cerr);
    if (app.got_subcommand(numeric)) return c::cmd_numeric(cfg, out, std::cerr);
    if (app.got_subcommand(mseries)) return c::cmd_m_series(cfg, out, std::cerr);
    if (app.got_subcommand(strata)) return c::cmd_strata(cfg, out, std::cerr);
    return c::cmd_verify(cfg, out, std::cerr);
}
