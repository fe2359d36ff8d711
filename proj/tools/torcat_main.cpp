#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torcat/cli.hpp"

namespace {

void add_entry_options(CLI::App* cmd, torcat::RunConfig& cfg) {
    cmd->add_option("entry", cfg.entry, "catalog entry id (see `torcat list`)")->required();
    auto opt = [&](const char* flag, std::optional<int>& slot, const char* help) {
        cmd->add_option_function<int>(flag, [&slot](const int& v) { slot = v; }, help);
    };
    opt("--n", cfg.n, "tower stage / order");
    opt("--p", cfg.p, "prime");
    opt("--m", cfg.m, "truncation height / power of p");
    opt("--d", cfg.d, "number of degree-1 exterior generators");
    opt("--r", cfg.r, "number of degree-2 divided-power generators");
    opt("--e", cfg.e, "ramification index");
    opt("--x-deg", cfg.x_deg, "internal degree of x (default 2)");
    opt("--cap", cfg.cap, "degree cap");
    opt("--total-cap", cfg.total_cap, "total-degree cap for the oracle (default: --cap)");
    cmd->add_flag("--reduced", cfg.reduced, "reduced coefficients");
    cmd->add_option("--series-file", cfg.series_file,
                    "JSON file with a caller-supplied Poincare series");
    std::map<std::string, torcat::RunConfig::Format> formats{
        {"table", torcat::RunConfig::Format::Table},
        {"json", torcat::RunConfig::Format::Json},
        {"latex", torcat::RunConfig::Format::Latex}};
    cmd->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "torcat: iterated-Tor towers for higher Hochschild and Shukla homology, with a "
        "bar-complex homology oracle over F_p"};
    app.require_subcommand(1);

    torcat::RunConfig cfg;
    if (const char* limit = std::getenv("TORCAT_NNZ_LIMIT")) {
        try {
            cfg.nnz_limit = std::stoll(limit);
        } catch (...) {
            std::cerr << "error: TORCAT_NNZ_LIMIT must be an integer\n";
            return 1;
        }
    }

    auto* list = app.add_subcommand("list", "list catalog entries with provenance");
    std::map<std::string, torcat::RunConfig::Format> formats{
        {"table", torcat::RunConfig::Format::Table},
        {"json", torcat::RunConfig::Format::Json},
        {"latex", torcat::RunConfig::Format::Latex}};
    list->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* compute =
        app.add_subcommand("compute", "compute an entry: generator table plus series");
    auto* series = app.add_subcommand("series", "print an entry's Poincare series");
    auto* generators = app.add_subcommand("generators", "print an entry's generator table");
    auto* verify =
        app.add_subcommand("verify", "run the oracle paths for an entry and compare");
    add_entry_options(compute, cfg);
    add_entry_options(series, cfg);
    add_entry_options(generators, cfg);
    add_entry_options(verify, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    using Command = torcat::RunConfig::Command;
    if (list->parsed()) cfg.command = Command::List;
    if (compute->parsed()) cfg.command = Command::Compute;
    if (series->parsed()) cfg.command = Command::Series;
    if (generators->parsed()) cfg.command = Command::Generators;
    if (verify->parsed()) cfg.command = Command::Verify;

    return torcat::run(cfg, std::cout, std::cerr);
}
