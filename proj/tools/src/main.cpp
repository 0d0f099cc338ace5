#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"

using namespace striptr::cli;

namespace {

// Flag values that override the config file when given.
struct Overrides {
    std::optional<int> g_max;
    std::optional<long> precision;
    std::optional<int> q_order;
    std::optional<int> degree;
    std::optional<unsigned long> seed;
    std::string format = "table";
};

RunConfig load(const std::string &path, const Overrides &o)
{
    RunConfig cfg = load_config(path);
    if (o.g_max) cfg.g_max = *o.g_max;
    if (o.precision) cfg.precision_bits = *o.precision;
    if (o.q_order) cfg.q_order = *o.q_order;
    if (o.degree) cfg.degree = *o.degree;
    if (o.seed) cfg.seed = *o.seed;
    cfg.format = o.format == "records" ? OutputFormat::records : OutputFormat::table;
    if (cfg.precision_bits < 64) {
        throw striptr::ParseError("precision must be at least 64 bits");
    }
    return cfg;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Free energies, BPS tables and verification suites for strip geometries"};
    app.require_subcommand(1);

    Overrides o;
    std::string config;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "records"}))
        ->capture_default_str();
    app.add_option("--precision", o.precision, "Working precision in bits (default: STRIPTR_PRECISION or 256)");
    app.add_option("--seed", o.seed, "Seed for randomized verification cases");

    auto *validate = app.add_subcommand("validate", "Check the standing assumptions on a geometry");
    validate->add_option("config", config, "Geometry config (JSON)")->required();

    RouteChoice route = RouteChoice::closed;
    auto *fe = app.add_subcommand("free-energy", "Genus-g free energies by one or all routes");
    fe->add_option("config", config, "Geometry config (JSON)")->required();
    fe->add_option("--g-max", o.g_max, "Largest genus");
    fe->add_option("--route", route, "closed, residue, tr or all")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, RouteChoice>{{"closed", RouteChoice::closed},
                                               {"residue", RouteChoice::residue},
                                               {"tr", RouteChoice::tr},
                                               {"all", RouteChoice::all}}));

    auto *bps = app.add_subcommand("bps-table", "5D BPS indices per charge tower");
    bps->add_option("config", config, "Geometry config (JSON)")->required();

    bool dt = false;
    auto *zs = app.add_subcommand("z-series", "q-expansion of log Z (or Z with --dt)");
    zs->add_option("config", config, "Geometry config (JSON)")->required();
    zs->add_option("--q-order", o.q_order, "Highest power of q");
    zs->add_option("--degree", o.degree, "Highest total degree in the Kahler variables");
    zs->add_flag("--dt", dt, "Print coefficients of Z instead of log Z");

    Suite suite = Suite::lemmas;
    auto *verify = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every case passes");
    verify->add_option("config", config, "Geometry config (JSON)")->required();
    verify->add_option("--suite", suite, "lemmas, routes, product or tr")
        ->required()
        ->transform(CLI::CheckedTransformer(std::map<std::string, Suite>{{"lemmas", Suite::lemmas},
                                                                         {"routes", Suite::routes},
                                                                         {"product", Suite::product},
                                                                         {"tr", Suite::tr}}));
    verify->add_option("--g-max", o.g_max, "Largest genus");
    verify->add_option("--degree", o.degree, "Largest curve degree (product suite)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ExitCode::failure;
    }

    Streams io{std::cout, std::cerr};
    try {
        RunConfig cfg = load(config, o);
        if (*validate) return run_validate(cfg, io);
        if (*fe) return run_free_energy(cfg, route, io);
        if (*bps) return run_bps_table(cfg, io);
        if (*zs) return run_z_series(cfg, dt, io);
        return run_verify(cfg, suite, io);
    } catch (...) {
        return report_exception(std::cerr);
    }
}
