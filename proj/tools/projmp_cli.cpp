#include "projmp/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace projmp::cli;

    CLI::App app{"Exact checks of Moore-Penrose and Drazin inverse identities for pairs of projections"};
    app.set_version_flag("--version", std::string(projmp::version));
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run theorem batteries over many projection pairs");
    verify->add_option("--ring", vo.ring, "q | qi | gf:<p> | example26")->capture_default_str();
    verify->add_option("--n", vo.n, "Matrix size")->capture_default_str();
    verify->add_option("--trials", vo.trials, "Random trials (ignored for exhaustive rings)")->capture_default_str();
    verify->add_option("--seed", vo.seed, "Campaign seed")->capture_default_str();
    verify->add_option("--theorems", vo.theorems, "all, or a comma list of theorem ids")->capture_default_str();
    verify->add_option("--out", vo.out, "Report path (default stdout)");
    verify->add_option("--format", vo.format, "json | csv")->capture_default_str();
    verify->add_option("--jobs", vo.jobs, "Worker threads (0 = all cores)")->capture_default_str();

    InverseOptions io;
    auto* inverse = app.add_subcommand("inverse", "Compute an MP, Drazin or group inverse of a matrix file");
    inverse->add_option("--kind", io.kind, "mp | drazin | group")->capture_default_str();
    inverse->add_option("--in", io.in, "Matrix file (default stdin)");
    inverse->add_option("--out", io.out, "Output path (default stdout)");

    bool json = false;
    auto* counter = app.add_subcommand("counterexample", "Show p(1-q)p in R† while p(1-q) is not, in example26");
    counter->add_flag("--json", json, "Structured output");

    EnumerateOptions eo;
    auto* enumerate = app.add_subcommand("enumerate", "List projections or MP-invertible elements of a finite ring");
    enumerate->add_option("--ring", eo.ring, "example26 | gf:<p>")->capture_default_str();
    enumerate->add_option("--n", eo.n, "Matrix size for gf rings")->capture_default_str();
    enumerate->add_option("--what", eo.what, "projections | mp-invertible")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (*verify)
        return cmd_verify(vo, std::cout, std::cerr);
    if (*inverse)
        return cmd_inverse(io, std::cin, std::cout, std::cerr);
    if (*counter)
        return cmd_counterexample(json, std::cout);
    return cmd_enumerate(eo, std::cout, std::cerr);
}
