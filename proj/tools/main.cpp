#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "crosscycle/commands.hpp"
#include "crosscycle/registry.hpp"

using namespace crosscycle;

namespace {

struct Flags {
    std::string config, example, out, svg, format;
    double tol = 0, ode_tol = 0;
    unsigned seed = 1;
    int draws = 100;
    bool all = false, zoom = false;
};

// Config file first, then command-line overrides on top.
RunConfig assemble(const Flags& fl, bool example_selects_system) {
    RunConfig cfg;
    if (!fl.config.empty()) cfg = load_config(fl.config);
    if (example_selects_system && !fl.example.empty()) {
        try {
            example_by_id(fl.example);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        cfg.example = fl.example;
        cfg.system.reset();
    }
    if (fl.tol > 0) cfg.tol = fl.tol;
    if (fl.ode_tol > 0) cfg.ode_tol = fl.ode_tol;
    if (!fl.out.empty()) cfg.out_path = fl.out;
    if (!fl.svg.empty()) cfg.svg_path = fl.svg;
    if (!fl.format.empty()) cfg.format = fl.format;
    if (fl.zoom) cfg.zoom = true;
    return cfg;
}

void require_system(const RunConfig& cfg) {
    if (!cfg.example && !cfg.system)
        throw ConfigError("missing system source: pass --config or --example");
}

// Registry id / family name for the commands that iterate: the explicit
// --all wins, a given id selects one, neither means all.
std::string selection(const Flags& fl) {
    if (fl.all && !fl.example.empty())
        throw ConfigError("pass either --example or --all, not both");
    return fl.all ? "all" : fl.example;
}

void add_io_flags(CLI::App* cmd, Flags& fl) {
    cmd->add_option("--out", fl.out, "output path (default stdout)");
    cmd->add_option("--format", fl.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_system_flags(CLI::App* cmd, Flags& fl) {
    cmd->add_option("--config", fl.config, "JSON run configuration");
    cmd->add_option("--example", fl.example, "registry example id");
    cmd->add_option("--tol", fl.tol, "algebraic solve tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--ode-tol", fl.ode_tol, "integrator tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossing limit cycles of piecewise linear-center / nilpotent-saddle systems"};
    app.require_subcommand(1);
    Flags fl;

    CLI::App* solve = app.add_subcommand("solve", "solve the crossing polynomial system");
    add_system_flags(solve, fl);
    add_io_flags(solve, fl);

    CLI::App* verify = app.add_subcommand("verify", "solve, then verify each cycle by integration");
    add_system_flags(verify, fl);
    add_io_flags(verify, fl);
    verify->add_option("--svg", fl.svg, "write a figure of the verified cycles");
    verify->add_flag("--zoom", fl.zoom, "add a panel zoomed near the origin");

    CLI::App* render = app.add_subcommand("render", "figure only, no table");
    add_system_flags(render, fl);
    render->add_option("--svg", fl.svg, "figure output path")->required();
    render->add_flag("--zoom", fl.zoom, "add a panel zoomed near the origin");

    CLI::App* check = app.add_subcommand("check-appendix",
                                         "compare generated crossing polynomials "
                                         "against the closed forms");
    check->add_option("--example", fl.example, "family name (default all)");
    check->add_flag("--all", fl.all, "all ten families");
    check->add_option("--seed", fl.seed, "random seed");
    check->add_option("--draws", fl.draws, "parameter draws per family")
        ->check(CLI::PositiveNumber);
    add_io_flags(check, fl);

    CLI::App* reproduce = app.add_subcommand("reproduce",
                                             "re-derive the published solution tables");
    reproduce->add_option("--config", fl.config, "JSON run configuration");
    reproduce->add_option("--example", fl.example, "registry example id (default all)");
    reproduce->add_flag("--all", fl.all, "all ten examples");
    reproduce->add_option("--tol", fl.tol, "algebraic solve tolerance")
        ->check(CLI::PositiveNumber);
    reproduce->add_option("--ode-tol", fl.ode_tol, "integrator tolerance")
        ->check(CLI::PositiveNumber);
    reproduce->add_option("--out", fl.out, "machine JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        // Transcription guard: building the registry re-checks every stored
        // first integral against its vector field.
        example_registry();

        if (solve->parsed()) {
            RunConfig cfg = assemble(fl, true);
            require_system(cfg);
            return cmd_solve(cfg, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            RunConfig cfg = assemble(fl, true);
            require_system(cfg);
            return cmd_verify(cfg, std::cout, std::cerr);
        }
        if (render->parsed()) {
            RunConfig cfg = assemble(fl, true);
            require_system(cfg);
            return cmd_render(cfg, std::cerr);
        }
        if (check->parsed()) {
            RunConfig cfg = assemble(fl, false);
            return cmd_check_appendix(cfg, selection(fl), fl.seed, fl.draws, std::cout,
                                      std::cerr);
        }
        RunConfig cfg = assemble(fl, false);
        return cmd_reproduce(cfg, selection(fl), std::cout, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }
}
