#include "dccm/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "dccm/runs.hpp"

namespace dccm {

namespace {

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + path + "'");
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void add_horizon_flags(CLI::App* cmd, HypothesisConfig& h) {
    cmd->add_option("--i-horizon", h.i_horizon, "Largest i used for the sup-lim estimate")
        ->capture_default_str();
    cmd->add_option("--m-horizon", h.m_horizon, "Largest m used for the sup-lim estimate")
        ->capture_default_str();
    cmd->add_option("--stab-window", h.stab_window, "Trailing window checked for stabilization")
        ->capture_default_str();
    cmd->add_option("--stab-tol", h.stab_tol, "Allowed variation inside the window")
        ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Double controlled cone metric spaces: axiom falsification and fixed-point runs",
                 "dccm"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string mode = "exhaustive";
    std::string output;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--space", cfg.space, "Space id: halfline, cross, cross-unit, interval")
            ->required();
        cmd->add_option("--mode", mode, "exhaustive or random")
            ->check(CLI::IsMember({"exhaustive", "random"}))
            ->capture_default_str();
        cmd->add_option("--n-samples", cfg.n_samples, "Random samples (pairs/triples)")
            ->capture_default_str();
        cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
        cmd->add_option("-o,--output", output, "Report file (stdout if omitted)");
    };

    CLI::App* verify = app.add_subcommand("verify", "Falsify cone and metric axioms");
    add_common(verify);

    CLI::App* solve = app.add_subcommand("solve", "Estimate contraction constants and iterate");
    add_common(solve);
    solve->add_option("--map", cfg.map, "Map id: halving, quartering, identity, const:<point>")
        ->required();
    solve->add_option("--family", cfg.family, "banach, kannan or reich")
        ->check(CLI::IsMember({"banach", "kannan", "reich"}))
        ->capture_default_str();
    solve->add_option("--x0", cfg.x0, "Starting point, e.g. H:1 or 0.5");
    solve->add_option("--tol", cfg.tol, "Convergence tolerance")->capture_default_str();
    solve->add_option("--max-iter", cfg.max_iter, "Iteration cap")->capture_default_str();
    solve->add_option("--grid-step", cfg.grid_step, "Step of the Kannan/Reich constant grid")
        ->capture_default_str();
    add_horizon_flags(solve, cfg.horizons);

    CLI::App* hyp = app.add_subcommand("hypotheses", "Audit theorem hypotheses on a solve report");
    std::string orbit_path;
    std::optional<std::string> family_override;
    std::optional<double> k, a, b, c;
    hyp->add_option("--orbit", orbit_path, "Solve report holding the orbit")->required();
    hyp->add_option("--family", family_override, "Override the report's family")
        ->check(CLI::IsMember({"banach", "kannan", "reich"}));
    hyp->add_option("--k", k, "Banach constant");
    hyp->add_option("--a", a, "Kannan/Reich constant a");
    hyp->add_option("--b", b, "Kannan/Reich constant b");
    hyp->add_option("--c", c, "Reich constant c");
    hyp->add_option("-o,--output", output, "Report file (stdout if omitted)");
    add_horizon_flags(hyp, cfg.horizons);

    CLI::App* report = app.add_subcommand("report", "Merge reports into a summary table");
    std::vector<std::string> inputs;
    report->add_option("inputs", inputs, "Report files");
    report->add_option("-o,--output", output, "Summary file (stdout if omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dccm: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        cfg.exhaustive = mode == "exhaustive";
        RunOutcome outcome;
        if (verify->parsed()) {
            outcome = run_verify(cfg);
        } else if (solve->parsed()) {
            outcome = run_solve(cfg);
        } else if (hyp->parsed()) {
            const Json src = Json::parse(read_file(orbit_path));
            std::optional<ContractionParams> params;
            if (k || a || b || c) {
                const Family fam = parse_family(
                    family_override.value_or(src.value("family", std::string("banach"))));
                params = ContractionParams{fam, k.value_or(0.0), a.value_or(0.0),
                                           b.value_or(0.0), c.value_or(0.0)};
            }
            outcome = run_hypotheses(src, cfg.horizons, family_override, params);
        } else {
            std::vector<std::string> texts;
            for (const auto& path : inputs) texts.push_back(read_file(path));
            write_output(output, render_summary(texts), out);
            return kExitOk;
        }
        write_output(output, dump_report(outcome.report), out);
        return outcome.exit_code;
    } catch (const DomainError& e) {
        err << "dccm: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "dccm: malformed report: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace dccm
