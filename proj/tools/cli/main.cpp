// dn3 — evaluation and verification of Shen's signature-three elliptic
// function and the closed forms attached to it.
//
// Verbs:
//   eval       dn3 at a point, by either or both evaluation routes
//   periods    half-periods, Greenhill constants, invariants, cubic roots
//   critical   critical values x1, x2, x3
//   poles      pole locations over lattice cells
//   ramanujan  the p-parametrized identity and its derived quantities
//   verify     the full identity suite as a machine-readable report
//   table      dn3 sampled over [0, 2K)

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <vector>

#include "command.hpp"

namespace {

using shen3::cli::Command;
using shen3::cli::Format;
using shen3::cli::Route;
using shen3::cli::Verb;

int run_and_emit(const Command& cmd)
{
    const auto output = shen3::cli::run(cmd);
    const std::string text = shen3::cli::format_output(output, cmd.format);
    if (cmd.out_path) {
        std::ofstream file(*cmd.out_path, std::ios::binary);
        if (!file || !(file << text)) {
            std::cerr << "dn3: cannot write " << *cmd.out_path << "\n";
            return shen3::cli::kExitUsage;
        }
    } else {
        std::cout << text;
    }
    return shen3::cli::exit_code(output);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Shen dn3 elliptic function toolkit"};
    app.require_subcommand(1);

    Command cmd;
    std::vector<double> u_parts;
    std::string route = "both";
    std::string format = "json";

    const auto add_common = [&](CLI::App* sub, bool needs_kappa2) {
        if (needs_kappa2) {
            sub->add_option("--kappa2", cmd.kappa2, "squared modulus in (0, 1)");
        }
        sub->add_option("--grid", cmd.grid, "sample count (cells for poles)");
        sub->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cmd.out_path, "write output to a file");
    };

    auto* eval = app.add_subcommand("eval", "evaluate dn3 at a point");
    add_common(eval, true);
    eval->add_option("--u", u_parts, "argument: re [im]")->expected(1, 2);
    eval->add_option("--route", route, "direct, wp, or both")
        ->check(CLI::IsMember({"direct", "wp", "both"}));

    add_common(app.add_subcommand("periods", "half-periods and lattice data"), true);
    add_common(app.add_subcommand("critical", "critical values"), true);
    add_common(app.add_subcommand("poles", "pole locations"), true);

    auto* ram = app.add_subcommand("ramanujan", "signature-three identity data");
    add_common(ram, false);
    ram->add_option("--p", cmd.p, "identity parameter in (0, 1)");

    add_common(app.add_subcommand("verify", "run the verification suite"), true);
    add_common(app.add_subcommand("table", "sample dn3 over [0, 2K)"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return shen3::cli::kExitUsage;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    if (sub == "eval") {
        cmd.verb = Verb::eval;
    } else if (sub == "periods") {
        cmd.verb = Verb::periods;
    } else if (sub == "critical") {
        cmd.verb = Verb::critical;
    } else if (sub == "poles") {
        cmd.verb = Verb::poles;
    } else if (sub == "ramanujan") {
        cmd.verb = Verb::ramanujan;
    } else if (sub == "verify") {
        cmd.verb = Verb::verify;
    } else {
        cmd.verb = Verb::table;
    }
    if (!u_parts.empty()) {
        cmd.u = std::complex<double>(u_parts[0], u_parts.size() > 1 ? u_parts[1] : 0.0);
    }
    cmd.route = route == "direct" ? Route::direct : route == "wp" ? Route::wp : Route::both;
    cmd.format = format == "csv" ? Format::csv : Format::json;

    try {
        return run_and_emit(cmd);
    } catch (const shen3::cli::UsageError& e) {
        std::cerr << "dn3: " << e.what() << "\n";
        return shen3::cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "dn3: " << e.what() << "\n";
        return shen3::cli::kExitUsage;
    }
}
