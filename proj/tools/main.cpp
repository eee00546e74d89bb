#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cli_core.hpp"

namespace {

using namespace spinscatter;

constexpr double kDegree = std::numbers::pi / 180.0;

double to_radians(double value, bool degrees) {
    return degrees ? value * kDegree : value;
}

int run(int argc, char **argv) {
    CLI::App app{"Entanglement generated in elastic two-spin-1/2 scattering"};
    app.require_subcommand(1);

    std::string format_name = "csv";
    bool degrees = false;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_flag("--degrees", degrees, "Interpret angles in degrees");
    };

    // scatter
    double theta = 0.0, delta0 = 0.0, delta1 = 0.0;
    auto *scatter = app.add_subcommand(
        "scatter", "Scatter one product in-state and report the entanglement");
    scatter->add_option("--theta", theta, "Angle between the two polarizations")
        ->required();
    scatter->add_option("--delta0", delta0, "Singlet channel half-phase");
    scatter->add_option("--delta1", delta1, "Triplet channel half-phase");
    add_common(scatter);

    // sweep
    cli::SweepSpec spec;
    auto *sweep = app.add_subcommand(
        "sweep", "Map the entanglement over a (theta, delta-diff) grid");
    sweep->add_option("--theta-start", spec.theta_start)->required();
    sweep->add_option("--theta-end", spec.theta_end)->required();
    sweep->add_option("--theta-count", spec.theta_count)->required();
    sweep->add_option("--delta-start", spec.delta_start, "Start of the delta0 - delta1 range")
        ->required();
    sweep->add_option("--delta-end", spec.delta_end)->required();
    sweep->add_option("--delta-count", spec.delta_count)->required();
    add_common(sweep);

    // partial-wave
    std::string table_path;
    int orbital_l = 0;
    double q_start = 0.0, q_end = 0.0;
    int q_count = 0;
    auto *partial = app.add_subcommand(
        "partial-wave", "Entanglement per relative momentum in one partial wave");
    partial->add_option("--table", table_path, "Phase-shift CSV file")->required();
    partial->add_option("--l", orbital_l, "Orbital angular momentum")->required();
    partial->add_option("--theta", theta, "Angle between the two polarizations")
        ->required();
    partial->add_option("--q-start", q_start)->required();
    partial->add_option("--q-end", q_end)->required();
    partial->add_option("--q-count", q_count)->required();
    add_common(partial);

    // tables
    std::string what;
    std::vector<std::string> table_args;
    auto *tables = app.add_subcommand("tables", "Print reference tables");
    tables->add_option("what", what, "cgc | magic | coupling")->required();
    tables->add_option("args", table_args, "Angular momenta, e.g. 1/2 or 1");
    add_common(tables);

    // check
    auto *check = app.add_subcommand("check", "Run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const cli::OutputFormat format = cli::parse_format(format_name);

    if (*scatter) {
        const double th = to_radians(theta, degrees);
        if (!(th >= 0.0 && th < std::numbers::pi))
            throw InputError("scatter: theta must lie in [0, pi)");
        const cli::RunReport report =
            cli::run_scatter(th, to_radians(delta0, degrees), to_radians(delta1, degrees));
        cli::write_run_report(std::cout, report, format);
        if (report.residual >= 1e-10) {
            std::cerr << "error: closed-form/pipeline residual "
                      << cli::format_value(report.residual) << " exceeds 1e-10\n";
            return 2;
        }
        return 0;
    }

    if (*sweep) {
        if (degrees) {
            spec.theta_start *= kDegree;
            spec.theta_end *= kDegree;
            spec.delta_start *= kDegree;
            spec.delta_end *= kDegree;
        }
        spec.format = format;
        cli::write_sweep(std::cout, spec);
        return 0;
    }

    if (*partial) {
        const PhaseShiftTable table = PhaseShiftTable::load(table_path);
        const auto rows = cli::partial_wave_rows(table, orbital_l,
                                                 to_radians(theta, degrees), q_start,
                                                 q_end, q_count);
        cli::write_partial_wave(std::cout, rows, format);
        return 0;
    }

    if (*tables) {
        if (what == "cgc") {
            if (table_args.size() != 2)
                throw InputError("tables cgc needs two angular momenta, e.g. 'cgc 1/2 1/2'");
            cli::write_cgc_table(std::cout, cli::parse_angular_momentum(table_args[0]),
                                 cli::parse_angular_momentum(table_args[1]), format);
        } else if (what == "magic") {
            if (!table_args.empty())
                throw InputError("tables magic takes no arguments");
            cli::write_magic_table(std::cout, format);
        } else if (what == "coupling") {
            if (table_args.size() != 2)
                throw InputError("tables coupling needs l and s, e.g. 'coupling 1 1/2'");
            cli::write_coupling_table(std::cout,
                                      cli::parse_angular_momentum(table_args[0]),
                                      cli::parse_angular_momentum(table_args[1]), format);
        } else {
            throw InputError("unknown table '" + what + "' (expected cgc, magic, coupling)");
        }
        return 0;
    }

    if (*check)
        return cli::run_check(std::cout) == 0 ? 0 : 2;

    return 1;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const InputError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const TableLoadError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ChannelError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GridRangeError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
