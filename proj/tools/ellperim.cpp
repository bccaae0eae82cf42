#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ellperim/commands.hpp"

namespace {

using ellperim::CommandOptions;

struct GlobalFlags {
    std::string format = "table";
    double tol = 0.0;
    bool as_printed = false;
};

void add_common(CLI::App* command, GlobalFlags& flags) {
    command->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    command->add_option("--tol", flags.tol,
                        "Override the oracle tolerance (quadrature abs/rel tol and AGM tol)")
        ->check(CLI::PositiveNumber);
}

CommandOptions resolve(const GlobalFlags& flags) {
    CommandOptions options;
    options.format = *ellperim::output_format_from_name(flags.format);
    if (flags.tol > 0.0) {
        options.quadrature.abs_tol = flags.tol;
        options.quadrature.rel_tol = flags.tol;
        options.agm.tol = flags.tol;
    }
    if (flags.as_printed) {
        options.transcription = ellperim::Transcription::AsPrinted;
    }
    return options;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ellipse perimeter: exact oracles, certified bounds and classical approximations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(ellperim::kVersion));

    GlobalFlags flags;
    double a = 0.0;
    double b = 0.0;

    std::string method = "agm";
    int order = 6;
    auto* perimeter = app.add_subcommand("perimeter", "Perimeter by one method");
    perimeter->add_option("--a", a, "First semi-axis")->required();
    perimeter->add_option("--b", b, "Second semi-axis")->required();
    perimeter->add_option("--method", method,
                          "agm, quadrature, a series (euler-maclaurin, maclaurin, gauss-kummer, "
                          "euler-2f1, cayley, abbott) or an approximation name")
        ->capture_default_str();
    perimeter->add_option("--order", order, "Cayley truncation order (2, 4 or 6)")
        ->capture_default_str();
    perimeter->add_flag("--as-printed", flags.as_printed,
                        "Use the misprinted Sipos / Ramanujan II variants");
    add_common(perimeter, flags);

    auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds with the oracle");
    bounds->add_option("--a", a, "First semi-axis")->required();
    bounds->add_option("--b", b, "Second semi-axis")->required();
    add_common(bounds, flags);

    auto* compare = app.add_subcommand("compare", "Rank every approximation against the oracle");
    compare->add_option("--a", a, "First semi-axis")->required();
    compare->add_option("--b", b, "Second semi-axis")->required();
    compare->add_flag("--as-printed", flags.as_printed,
                      "Use the misprinted Sipos / Ramanujan II variants");
    add_common(compare, flags);

    double sweep_a = 2.0;
    double b_min = 0.0;
    double b_max = -1.0;
    int steps = 201;
    auto* sweep = app.add_subcommand("sweep", "Quarter-arc upper bounds versus b at fixed a");
    sweep->add_option("--a", sweep_a, "Semi-major axis")->capture_default_str();
    sweep->add_option("--b-min", b_min, "Smallest b")->capture_default_str();
    sweep->add_option("--b-max", b_max, "Largest b (default: a)");
    sweep->add_option("--steps", steps, "Number of rows")->capture_default_str();
    add_common(sweep, flags);

    ellperim::CheckOptions check_options;
    auto* check = app.add_subcommand("check", "Run the invariant suite");
    check->add_flag("--quick", check_options.quick, "Reduced grid");
    check->add_option("--inject-upper-bias", check_options.upper_log_bias)->group("");
    add_common(check, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ellperim::kExitUsage;
    }

    const CommandOptions options = [&] {
        auto resolved = resolve(flags);
        resolved.cayley_order = order;
        return resolved;
    }();

    if (*perimeter) {
        return ellperim::cmd_perimeter(a, b, method, options, std::cout, std::cerr);
    }
    if (*bounds) {
        return ellperim::cmd_bounds(a, b, options, std::cout, std::cerr);
    }
    if (*compare) {
        return ellperim::cmd_compare(a, b, options, std::cout, std::cerr);
    }
    if (*sweep) {
        return ellperim::cmd_sweep(sweep_a, b_min, b_max < 0.0 ? sweep_a : b_max, steps, options,
                                   std::cout, std::cerr);
    }
    return ellperim::cmd_check(check_options, options, std::cout, std::cerr);
}
