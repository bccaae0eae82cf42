#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ellperim/approximations.hpp"
#include "ellperim/check.hpp"
#include "ellperim/elliptic.hpp"
#include "ellperim/quadrature.hpp"
#include "ellperim/report.hpp"
#include "ellperim/series.hpp"

namespace ellperim {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitFailure = 1,  ///< domain error or failed property
    kExitUsage = 2,
};

struct CommandOptions {
    OutputFormat format = OutputFormat::Table;
    QuadratureSpec quadrature{};
    AgmSpec agm{};
    SeriesSpec series{};
    Transcription transcription = Transcription::Corrected;
    int cayley_order = 6;
};

/// One sample of the upper-bound comparison at fixed a. The first three
/// value columns are quarter-arc lengths, the rest full perimeters.
struct SweepRow {
    double b;
    double f1;      ///< a + pi b / 4
    double f2;      ///< quarter of upper_log
    double oracle;  ///< quarter-arc length a E(e^2)
    double upper_linear;
    double upper_log;
    double perimeter;
};

/// Rows at b_min + i (b_max - b_min) / (steps - 1), i = 0 .. steps - 1.
/// Requires 0 <= b_min < b_max <= a and steps >= 2.
std::vector<SweepRow> sweep_rows(double a, double b_min, double b_max, int steps,
                                 const AgmSpec& agm = {});

/// Names accepted by `perimeter --method`, in help order.
std::vector<std::string> perimeter_methods();

int cmd_perimeter(double a, double b, std::string_view method, const CommandOptions& options,
                  std::ostream& out, std::ostream& err);
int cmd_bounds(double a, double b, const CommandOptions& options, std::ostream& out,
               std::ostream& err);
int cmd_compare(double a, double b, const CommandOptions& options, std::ostream& out,
                std::ostream& err);
int cmd_sweep(double a, double b_min, double b_max, int steps, const CommandOptions& options,
              std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& check, const CommandOptions& options, std::ostream& out,
              std::ostream& err);

}  // namespace ellperim
