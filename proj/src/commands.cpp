#include "ellperim/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "ellperim/bounds.hpp"
#include "ellperim/errors.hpp"
#include "ellperim/geometry.hpp"

namespace ellperim {

namespace {

void add_meta(Document& doc, std::string_view command, const CommandOptions& options) {
    doc.meta.emplace_back("version", std::string(kVersion));
    doc.meta.emplace_back("command", std::string(command));
    doc.meta.emplace_back("quadrature_abs_tol", options.quadrature.abs_tol);
    doc.meta.emplace_back("quadrature_rel_tol", options.quadrature.rel_tol);
    doc.meta.emplace_back("quadrature_max_depth", static_cast<long long>(options.quadrature.max_depth));
    doc.meta.emplace_back("agm_tol", options.agm.tol);
    doc.meta.emplace_back("series_term_tol", options.series.term_tol);
    doc.meta.emplace_back("series_max_terms", static_cast<long long>(options.series.max_terms));
}

void add_axes_meta(Document& doc, const EllipseAxes& axes) {
    doc.meta.emplace_back("a", axes.a());
    doc.meta.emplace_back("b", axes.b());
    doc.meta.emplace_back("swapped", axes.swapped());
}

// Runs a command body, mapping library errors onto the exit-code contract.
template <class Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitFailure;
}

}  // namespace

std::vector<SweepRow> sweep_rows(double a, double b_min, double b_max, int steps,
                                 const AgmSpec& agm) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("sweep requires a > 0");
    }
    if (!(b_min >= 0.0) || !(b_min < b_max) || !(b_max <= a)) {
        throw DomainError("sweep requires 0 <= b-min < b-max <= a");
    }
    if (steps < 2) {
        throw DomainError("sweep requires at least 2 steps");
    }
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    const double span = b_max - b_min;
    for (int i = 0; i < steps; ++i) {
        const double b = (i == steps - 1) ? b_max : b_min + span * i / (steps - 1);
        const auto axes = canonicalize(a, b);
        const double perimeter = perimeter_agm(axes, agm);
        rows.push_back(SweepRow{
            .b = b,
            .f1 = quarter_upper_linear(axes),
            .f2 = quarter_upper_log(axes),
            .oracle = perimeter / 4.0,
            .upper_linear = upper_linear(axes),
            .upper_log = upper_log(axes),
            .perimeter = perimeter,
        });
    }
    return rows;
}

std::vector<std::string> perimeter_methods() {
    std::vector<std::string> methods = {"agm",        "quadrature", "euler-maclaurin",
                                        "maclaurin",  "gauss-kummer", "euler-2f1",
                                        "cayley",     "abbott"};
    for (const auto id : kAllApproximations) {
        methods.emplace_back(name(id));
    }
    return methods;
}

int cmd_perimeter(double a, double b, std::string_view method, const CommandOptions& options,
                  std::ostream& out, std::ostream& err) {
    const auto approximation = approximation_from_name(method);
    const std::vector<std::string> known = perimeter_methods();
    if (std::find(known.begin(), known.end(), method) == known.end()) {
        err << "usage error: unknown method '" << method << "'\n";
        return kExitUsage;
    }
    return guarded(err, [&] {
        const auto axes = canonicalize(a, b);
        Document doc;
        add_meta(doc, "perimeter", options);
        add_axes_meta(doc, axes);

        std::optional<SeriesResult> series;
        double value = 0.0;
        if (method == "agm") {
            value = perimeter_agm(axes, options.agm);
        } else if (method == "quadrature") {
            value = perimeter_quadrature(axes, options.quadrature);
        } else if (method == "euler-maclaurin") {
            series = euler_maclaurin_perimeter(axes, options.series);
        } else if (method == "maclaurin") {
            series = maclaurin_perimeter(axes, options.series);
        } else if (method == "gauss-kummer") {
            series = gauss_kummer_perimeter(axes, options.series);
        } else if (method == "euler-2f1") {
            series = euler_2f1_perimeter(axes, options.series);
        } else if (method == "cayley") {
            value = cayley_perimeter(axes, options.cayley_order);
        } else if (method == "abbott") {
            value = abbott_perimeter(axes, options.quadrature);
        } else {
            value = approximate(*approximation, axes, options.transcription);
        }

        if (series) {
            doc.columns = {"method", "a", "b", "value", "terms_used", "converged"};
            doc.add_row({std::string(method), axes.a(), axes.b(), series->value,
                         static_cast<long long>(series->terms_used), series->converged});
        } else {
            doc.columns = {"method", "a", "b", "value"};
            doc.add_row({std::string(method), axes.a(), axes.b(), value});
        }
        render(doc, options.format, out);
        return static_cast<int>(kExitSuccess);
    });
}

int cmd_bounds(double a, double b, const CommandOptions& options, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&] {
        const auto axes = canonicalize(a, b);
        const auto bracket = bound_bracket(axes);
        const double oracle = perimeter_agm(axes, options.agm);
        // Where the oracle sits in the certified interval; 0 when it collapses.
        const double width = bracket.width();
        const double position = width > 0.0 ? (oracle - bracket.certified_lower) / width : 0.0;

        Document doc;
        add_meta(doc, "bounds", options);
        add_axes_meta(doc, axes);
        doc.meta.emplace_back("oracle_inside", bracket.contains(oracle));
        doc.columns = {"quantity", "value"};
        doc.add_row({std::string("lower_geometric"), bracket.lower_geometric});
        doc.add_row({std::string("lower_arithmetic"), bracket.lower_arithmetic});
        doc.add_row({std::string("oracle"), oracle});
        doc.add_row({std::string("upper_log"), bracket.upper_log});
        doc.add_row({std::string("upper_linear"), bracket.upper_linear});
        doc.add_row({std::string("certified_lower"), bracket.certified_lower});
        doc.add_row({std::string("certified_upper"), bracket.certified_upper});
        doc.add_row({std::string("oracle_position"), position});
        render(doc, options.format, out);
        return static_cast<int>(kExitSuccess);
    });
}

int cmd_compare(double a, double b, const CommandOptions& options, std::ostream& out,
                std::ostream& err) {
    return guarded(err, [&] {
        const auto axes = canonicalize(a, b);
        const double oracle = perimeter_agm(axes, options.agm);
        const auto reports = report_all(axes, oracle, options.transcription);

        Document doc;
        add_meta(doc, "compare", options);
        add_axes_meta(doc, axes);
        doc.meta.emplace_back("oracle", oracle);
        doc.meta.emplace_back("as_printed", options.transcription == Transcription::AsPrinted);
        doc.columns = {"rank", "id", "value", "abs_error", "rel_error"};
        long long rank = 1;
        for (const auto& report : reports) {
            doc.add_row({rank++, std::string(name(report.id)), report.value, report.abs_error,
                         report.rel_error});
        }
        render(doc, options.format, out);
        return static_cast<int>(kExitSuccess);
    });
}

int cmd_sweep(double a, double b_min, double b_max, int steps, const CommandOptions& options,
              std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto rows = sweep_rows(a, b_min, b_max, steps, options.agm);
        Document doc;
        add_meta(doc, "sweep", options);
        doc.meta.emplace_back("a", a);
        doc.meta.emplace_back("b_min", b_min);
        doc.meta.emplace_back("b_max", b_max);
        doc.meta.emplace_back("steps", static_cast<long long>(steps));
        doc.columns = {"b", "f1", "f2", "oracle", "upper_linear", "upper_log", "perimeter"};
        for (const auto& row : rows) {
            doc.add_row({row.b, row.f1, row.f2, row.oracle, row.upper_linear, row.upper_log,
                         row.perimeter});
        }
        render(doc, options.format, out);
        return static_cast<int>(kExitSuccess);
    });
}

int cmd_check(const CheckOptions& check, const CommandOptions& options, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        const auto outcomes = run_check_suite(check);
        Document doc;
        add_meta(doc, "check", options);
        doc.meta.emplace_back("quick", check.quick);
        doc.columns = {"property", "passed", "cases", "worst", "limit", "detail"};
        bool all_passed = true;
        for (const auto& outcome : outcomes) {
            all_passed = all_passed && outcome.passed;
            doc.add_row({outcome.name, outcome.passed, outcome.cases, outcome.worst, outcome.limit,
                         outcome.detail});
        }
        doc.meta.emplace_back("all_passed", all_passed);
        render(doc, options.format, out);
        if (!all_passed) {
            for (const auto& outcome : outcomes) {
                if (!outcome.passed) {
                    err << "property failed: " << outcome.name << " at " << outcome.detail << '\n';
                }
            }
        }
        return static_cast<int>(all_passed ? kExitSuccess : kExitFailure);
    });
}

}  // namespace ellperim
