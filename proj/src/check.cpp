#include "ellperim/check.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "ellperim/approximations.hpp"
#include "ellperim/bounds.hpp"
#include "ellperim/commands.hpp"
#include "ellperim/elliptic.hpp"
#include "ellperim/geometry.hpp"
#include "ellperim/quadrature.hpp"
#include "ellperim/series.hpp"

namespace ellperim {

namespace {

constexpr std::uint64_t kSandwichSeed = 0x5eed'e11'1b5eULL;

// Accumulates one property. Each case reports a measure that must not exceed
// the property's limit; the largest measure seen is kept for the report.
class Property {
public:
    Property(std::string name, double limit) {
        outcome_.name = std::move(name);
        outcome_.limit = limit;
    }

    void record(double measure, const std::function<std::string()>& where) {
        ++outcome_.cases;
        if (outcome_.cases == 1 || measure > outcome_.worst || std::isnan(measure)) {
            outcome_.worst = measure;
        }
        if (!(measure <= outcome_.limit)) {
            mark_failed(where());
        }
    }

    void fail(const std::string& where) {
        ++outcome_.cases;
        mark_failed(where);
    }

    PropertyOutcome finish() && { return std::move(outcome_); }

private:
    void mark_failed(const std::string& where) {
        if (outcome_.passed) {
            outcome_.passed = false;
            outcome_.detail = where;
        }
    }

    PropertyOutcome outcome_;
};

std::string at_axes(double a, double b) {
    std::ostringstream s;
    s.precision(17);
    s << "(a=" << a << ", b=" << b << ")";
    return s.str();
}

std::string at_value(const char* label, double value) {
    std::ostringstream s;
    s.precision(17);
    s << label << "=" << value;
    return s.str();
}

double relative(double x, double reference) {
    return std::abs(x - reference) / std::abs(reference);
}

// Uniform in [0, 1) from the top 53 bits, identical on every standard library.
double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> grid;
    const double l0 = std::log10(lo);
    const double l1 = std::log10(hi);
    for (int i = 0; i < n; ++i) {
        grid.push_back(i == n - 1 ? hi : std::pow(10.0, l0 + (l1 - l0) * i / (n - 1)));
    }
    return grid;
}

PropertyOutcome cross_oracle(bool quick) {
    Property property("cross_oracle_agm_vs_quadrature", 1e-10);
    for (const double ratio : log_grid(1e-6, 1.0, quick ? 12 : 50)) {
        const auto axes = canonicalize(1.0, ratio);
        const double agm = perimeter_agm(axes);
        const double quad = perimeter_quadrature(axes);
        property.record(relative(agm, quad), [&] { return at_axes(1.0, ratio); });
    }
    return std::move(property).finish();
}

PropertyOutcome sandwich(bool quick, double bias) {
    Property property("sandwich_bounds", 1e-9);
    std::mt19937_64 rng(kSandwichSeed);
    const int samples = quick ? 200 : 1000;
    for (int i = 0; i < samples; ++i) {
        const double a = std::pow(10.0, -3.0 + 6.0 * unit(rng));
        double b = a * std::pow(10.0, -6.0 * unit(rng));
        if (i % 50 == 0) b = 0.0;
        if (i % 50 == 1) b = a;
        const auto axes = canonicalize(a, b);
        const double oracle = perimeter_agm(axes);
        const double geometric = lower_geometric(axes);
        const double arithmetic = lower_arithmetic(axes);
        const double log_bound = upper_log(axes) * (1.0 - bias);
        const double linear = upper_linear(axes);
        // Largest relative excess along the chain geometric <= arithmetic <=
        // oracle <= upper_log <= upper_linear.
        const double violation = std::max({
            (geometric - arithmetic) / oracle,
            (arithmetic - oracle) / oracle,
            (oracle - log_bound) / oracle,
            (log_bound - linear) / oracle,
        });
        property.record(violation, [&] { return at_axes(a, b); });
    }
    return std::move(property).finish();
}

PropertyOutcome landen(bool quick) {
    Property property("landen_identity", 1e-10);
    std::vector<double> ts = {-0.99, -0.5, 0.0, 1.0, 10.0, 1e4};
    if (!quick) {
        ts.insert(ts.end(), {-0.999999, -0.9, -0.1, 0.3, 100.0, 1e6, 1e9});
    }
    for (const double t : ts) {
        property.record(landen_residual(t), [&] { return at_value("t", t); });
    }
    // The same identity with the right-hand side taken from quadrature.
    for (const double t : {-0.5, 3.0}) {
        const double rhs = std::sqrt(1.0 + t) * F_numeric(-t / (1.0 + t));
        property.record(std::abs(F_closed(t) - rhs), [&] { return at_value("t", t); });
    }
    return std::move(property).finish();
}

PropertyOutcome asymptote(bool quick) {
    Property property("asymptote_ratio_minus_one", 1e-4);
    const int top = quick ? 9 : 14;
    for (int p = 6; p <= top; ++p) {
        const double t = std::pow(10.0, p);
        const double ratio = F_closed(t) / F_asymptotic(t);
        property.record(ratio - 1.0, [&] { return at_value("t", t); });
        if (ratio < 1.0) {
            property.fail("ratio below 1 at " + at_value("t", t));
        }
    }
    return std::move(property).finish();
}

std::vector<double> xi_grid(bool quick) {
    std::vector<double> grid = {0.01};
    for (int i = 1; i <= 19; ++i) {
        if (!quick || i % 4 == 0) grid.push_back(0.05 * i);
    }
    grid.push_back(0.99);
    return grid;
}

PropertyOutcome closed_forms(bool quick) {
    Property property("closed_forms_vs_quadrature", 1e-10);
    for (const double xi : xi_grid(quick)) {
        const double dj = std::abs(J_closed(xi) - J_numeric(xi));
        const double dk = std::abs(K_closed(xi) - K_numeric(xi));
        property.record(std::max(dj, dk), [&] { return at_value("xi", xi); });
    }
    return std::move(property).finish();
}

PropertyOutcome k_decomposition(bool quick) {
    Property property("k_decomposition", 1e-12);
    for (const double xi : xi_grid(quick)) {
        const double rebuilt = xi * std::numbers::pi / 2.0 - 1.0 + (1.0 - xi * xi) * J_closed(xi);
        property.record(std::abs(K_closed(xi) - rebuilt),
                        [&] { return at_value("xi", xi); });
    }
    return std::move(property).finish();
}

PropertyOutcome series_agreement(bool quick) {
    Property property("series_vs_oracle", 1e-9);
    std::vector<std::pair<double, double>> points = {{2.0, 1.0}, {1.0, 0.5}, {1.5, 1.4}};
    if (!quick) {
        points.insert(points.end(), {{1.0, 0.3}, {3.0, 2.9}, {1.0, 0.75}, {10.0, 7.0}});
    }
    for (const auto& [a, b] : points) {
        const auto axes = canonicalize(a, b);
        const double oracle = perimeter_agm(axes);
        const auto maclaurin = maclaurin_perimeter(axes);
        const auto gauss_kummer = gauss_kummer_perimeter(axes);
        const double worst = std::max({
            relative(euler_maclaurin_perimeter(axes).value, oracle),
            relative(maclaurin.value, oracle),
            relative(gauss_kummer.value, oracle),
            relative(euler_2f1_perimeter(axes).value, oracle),
            relative(abbott_perimeter(axes), oracle),
        });
        property.record(worst, [&] { return at_axes(a, b); });
        if (gauss_kummer.terms_used >= maclaurin.terms_used) {
            property.fail("gauss-kummer not faster at " + at_axes(a, b));
        }
    }
    return std::move(property).finish();
}

PropertyOutcome circle_exactness() {
    Property property("approximations_exact_on_circle", 1e-12);
    for (const double r : {1.0, 0.37, 12.5}) {
        const auto axes = canonicalize(r, r);
        const double circumference = 2.0 * std::numbers::pi * r;
        for (const auto id : kAllApproximations) {
            property.record(relative(approximate(id, axes), circumference),
                            [&] { return std::string(name(id)) + " " + at_axes(r, r); });
        }
    }
    return std::move(property).finish();
}

PropertyOutcome sweep_ordering(bool quick) {
    Property property("sweep_f2_below_f1", 0.0);
    for (const auto& row : sweep_rows(2.0, 0.01, 2.0, quick ? 50 : 200)) {
        const double violation = std::max(row.f2 - row.f1, row.oracle - row.f2);
        property.record(violation, [&] { return at_value("b", row.b); });
    }
    return std::move(property).finish();
}

PropertyOutcome cayley_truncation() {
    Property property("cayley_truncation", 1e-6);
    const auto far = canonicalize(1.0, 0.1);
    property.record(relative(cayley_perimeter(far, 6), perimeter_agm(far)),
                    [] { return at_axes(1.0, 0.1); });
    const auto near = canonicalize(1.0, 0.01);
    const double oracle = perimeter_agm(near);
    double previous = relative(cayley_perimeter(near, 2), oracle);
    for (const int order : {4, 6}) {
        const double error = relative(cayley_perimeter(near, order), oracle);
        if (!(error < previous)) {
            property.fail("error did not shrink at order " + std::to_string(order));
        }
        previous = error;
    }
    return std::move(property).finish();
}

}  // namespace

std::vector<PropertyOutcome> run_check_suite(const CheckOptions& options) {
    std::vector<PropertyOutcome> outcomes;
    outcomes.push_back(cross_oracle(options.quick));
    outcomes.push_back(sandwich(options.quick, options.upper_log_bias));
    outcomes.push_back(landen(options.quick));
    outcomes.push_back(asymptote(options.quick));
    outcomes.push_back(closed_forms(options.quick));
    outcomes.push_back(k_decomposition(options.quick));
    outcomes.push_back(series_agreement(options.quick));
    outcomes.push_back(circle_exactness());
    outcomes.push_back(sweep_ordering(options.quick));
    outcomes.push_back(cayley_truncation());
    return outcomes;
}

}  // namespace ellperim
