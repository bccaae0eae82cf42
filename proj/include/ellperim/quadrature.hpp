#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ellperim/geometry.hpp"

namespace ellperim {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 60;  ///< maximum number of bisections of any one panel
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
    int evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7-point Gauss / 15-point Kronrod quadrature.
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate drops below max(abs_tol, rel_tol * |value|). Throws
/// BudgetExhausted when that panel is already max_depth bisections deep,
/// NonFiniteValue if the integrand returns NaN or infinity, and DomainError
/// for an empty interval or an invalid spec.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureSpec& spec = {});

/// Same, starting from the panels delimited by `breakpoints` (strictly
/// increasing, at least two points) under one shared error budget.
QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints,
                           const QuadratureSpec& spec = {});

/// Breakpoints lo, lo + scale, lo + 4 scale, lo + 16 scale, ..., hi. An
/// integrand whose only feature is a kink of width `scale` at `lo` is
/// invisible to a panel much wider than the kink; grading the initial mesh
/// lets the error estimate see it.
std::vector<double> graded_mesh(double lo, double hi, double scale);

/// Full perimeter as four times the quarter-arc length integral.
double perimeter_quadrature(const EllipseAxes& axes, const QuadratureSpec& spec = {});

/// (2/pi) * integral over [0, pi/2] of sqrt(1 + t cos^2 phi). Requires t >= -1.
double F_numeric(double t, const QuadratureSpec& spec = {});

/// integral over [0, pi/2] of 1 / (xi + sin phi). Requires 0 < xi <= 1.
double J_numeric(double xi, const QuadratureSpec& spec = {});

/// integral over [0, pi/2] of cos^2 phi / (xi + sin phi). Requires 0 < xi <= 1.
double K_numeric(double xi, const QuadratureSpec& spec = {});

}  // namespace ellperim
