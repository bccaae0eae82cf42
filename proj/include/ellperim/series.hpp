#pragma once

#include "ellperim/geometry.hpp"
#include "ellperim/quadrature.hpp"

namespace ellperim {

struct SeriesSpec {
    int max_terms = 200;
    double term_tol = 1e-16;  ///< stop after two consecutive |term| < term_tol * |partial sum|
};

struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;  ///< terms summed, counting the leading term
    bool converged = false;
    double last_term_magnitude = 0.0;  ///< |last term| / |partial sum|
};

/// (2k - 1)!! as a double, with (-1)!! = 1. Throws OverflowError once the
/// product leaves the double range (k > 150).
double double_factorial_odd(int k);

/// Integral over [0, pi/2] of cos^{2k} phi, by A_k = (2k - 1) / (2k) A_{k-1}.
double cos_moment(int k);

/// k-th coefficient c_k of F(t) = 1 + sum c_k t^k, computed directly from
/// (2k - 3)!! and the moment A_k. Independent of the ratio recurrence used by
/// euler_maclaurin_perimeter.
double euler_maclaurin_coefficient(int k);

/// 2 a pi [1 + sum (-1)^{k+1} ((2k-1)!! / (2^k k!))^2 t^k / (2k - 1)],
/// t = b^2/a^2 - 1. Requires b > 0. Hitting max_terms clears `converged`
/// rather than throwing.
SeriesResult euler_maclaurin_perimeter(const EllipseAxes& axes, const SeriesSpec& spec = {});

/// Gauss series 2F1(p, q; c; x) for |x| < 1. Throws DivergenceError for
/// |x| >= 1 and DomainError when c is zero or a negative integer.
SeriesResult hyp2f1(double p, double q, double c, double x, const SeriesSpec& spec = {});

/// 2 a pi 2F1(-1/2, 1/2; 1; e^2).
SeriesResult maclaurin_perimeter(const EllipseAxes& axes, const SeriesSpec& spec = {});

/// pi (a + b) 2F1(-1/2, -1/2; 1; h), h = ((a - b) / (a + b))^2.
SeriesResult gauss_kummer_perimeter(const EllipseAxes& axes, const SeriesSpec& spec = {});

/// pi sqrt(2 (a^2 + b^2)) 2F1(1/4, -1/4; 1; ((a^2 - b^2) / (a^2 + b^2))^2).
SeriesResult euler_2f1_perimeter(const EllipseAxes& axes, const SeriesSpec& spec = {});

/// Cayley's expansion in powers of (b/a)^2 with ln(4a/b) terms, truncated at
/// (b/a)^order for order in {2, 4, 6}. Requires 0 < b < a.
double cayley_perimeter(const EllipseAxes& axes, int order = 6);

/// Legendre function P_{1/2}(z), z >= 1, from the Laplace integral
/// (1/pi) * integral over [0, pi] of (z + sqrt(z^2 - 1) cos theta)^{1/2}.
double legendre_p_half(double z, const QuadratureSpec& spec = {});

/// 2 pi sqrt(ab) P_{1/2}((a^2 + b^2) / (2ab)). Requires b > 0.
double abbott_perimeter(const EllipseAxes& axes, const QuadratureSpec& spec = {});

}  // namespace ellperim
