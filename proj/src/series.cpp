#include "ellperim/series.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ellperim/errors.hpp"

namespace ellperim {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const SeriesSpec& spec) {
    if (spec.max_terms < 1 || !(spec.term_tol > 0.0)) {
        throw DomainError("invalid series spec");
    }
}

// Sums leading + sum_{k>=1} term_k where term_k = term_{k-1} * ratio(k).
// A term that is exactly zero ends the series: every later term is zero too.
template <class Ratio>
SeriesResult sum_series(double leading, Ratio ratio, const SeriesSpec& spec) {
    validate(spec);
    SeriesResult result;
    result.value = leading;
    result.terms_used = 1;
    result.last_term_magnitude = 1.0;
    double term = leading;
    int small_in_a_row = 0;
    for (int k = 1; k < spec.max_terms; ++k) {
        term *= ratio(k);
        if (term == 0.0) {
            result.converged = true;
            result.last_term_magnitude = 0.0;
            return result;
        }
        result.value += term;
        ++result.terms_used;
        result.last_term_magnitude = std::abs(term / result.value);
        small_in_a_row = result.last_term_magnitude < spec.term_tol ? small_in_a_row + 1 : 0;
        if (small_in_a_row == 2) {
            result.converged = true;
            return result;
        }
    }
    return result;
}

SeriesResult scaled(SeriesResult series, double factor) {
    series.value *= factor;
    return series;
}

}  // namespace

double double_factorial_odd(int k) {
    if (k < 0) {
        throw DomainError("double_factorial_odd requires k >= 0");
    }
    double product = 1.0;
    for (int j = 1; j <= k; ++j) {
        product *= 2.0 * j - 1.0;
        if (!std::isfinite(product)) {
            throw OverflowError("(2k-1)!! overflows a double for k = " + std::to_string(k));
        }
    }
    return product;
}

double cos_moment(int k) {
    if (k < 0) {
        throw DomainError("cos_moment requires k >= 0");
    }
    double moment = kPi / 2.0;
    for (int j = 1; j <= k; ++j) {
        moment *= (2.0 * j - 1.0) / (2.0 * j);
    }
    return moment;
}

double euler_maclaurin_coefficient(int k) {
    if (k < 1) {
        throw DomainError("euler_maclaurin_coefficient requires k >= 1");
    }
    // (-1)^{k+1} (2k-3)!! / (2^k k!) * (2/pi) A_k, with (2k-3)!! = (2(k-1)-1)!!
    double factorial = 1.0;
    for (int j = 2; j <= k; ++j) {
        factorial *= j;
    }
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return sign * double_factorial_odd(k - 1) / (std::ldexp(1.0, k) * factorial) * (2.0 / kPi) *
           cos_moment(k);
}

SeriesResult euler_maclaurin_perimeter(const EllipseAxes& axes, const SeriesSpec& spec) {
    if (axes.b() == 0.0) {
        throw DomainError("Euler-MacLaurin series does not converge usefully at b = 0");
    }
    const double t = shape_params(axes).t;
    // term_k / term_{k-1} = -t ((2k-1)/(2k))^2 (2k-3)/(2k-1), valid from k = 1.
    const auto ratio = [t](int k) {
        const double r = (2.0 * k - 1.0) / (2.0 * k);
        return -t * r * r * (2.0 * k - 3.0) / (2.0 * k - 1.0);
    };
    return scaled(sum_series(1.0, ratio, spec), 2.0 * axes.a() * kPi);
}

SeriesResult hyp2f1(double p, double q, double c, double x, const SeriesSpec& spec) {
    if (!std::isfinite(x) || !(std::abs(x) < 1.0)) {
        throw DivergenceError("2F1 series requires |x| < 1");
    }
    if (c <= 0.0 && c == std::floor(c)) {
        throw DomainError("2F1 parameter c must not be zero or a negative integer");
    }
    const auto ratio = [=](int k) {
        const double n = k - 1.0;
        return (p + n) * (q + n) / ((c + n) * k) * x;
    };
    return sum_series(1.0, ratio, spec);
}

SeriesResult maclaurin_perimeter(const EllipseAxes& axes, const SeriesSpec& spec) {
    const double e2 = shape_params(axes).e2;
    return scaled(hyp2f1(-0.5, 0.5, 1.0, e2, spec), 2.0 * axes.a() * kPi);
}

SeriesResult gauss_kummer_perimeter(const EllipseAxes& axes, const SeriesSpec& spec) {
    const double h = shape_params(axes).h;
    return scaled(hyp2f1(-0.5, -0.5, 1.0, h, spec), kPi * (axes.a() + axes.b()));
}

SeriesResult euler_2f1_perimeter(const EllipseAxes& axes, const SeriesSpec& spec) {
    // Work in the ratio xi = b/a so the argument stays accurate and overflow-free.
    const double xi = shape_params(axes).xi;
    const double xi2 = xi * xi;
    const double ratio = (1.0 - xi) * (1.0 + xi) / (1.0 + xi2);
    const double prefactor = kPi * axes.a() * std::sqrt(2.0 * (1.0 + xi2));
    return scaled(hyp2f1(0.25, -0.25, 1.0, ratio * ratio, spec), prefactor);
}

double cayley_perimeter(const EllipseAxes& axes, int order) {
    if (order != 2 && order != 4 && order != 6) {
        throw DomainError("Cayley order must be 2, 4 or 6");
    }
    const double a = axes.a();
    const double b = axes.b();
    if (b == 0.0) {
        throw DomainError("cayley undefined at b=0 (ln(4a/b) diverges)");
    }
    if (!(b < a)) {
        throw DomainError("cayley requires b < a");
    }
    const double lg = std::log(4.0 * a / b);
    const double k2 = (b / a) * (b / a);
    double sum = 1.0 + 0.5 * (lg - 1.0 / (1.0 * 2.0)) * k2;
    if (order >= 4) {
        sum += (1.0 * 3.0) / (4.0 * 4.0) * (lg - 2.0 / (1.0 * 2.0) - 1.0 / (3.0 * 4.0)) * k2 * k2;
    }
    if (order >= 6) {
        sum += (1.0 * 9.0 * 5.0) / (4.0 * 16.0 * 6.0) *
               (lg - 2.0 / (1.0 * 2.0) - 2.0 / (3.0 * 4.0) - 1.0 / (5.0 * 6.0)) * k2 * k2 * k2;
    }
    return 4.0 * a * sum;
}

double legendre_p_half(double z, const QuadratureSpec& spec) {
    if (!(z >= 1.0) || !std::isfinite(z)) {
        throw DomainError("P_{1/2}(z) requires finite z >= 1");
    }
    if (z == 1.0) {
        return 1.0;
    }
    // With theta -> pi - theta, z + w cos(theta) = (z - w) + 2 w sin^2(theta / 2)
    // and z - w = 1 / (z + w): no cancellation for large z. The integrand then
    // has a kink of width about sqrt(2 (z - w) / w) at theta = 0.
    const double w = std::sqrt((z - 1.0) * (z + 1.0));
    const double base = 1.0 / (z + w);
    const auto integrand = [base, w](double theta) {
        const double s = std::sin(0.5 * theta);
        return std::sqrt(base + 2.0 * w * s * s);
    };
    const auto mesh = graded_mesh(0.0, kPi, std::sqrt(2.0 * base / w));
    return integrate(integrand, mesh, spec).value / kPi;
}

double abbott_perimeter(const EllipseAxes& axes, const QuadratureSpec& spec) {
    const double a = axes.a();
    const double b = axes.b();
    if (b == 0.0) {
        throw DomainError("abbott undefined at b=0 (Legendre argument diverges)");
    }
    const double xi = b / a;
    const double z = (1.0 + xi * xi) / (2.0 * xi);
    return 2.0 * kPi * a * std::sqrt(xi) * legendre_p_half(z, spec);
}

}  // namespace ellperim
