#include "ellperim/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellperim/errors.hpp"

namespace ellperim {

namespace {

constexpr double kPi = std::numbers::pi;

// ln((1 + s) / xi) with s = sqrt(1 - xi^2). Written as log1p of
// (1 - xi + s) / xi, which has no cancellation for any xi in (0, 1].
double log_term(double xi, double s) {
    return std::log1p(((1.0 - xi) + s) / xi);
}

double complement_root(double xi) {
    return std::sqrt((1.0 - xi) * (1.0 + xi));
}

}  // namespace

double lower_geometric(const EllipseAxes& axes) noexcept {
    return 2.0 * kPi * std::sqrt(axes.a() * axes.b());
}

double lower_arithmetic(const EllipseAxes& axes) noexcept {
    return kPi * (axes.a() + axes.b());
}

double upper_linear(const EllipseAxes& axes) noexcept {
    return 4.0 * axes.a() + kPi * axes.b();
}

double J_closed(double xi) {
    if (!(xi > 0.0) || !(xi < 1.0)) {
        throw DomainError("closed-form J(xi) requires 0 < xi < 1");
    }
    const double s = complement_root(xi);
    return log_term(xi, s) / s;
}

double K_closed(double xi) {
    if (!(xi > 0.0) || !(xi <= 1.0)) {
        throw DomainError("closed-form K(xi) requires 0 < xi <= 1");
    }
    const double s = complement_root(xi);
    return xi * kPi / 2.0 - 1.0 + s * log_term(xi, s);
}

double upper_log(const EllipseAxes& axes) noexcept {
    const double a = axes.a();
    const double b = axes.b();
    if (b == 0.0) {
        return 4.0 * a;
    }
    if (a == b) {
        return 2.0 * kPi * a;
    }
    // sqrt(a^2 - b^2) as sqrt((a - b)(a + b)); the log argument minus one is
    // (a - b + d) / b, so log1p never sees a cancelled difference.
    const double d = std::sqrt((a - b) * (a + b));
    const double xi = b / a;
    const double bracket = d * std::log1p((a - b + d) / b) + kPi / 2.0 * b - a;
    return 4.0 * a + 4.0 * xi * xi * bracket;
}

double quarter_upper_linear(const EllipseAxes& axes) noexcept {
    return axes.a() + kPi / 4.0 * axes.b();
}

double quarter_upper_log(const EllipseAxes& axes) noexcept {
    return upper_log(axes) / 4.0;
}

BoundBracket bound_bracket(const EllipseAxes& axes) noexcept {
    BoundBracket bracket{};
    bracket.lower_geometric = lower_geometric(axes);
    bracket.lower_arithmetic = lower_arithmetic(axes);
    bracket.upper_linear = upper_linear(axes);
    bracket.upper_log = upper_log(axes);
    bracket.certified_lower = std::max(bracket.lower_geometric, bracket.lower_arithmetic);
    bracket.certified_upper = std::min(bracket.upper_linear, bracket.upper_log);
    return bracket;
}

}  // namespace ellperim
