#include "ellperim/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ellperim/errors.hpp"

namespace ellperim {

namespace {

void validate(const AgmSpec& spec) {
    if (!(spec.tol > 0.0) || spec.max_iter < 4) {
        throw DomainError("invalid AGM spec");
    }
}

}  // namespace

std::vector<AgmStep> agm_iterates(double x, double y, const AgmSpec& spec) {
    validate(spec);
    if (!(x > 0.0) || !(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
        throw DomainError("AGM requires x > 0 and y >= 0");
    }
    std::vector<AgmStep> steps;
    double a = x;
    double g = y;
    double c = std::sqrt(std::abs((x - y) * (x + y)));
    steps.push_back({a, g, c});
    for (int n = 0; n < spec.max_iter; ++n) {
        if (c <= spec.tol * a) {
            return steps;
        }
        const double next_a = 0.5 * (a + g);
        // c_{n+1} = c_n^2 / (4 a_{n+1}) decays quadratically without the
        // rounding floor of (a_n - g_n) / 2.
        c = c * c / (4.0 * next_a);
        g = std::sqrt(a * g);
        a = next_a;
        steps.push_back({a, g, c});
    }
    if (c <= spec.tol * a) {
        return steps;
    }
    throw ConvergenceError("AGM did not converge in " + std::to_string(spec.max_iter) +
                           " iterations");
}

double agm_E_complement(double m_complement, const AgmSpec& spec) {
    validate(spec);
    if (!(m_complement >= 0.0) || !(m_complement <= 1.0)) {
        throw DomainError("E(m) requires 0 <= m <= 1");
    }
    if (m_complement == 0.0) {
        return 1.0;
    }
    const double m = 1.0 - m_complement;
    const auto steps = agm_iterates(1.0, std::sqrt(m_complement), spec);

    // E = K (1 - sum 2^{n-1} c_n^2) with c_0^2 = m.
    double sum = 0.5 * m;
    double weight = 0.5;
    for (std::size_t n = 1; n < steps.size(); ++n) {
        weight *= 2.0;
        sum += weight * steps[n].gap * steps[n].gap;
    }
    const double k = std::numbers::pi / (2.0 * steps.back().arithmetic);
    return k * (1.0 - sum);
}

double agm_E(double m, const AgmSpec& spec) {
    if (!(m >= 0.0) || !(m <= 1.0)) {
        throw DomainError("E(m) requires 0 <= m <= 1");
    }
    return agm_E_complement(1.0 - m, spec);
}

double perimeter_agm(const EllipseAxes& axes, const AgmSpec& spec) {
    const double xi = axes.b() / axes.a();
    return 4.0 * axes.a() * agm_E_complement(xi * xi, spec);
}

double F_closed(double t, const AgmSpec& spec) {
    if (!(t >= -1.0) || !std::isfinite(t)) {
        throw DomainError("F(t) requires finite t >= -1");
    }
    constexpr double two_over_pi = 2.0 / std::numbers::pi;
    if (t <= 0.0) {
        return two_over_pi * agm_E_complement(1.0 + t, spec);
    }
    // 1 + t cos^2 = (1 + t)(1 - (t / (1 + t)) sin^2)
    const double complement = 1.0 / (1.0 + t);
    return two_over_pi * std::sqrt(1.0 + t) * agm_E_complement(complement, spec);
}

double landen_residual(double t, const AgmSpec& spec) {
    if (!(t > -1.0) || !std::isfinite(t)) {
        throw DomainError("Landen identity requires t > -1");
    }
    const double image = -t / (1.0 + t);
    return std::abs(F_closed(t, spec) - std::sqrt(1.0 + t) * F_closed(image, spec));
}

double F_asymptotic(double t) {
    return 2.0 / std::numbers::pi * std::sqrt(t);
}

}  // namespace ellperim
