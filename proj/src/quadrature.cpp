#include "ellperim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "ellperim/errors.hpp"

namespace ellperim {

namespace {

// Kronrod abscissae on [-1, 1]; odd entries are the Gauss-7 nodes.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;
    int depth;

    bool operator<(const Panel& other) const noexcept { return error < other.error; }
};

class PanelEvaluator {
public:
    explicit PanelEvaluator(const Integrand& f) : f_(f) {}

    Panel evaluate(double lo, double hi, int depth) {
        const double center = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);

        double fv1[7];
        double fv2[7];
        const double fc = sample(center);
        double kronrod = kKronrodWeights[7] * fc;
        double gauss = kGaussWeights[3] * fc;
        double abs_kronrod = std::abs(kronrod);
        for (int j = 0; j < 7; ++j) {
            const double dx = half * kNodes[j];
            fv1[j] = sample(center - dx);
            fv2[j] = sample(center + dx);
            const double pair = fv1[j] + fv2[j];
            kronrod += kKronrodWeights[j] * pair;
            abs_kronrod += kKronrodWeights[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
            if (j % 2 == 1) {
                gauss += kGaussWeights[j / 2] * pair;
            }
        }

        // QUADPACK-style scaling of the raw Gauss/Kronrod difference.
        const double mean = 0.5 * kronrod;
        double asc = kKronrodWeights[7] * std::abs(fc - mean);
        for (int j = 0; j < 7; ++j) {
            asc += kKronrodWeights[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
        }
        const double scale = std::abs(half);
        const double result = kronrod * half;
        const double resabs = abs_kronrod * scale;
        const double resasc = asc * scale;
        double error = std::abs((kronrod - gauss) * half);
        if (resasc != 0.0 && error != 0.0) {
            error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
        }
        constexpr double eps = std::numeric_limits<double>::epsilon();
        if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
            error = std::max(50.0 * eps * resabs, error);
        }
        return Panel{lo, hi, result, error, depth};
    }

    int evaluations() const noexcept { return evaluations_; }

private:
    double sample(double x) {
        ++evaluations_;
        const double y = f_(x);
        if (!std::isfinite(y)) {
            throw NonFiniteValue("integrand is not finite at x = " + std::to_string(x));
        }
        return y;
    }

    const Integrand& f_;
    int evaluations_ = 0;
};

}  // namespace

QuadratureResult integrate(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
    const double ends[2] = {lo, hi};
    return integrate(f, std::span<const double>(ends), spec);
}

QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints,
                           const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol >= 0.0) || spec.max_depth < 1) {
        throw DomainError("invalid quadrature spec");
    }
    if (breakpoints.size() < 2) {
        throw DomainError("integration needs at least two breakpoints");
    }
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!std::isfinite(breakpoints[i]) || (i > 0 && !(breakpoints[i - 1] < breakpoints[i]))) {
            throw DomainError("integration breakpoints must be finite and strictly increasing");
        }
    }

    PanelEvaluator evaluator(f);
    std::priority_queue<Panel> panels;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        const Panel panel = evaluator.evaluate(breakpoints[i - 1], breakpoints[i], 0);
        value += panel.value;
        error += panel.error;
        panels.push(panel);
    }
    const auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(value)); };

    while (error > target()) {
        const Panel worst = panels.top();
        if (worst.depth >= spec.max_depth) {
            throw BudgetExhausted("quadrature reached depth " + std::to_string(spec.max_depth) +
                                  " with error estimate " + std::to_string(error));
        }
        panels.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const Panel left = evaluator.evaluate(worst.lo, mid, worst.depth + 1);
        const Panel right = evaluator.evaluate(mid, worst.hi, worst.depth + 1);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the drift accumulated by the running updates.
    value = 0.0;
    error = 0.0;
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    return QuadratureResult{value, error, evaluator.evaluations()};
}

std::vector<double> graded_mesh(double lo, double hi, double scale) {
    std::vector<double> mesh = {lo};
    if (scale > 0.0) {
        for (double step = scale; step < (hi - lo) / 4.0; step *= 4.0) {
            mesh.push_back(lo + step);
        }
    }
    mesh.push_back(hi);
    return mesh;
}

double perimeter_quadrature(const EllipseAxes& axes, const QuadratureSpec& spec) {
    const double a = axes.a();
    const double b = axes.b();
    const auto integrand = [a, b](double phi) {
        return std::hypot(a * std::sin(phi), b * std::cos(phi));
    };
    // Near phi = 0 the integrand behaves like sqrt(a^2 phi^2 + b^2): a kink of width b/a.
    const auto mesh = graded_mesh(0.0, std::numbers::pi / 2, b / a);
    return 4.0 * integrate(integrand, mesh, spec).value;
}

double F_numeric(double t, const QuadratureSpec& spec) {
    if (!(t >= -1.0) || !std::isfinite(t)) {
        throw DomainError("F(t) requires t >= -1");
    }
    const auto integrand = [t](double phi) {
        const double c = std::cos(phi);
        return std::sqrt(std::max(0.0, 1.0 + t * c * c));
    };
    // For t close to -1 the integrand is sqrt(sin^2 + (1 + t) cos^2) near phi = 0.
    const double kink = t < 0.0 ? std::sqrt(1.0 + t) : 0.0;
    const auto mesh = graded_mesh(0.0, std::numbers::pi / 2, kink);
    return 2.0 / std::numbers::pi * integrate(integrand, mesh, spec).value;
}

double J_numeric(double xi, const QuadratureSpec& spec) {
    if (!(xi > 0.0) || !(xi <= 1.0)) {
        throw DomainError("J(xi) requires 0 < xi <= 1");
    }
    const auto integrand = [xi](double phi) { return 1.0 / (xi + std::sin(phi)); };
    return integrate(integrand, graded_mesh(0.0, std::numbers::pi / 2, xi), spec).value;
}

double K_numeric(double xi, const QuadratureSpec& spec) {
    if (!(xi > 0.0) || !(xi <= 1.0)) {
        throw DomainError("K(xi) requires 0 < xi <= 1");
    }
    const auto integrand = [xi](double phi) {
        const double c = std::cos(phi);
        return c * c / (xi + std::sin(phi));
    };
    return integrate(integrand, graded_mesh(0.0, std::numbers::pi / 2, xi), spec).value;
}

}  // namespace ellperim
