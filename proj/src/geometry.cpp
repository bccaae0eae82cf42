#include "ellperim/geometry.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ellperim/errors.hpp"

namespace ellperim {

EllipseAxes canonicalize(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("ellipse axes must be finite");
    }
    if (a < 0.0 || b < 0.0) {
        throw DomainError("ellipse axes must be non-negative");
    }
    if (a == 0.0 && b == 0.0) {
        throw DomainError("at least one ellipse axis must be positive");
    }
    if (a < b) {
        return EllipseAxes(b, a, true);
    }
    return EllipseAxes(a, b, false);
}

ShapeParams shape_params(const EllipseAxes& axes) noexcept {
    const double xi = axes.b() / axes.a();
    // 1 - xi^2 factored so that near-circles keep their relative accuracy.
    const double e2 = (1.0 - xi) * (1.0 + xi);
    const double ratio = (1.0 - xi) / (1.0 + xi);
    return ShapeParams{
        .e2 = e2,
        .t = -e2,
        .m = e2,
        .h = ratio * ratio,
        .xi = xi,
    };
}

}  // namespace ellperim
