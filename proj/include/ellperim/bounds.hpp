#pragma once

#include "ellperim/geometry.hpp"

namespace ellperim {

/// Every perimeter bound for one ellipse, plus the tightest interval they
/// certify.
struct BoundBracket {
    double lower_geometric;
    double lower_arithmetic;
    double upper_linear;
    double upper_log;
    double certified_lower;  ///< max of the two lower bounds
    double certified_upper;  ///< min of the two upper bounds

    bool contains(double perimeter) const noexcept {
        return certified_lower <= perimeter && perimeter <= certified_upper;
    }
    double width() const noexcept { return certified_upper - certified_lower; }
};

/// 2 pi sqrt(ab): the circle of equal area has the smallest perimeter.
double lower_geometric(const EllipseAxes& axes) noexcept;

/// pi (a + b), from concavity of the square root.
double lower_arithmetic(const EllipseAxes& axes) noexcept;

/// 4a + pi b.
double upper_linear(const EllipseAxes& axes) noexcept;

/// Closed form of the integral over [0, pi/2] of 1 / (xi + sin phi),
/// ln((1 + sqrt(1 - xi^2)) / xi) / sqrt(1 - xi^2). Requires 0 < xi < 1; the
/// removable limit 1 at xi = 1 is deliberately not returned.
double J_closed(double xi);

/// Closed form of the integral over [0, pi/2] of cos^2 phi / (xi + sin phi),
/// xi pi / 2 - 1 + sqrt(1 - xi^2) ln((1 + sqrt(1 - xi^2)) / xi), for
/// 0 < xi <= 1.
double K_closed(double xi);

/// 4a + 4 (b/a)^2 [ sqrt(a^2 - b^2) ln((a + sqrt(a^2 - b^2)) / b) + pi b / 2 - a ].
///
/// Exact at both ends: 4a for the segment b = 0 and 2 pi a for the circle.
double upper_log(const EllipseAxes& axes) noexcept;

/// Quarter-arc forms of the two upper bounds, a + pi b / 4 and upper_log / 4.
double quarter_upper_linear(const EllipseAxes& axes) noexcept;
double quarter_upper_log(const EllipseAxes& axes) noexcept;

BoundBracket bound_bracket(const EllipseAxes& axes) noexcept;

}  // namespace ellperim
