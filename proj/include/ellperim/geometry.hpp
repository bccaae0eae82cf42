#pragma once

namespace ellperim {

/// Semi-axes of an ellipse with the larger one in `a()`.
///
/// Only obtainable through canonicalize(), so a() >= b() >= 0 and a() > 0
/// hold for every instance.
class EllipseAxes {
public:
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    /// True when the caller passed the axes in (minor, major) order.
    bool swapped() const noexcept { return swapped_; }

    bool is_circle() const noexcept { return a_ == b_; }
    bool is_segment() const noexcept { return b_ == 0.0; }

    friend bool operator==(const EllipseAxes& lhs, const EllipseAxes& rhs) noexcept {
        return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
    }

private:
    EllipseAxes(double a, double b, bool swapped) noexcept : a_(a), b_(b), swapped_(swapped) {}

    friend EllipseAxes canonicalize(double a, double b);

    double a_;
    double b_;
    bool swapped_;
};

/// Dimensionless shape quantities derived from the axis ratio.
struct ShapeParams {
    double e2;  ///< eccentricity squared, 1 - b^2/a^2
    double t;   ///< b^2/a^2 - 1 (= -e2)
    double m;   ///< elliptic parameter (= e2)
    double h;   ///< ((a-b)/(a+b))^2
    double xi;  ///< b/a
};

/// Orders the axes so that a >= b. Throws DomainError on negative,
/// non-finite, or all-zero input.
EllipseAxes canonicalize(double a, double b);

ShapeParams shape_params(const EllipseAxes& axes) noexcept;

}  // namespace ellperim
