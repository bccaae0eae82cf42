#pragma once

#include <vector>

#include "ellperim/geometry.hpp"

namespace ellperim {

struct AgmSpec {
    double tol = 1e-15;
    int max_iter = 40;
};

/// One step of the arithmetic-geometric mean iteration.
struct AgmStep {
    double arithmetic;
    double geometric;
    double gap;  ///< c_0 = sqrt(x^2 - y^2), then c_n = (a_{n-1} - g_{n-1}) / 2
};

/// The AGM sequence starting from (x, y), including the starting pair.
std::vector<AgmStep> agm_iterates(double x, double y, const AgmSpec& spec = {});

/// Complete elliptic integral of the second kind E(m), 0 <= m <= 1, via the
/// AGM with the Legendre-relation accumulation of c_n^2.
double agm_E(double m, const AgmSpec& spec = {});

/// E expressed through the complementary parameter 1 - m, which keeps full
/// relative accuracy as m approaches 1.
double agm_E_complement(double m_complement, const AgmSpec& spec = {});

/// 4 a E(e^2).
double perimeter_agm(const EllipseAxes& axes, const AgmSpec& spec = {});

/// (2/pi) * integral over [0, pi/2] of sqrt(1 + t cos^2 phi), t >= -1, reduced
/// to E for both signs of t.
double F_closed(double t, const AgmSpec& spec = {});

/// |F(t) - sqrt(1 + t) F(-t / (1 + t))| for t > -1.
double landen_residual(double t, const AgmSpec& spec = {});

/// Large-t asymptote (2/pi) sqrt(t). Not a bound.
double F_asymptotic(double t);

}  // namespace ellperim
