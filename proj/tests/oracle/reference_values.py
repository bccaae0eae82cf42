"""High-precision reference values frozen into the C++ tests.

Independent of the library: every value here comes from mpmath at 40 digits
(ellipe, quad, hyp2f1, legenp). Re-run to regenerate; output is the list of
constants pasted into tests/reference_values.hpp.
"""
from mpmath import mp, mpf, ellipe, quad, sqrt, pi, log, cos, sin, hyp2f1, legenp

mp.dps = 40


def perimeter(a, b):
    a, b = mpf(a), mpf(b)
    return 4 * a * ellipe(1 - (b / a) ** 2)


def cayley(a, b, order):
    a, b = mpf(a), mpf(b)
    L = log(4 * a / b)
    k2 = (b / a) ** 2
    s = 1 + mpf(1) / 2 * (L - mpf(1) / 2) * k2
    if order >= 4:
        s += mpf(3) / 16 * (L - 1 - mpf(1) / 12) * k2 ** 2
    if order >= 6:
        s += mpf(45) / 384 * (L - 1 - mpf(2) / 12 - mpf(1) / 30) * k2 ** 3
    return 4 * a * s


def J(x):
    x = mpf(x)
    return quad(lambda p: 1 / (x + sin(p)), [0, min(x, mpf(1) / 10), pi / 2])


def K(x):
    x = mpf(x)
    return quad(lambda p: cos(p) ** 2 / (x + sin(p)), [0, min(x, mpf(1) / 10), pi / 2])


values = {
    "kPerimeter2_1": perimeter(2, 1),
    "kPerimeter1_0p5": perimeter(1, "0.5"),
    "kPerimeter1p5_1p4": perimeter("1.5", "1.4"),
    "kPerimeter1_0p1": perimeter(1, "0.1"),
    "kPerimeter1_0p01": perimeter(1, "0.01"),
    "kPerimeter1_0p05": perimeter(1, "0.05"),
    "kSqrtOnePlus3Cos2": quad(lambda p: sqrt(1 + 3 * cos(p) ** 2), [0, pi / 2]),
    "kEllipE0p75": ellipe(mpf("0.75")),
    "kFminus0p75": 2 / pi * ellipe(mpf("0.75")),
    "kF3": 4 / pi * ellipe(mpf("0.75")),
    "kF1": 2 / pi * sqrt(2) * ellipe(mpf("0.5")),
    "kJ0p5": J("0.5"),
    "kJ0p99": J("0.99"),
    "kK0p5": K("0.5"),
    "kK1em6": K("1e-6"),
    "kUpperLog2_1": 8 + sqrt(3) * log(2 + sqrt(3)) + pi / 2 - 2,
    "kRamanujan1_2_1": pi * (9 - sqrt(35)),
    "kRamanujan2_2_1": pi * (3 + 3 / (30 + sqrt(33))),
    "kRamanujan2Printed_2_1": pi * (3 - 3 / (30 + sqrt(33))),
    "kSiposCorrected_2_1": 2 * pi * 9 / (sqrt(2) + 1) ** 2,
    "kSiposPrinted_2_1": 2 * pi * 3 / (sqrt(2) + 1),
    "kHypMinusHalfHalf_1_9": hyp2f1(mpf(-1) / 2, mpf(1) / 2, 1, mpf(1) / 9),
    "kHypMinusHalfMinusHalf_1_9": hyp2f1(mpf(-1) / 2, mpf(-1) / 2, 1, mpf(1) / 9),
    "kHypQuarter_0p36": hyp2f1(mpf(1) / 4, mpf(-1) / 4, 1, mpf("0.36")),
    "kLegendreHalf1p25": legenp(mpf(1) / 2, 0, mpf("1.25"), type=3),
    "kLegendreHalf5p05": legenp(mpf(1) / 2, 0, mpf("5.05"), type=3),
    "kCayley6_1_0p1": cayley(1, "0.1", 6),
    "kCayley6_1_0p5": cayley(1, "0.5", 6),
    "kSweepF1": 2 + pi / 4 * sqrt(3),
    "kSweepF2": 2 + mpf(3) / 4 * (log(3 / sqrt(3)) + pi / 2 * sqrt(3) - 2),
    "kSweepQuarter": perimeter(2, sqrt(3)) / 4,
}

for name, v in values.items():
    print(f"inline constexpr double {name} = {mp.nstr(v, 20)};")
