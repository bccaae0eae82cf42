#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "ellperim/geometry.hpp"

namespace ellperim {

enum class ApproximationId {
    Kepler,
    Naive,
    Euler,
    Sipos,
    Cesaro,
    Muir,
    PeanoBoussinesq,
    Almkvist,
    Lindner,
    Ramanujan1,
    Ramanujan2,
};

inline constexpr std::array<ApproximationId, 11> kAllApproximations = {
    ApproximationId::Kepler,   ApproximationId::Naive,      ApproximationId::Euler,
    ApproximationId::Sipos,    ApproximationId::Cesaro,     ApproximationId::Muir,
    ApproximationId::PeanoBoussinesq, ApproximationId::Almkvist, ApproximationId::Lindner,
    ApproximationId::Ramanujan1, ApproximationId::Ramanujan2,
};

/// Stable lowercase name used on the command line and in reports.
std::string_view name(ApproximationId id) noexcept;
std::optional<ApproximationId> approximation_from_name(std::string_view name) noexcept;

/// Selects the historically correct Sipos and Ramanujan II formulas
/// (Corrected) or their misprinted variants (AsPrinted). The misprints are
///   Sipos:       2 pi sqrt((a + b)^2 / (sqrt a + sqrt b)^2), i.e. without the
///                outer square, off by about 19% at (2, 1);
///   Ramanujan II: a minus sign in front of 3 (a - b)^2 / (...), off by 5%.
/// Every other formula is the same under both variants.
enum class Transcription { Corrected, AsPrinted };

/// Perimeter estimate from one named closed-form approximation. Throws
/// NonFiniteValue if the result is not finite.
double approximate(ApproximationId id, const EllipseAxes& axes,
                   Transcription variant = Transcription::Corrected);

struct ApproxReport {
    ApproximationId id;
    double value;
    double abs_error;  ///< value - oracle
    double rel_error;  ///< abs_error / oracle
};

/// Evaluates every approximation and orders them by |rel_error|, ties broken
/// by name. Requires oracle > 0.
std::vector<ApproxReport> report_all(const EllipseAxes& axes, double oracle,
                                     Transcription variant = Transcription::Corrected);

}  // namespace ellperim
