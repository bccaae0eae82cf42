#include "ellperim/approximations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ellperim/errors.hpp"

namespace ellperim {

namespace {

constexpr double kPi = std::numbers::pi;

double evaluate(ApproximationId id, double a, double b, Transcription variant) {
    const double sum = a + b;
    const double diff = a - b;
    const double ra = std::sqrt(a);
    const double rb = std::sqrt(b);
    switch (id) {
        case ApproximationId::Kepler:
            return 2.0 * kPi * std::sqrt(a * b);
        case ApproximationId::Naive:
            return kPi * sum;
        case ApproximationId::Euler:
            return 2.0 * kPi * std::sqrt((a * a + b * b) / 2.0);
        case ApproximationId::Sipos: {
            const double root_sum = ra + rb;
            if (variant == Transcription::AsPrinted) {
                return 2.0 * kPi * std::sqrt(sum * sum / (root_sum * root_sum));
            }
            return 2.0 * kPi * sum * sum / (root_sum * root_sum);
        }
        case ApproximationId::Cesaro:
            return kPi * sum + kPi / 4.0 * diff * diff / sum;
        case ApproximationId::Muir:
            return 2.0 * kPi * std::pow((a * ra + b * rb) / 2.0, 2.0 / 3.0);
        case ApproximationId::PeanoBoussinesq:
            return kPi * (1.5 * sum - std::sqrt(a * b));
        case ApproximationId::Almkvist: {
            const double root_diff = ra - rb;
            const double root_sum = ra + rb;
            const double numerator = 2.0 * sum * sum - std::pow(root_diff, 4);
            const double denominator =
                root_sum * root_sum + 2.0 * std::sqrt(2.0 * sum) * std::sqrt(ra * rb);
            return 2.0 * kPi * numerator / denominator;
        }
        case ApproximationId::Lindner: {
            const double ratio = diff / sum;
            const double factor = 1.0 + ratio * ratio / 8.0;
            return kPi * sum * factor * factor;
        }
        case ApproximationId::Ramanujan1:
            return kPi * (3.0 * sum - std::sqrt((3.0 * a + b) * (a + 3.0 * b)));
        case ApproximationId::Ramanujan2: {
            const double correction =
                3.0 * diff * diff / (10.0 * sum + std::sqrt(a * a + 14.0 * a * b + b * b));
            if (variant == Transcription::AsPrinted) {
                return kPi * (sum - correction);
            }
            return kPi * (sum + correction);
        }
    }
    throw DomainError("unknown approximation id");
}

}  // namespace

std::string_view name(ApproximationId id) noexcept {
    switch (id) {
        case ApproximationId::Kepler: return "kepler";
        case ApproximationId::Naive: return "naive";
        case ApproximationId::Euler: return "euler";
        case ApproximationId::Sipos: return "sipos";
        case ApproximationId::Cesaro: return "cesaro";
        case ApproximationId::Muir: return "muir";
        case ApproximationId::PeanoBoussinesq: return "peano-boussinesq";
        case ApproximationId::Almkvist: return "almkvist";
        case ApproximationId::Lindner: return "lindner";
        case ApproximationId::Ramanujan1: return "ramanujan1";
        case ApproximationId::Ramanujan2: return "ramanujan2";
    }
    return "unknown";
}

std::optional<ApproximationId> approximation_from_name(std::string_view text) noexcept {
    for (const auto id : kAllApproximations) {
        if (name(id) == text) {
            return id;
        }
    }
    return std::nullopt;
}

double approximate(ApproximationId id, const EllipseAxes& axes, Transcription variant) {
    const double value = evaluate(id, axes.a(), axes.b(), variant);
    if (!std::isfinite(value)) {
        throw NonFiniteValue(std::string(name(id)) + " produced a non-finite value");
    }
    return value;
}

std::vector<ApproxReport> report_all(const EllipseAxes& axes, double oracle,
                                     Transcription variant) {
    if (!(oracle > 0.0) || !std::isfinite(oracle)) {
        throw DomainError("oracle perimeter must be positive and finite");
    }
    std::vector<ApproxReport> reports;
    reports.reserve(kAllApproximations.size());
    for (const auto id : kAllApproximations) {
        const double value = approximate(id, axes, variant);
        const double abs_error = value - oracle;
        reports.push_back({id, value, abs_error, abs_error / oracle});
    }
    std::sort(reports.begin(), reports.end(), [](const ApproxReport& l, const ApproxReport& r) {
        const double el = std::abs(l.rel_error);
        const double er = std::abs(r.rel_error);
        if (el != er) {
            return el < er;
        }
        return name(l.id) < name(r.id);
    });
    return reports;
}

}  // namespace ellperim
