#pragma once

#include <string>
#include <vector>

namespace ellperim {

struct CheckOptions {
    bool quick = false;
    /// Shrinks upper_log by this relative amount inside the sandwich property.
    /// Only used to prove the harness can fail.
    double upper_log_bias = 0.0;
};

struct PropertyOutcome {
    std::string name;
    bool passed = true;
    long long cases = 0;
    double worst = 0.0;   ///< largest measure seen (property specific)
    double limit = 0.0;   ///< the measure must stay at or below this
    std::string detail;   ///< offending input of the first failure, or empty
};

/// Runs the invariant grid: cross-oracle agreement, the bound sandwich, the
/// Landen identity, the large-t asymptote, closed forms against quadrature,
/// series against the oracle, approximation circle exactness and the
/// figure-sweep ordering.
std::vector<PropertyOutcome> run_check_suite(const CheckOptions& options = {});

}  // namespace ellperim
