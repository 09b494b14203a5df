#pragma once

#include <string>
#include <vector>

namespace eigengap {

// Outcome of one verified claim.  max_violation is signed: a positive
// value means the claim failed by that margin.
struct CheckResult {
    std::string id;
    std::string anchor;
    double max_violation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double worst_t = 0.0;
};

inline CheckResult make_check(std::string id, std::string anchor,
                              double max_violation, double tolerance,
                              double worst_t) {
    CheckResult r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.max_violation = max_violation;
    r.tolerance = tolerance;
    r.pass = max_violation <= tolerance;
    r.worst_t = worst_t;
    return r;
}

// Sample grid on [-pi/2 + excl, pi/2 - excl].
struct GridSpec {
    enum class Spacing { uniform, chebyshev };

    int count = 10000;
    Spacing spacing = Spacing::chebyshev;
    double endpoint_exclusion = 0.0;

    // Monotone list of sample points; throws std::invalid_argument if
    // count < 2 or the exclusion is negative.
    std::vector<double> points() const;
};

}  // namespace eigengap
