#pragma once

#include <string>
#include <utility>
#include <vector>

namespace relspin {

/// One evaluated sample of a check: named numeric inputs plus its residual.
struct SampleRecord {
    std::vector<std::pair<std::string, std::vector<double>>> inputs;
    double residual = 0.0;
};

/**
 * Aggregated result of an invariance/covariance check. The invariant
 * passed == (max_residual <= tolerance) is maintained by make_check_report.
 */
struct CheckReport {
    std::string check;
    double tolerance = 0.0;
    double max_residual = 0.0;
    bool passed = false;
    std::vector<SampleRecord> samples;
    std::vector<std::pair<std::string, std::string>> metadata;
};

CheckReport make_check_report(std::string name, double tolerance, std::vector<SampleRecord> samples,
                              std::vector<std::pair<std::string, std::string>> metadata = {});

}  // namespace relspin
