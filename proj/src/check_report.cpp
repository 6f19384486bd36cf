#include "relspin/check_report.hpp"

#include <algorithm>

namespace relspin {

CheckReport make_check_report(std::string name, double tolerance, std::vector<SampleRecord> samples,
                              std::vector<std::pair<std::string, std::string>> metadata) {
    CheckReport r;
    r.check = std::move(name);
    r.tolerance = tolerance;
    r.samples = std::move(samples);
    r.metadata = std::move(metadata);
    r.max_residual = 0.0;
    for (const auto& s : r.samples) r.max_residual = std::max(r.max_residual, s.residual);
    r.passed = r.max_residual <= r.tolerance;
    return r;
}

}  // namespace relspin
