#pragma once

#include <iosfwd>
#include <string>

#include "cmsdisc/measures.hpp"

namespace cmsdisc {

struct MeasureLoadResult {
    DiscreteMeasure measure;
    bool weight_sum_warning;  // input weights deviated from 1 by more than 1e-6
};

// CSV with header "position,weight" (line) or "theta,weight" (circle); weights
// are normalized on load. Throws std::runtime_error on malformed input.
MeasureLoadResult load_measure(const std::string& path);

void save_measure(const DiscreteMeasure& mu, const std::string& path);

}  // namespace cmsdisc
