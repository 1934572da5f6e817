#pragma once

#include <ostream>

#include "nadon/geometry/metric_field.hpp"

namespace nadon {

// CSV: node, rho, theta, then the r^2 entries row-major as re/im column pairs.
void write_snapshot(std::ostream& out, const MetricField& h);

}  // namespace nadon
