#include "nadon/geometry/snapshot.hpp"

#include <iomanip>

namespace nadon {

void write_snapshot(std::ostream& out, const MetricField& h) {
  const int r = h.rank();
  out << "node,rho,theta";
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out << ",re_" << i << j << ",im_" << i << j;
  out << '\n' << std::setprecision(17);
  for (std::size_t n = 0; n < h.grid().size(); ++n) {
    const auto& node = h.grid()[n];
    out << n << ',' << node.rho << ',' << node.theta;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out << ',' << h[n](i, j).real() << ',' << h[n](i, j).imag();
    out << '\n';
  }
}

}  // namespace nadon
