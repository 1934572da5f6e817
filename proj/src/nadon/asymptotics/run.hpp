#pragma once

#include <ostream>
#include <vector>

#include "nadon/asymptotics/renormalization.hpp"
#include "nadon/geometry/quadrature.hpp"

namespace nadon {

struct RunOptions {
  int path_nodes = 32;             // Gauss-Legendre nodes per t interval
  double interior_radius = 0.9;    // nodes used for the limit positivity check
  double condition_limit = 1e16;   // DivergedMetric beyond this
  bool renormalize = true;
  FrameMetric frame_metric = FrameMetric::Round;
  bool subgeodesic_probe = false;
};

struct FunctionalTrace {
  std::vector<double> t;
  std::vector<double> m1, m2, mdon;
  std::vector<double> dist;
  std::vector<double> offdiag_sup;   // sup over regular nodes of the off-diagonal blocks of hhat
  std::vector<double> min_eig;       // min eigenvalue of hhat over interior nodes
  std::vector<double> reconstruction_error;  // relative, sup over regular nodes
  std::vector<double> subgeodesic_min;        // min eigenvalue of d_t(h^{-1} d_t h), if probed
  std::size_t singular_nodes = 0;
};

// Runs the 1-PS over an increasing t grid starting at 0. M^Don(h_t, h_0) is
// accumulated interval by interval along the 1-PS itself (path independence),
// with analytic FS curvature.
FunctionalTrace run_1ps(const BergmanOneParameterSubgroup& ops, const SheafInvariants& invariants,
                        const std::vector<double>& t_grid, const QuadratureGrid& grid,
                        const RunOptions& options = {});

void write_trace_csv(std::ostream& out, const FunctionalTrace& trace);

std::vector<double> uniform_t_grid(double t_max, double step);

}  // namespace nadon
