#pragma once

#include <Eigen/Dense>
#include <functional>

#include "nadon/geometry/quadrature.hpp"

namespace nadon {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline CMatrix hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

// f applied to the eigenvalues of a hermitian matrix.
CMatrix hermitian_function(const CMatrix& a, const std::function<double(double)>& f);
CMatrix hermitian_sqrt(const CMatrix& a);
CMatrix hermitian_inv_sqrt(const CMatrix& a);
CMatrix hermitian_log(const CMatrix& a);
CMatrix hermitian_exp(const CMatrix& a);

bool is_positive_definite(const CMatrix& a);
double condition_number(const CMatrix& a);  // of a hermitian positive matrix

// Eigenvalues lambda of a1 x = lambda a0 x for hermitian a1 and positive a0.
RVector generalized_eigenvalues(const CMatrix& a1, const CMatrix& a0);

}  // namespace nadon
