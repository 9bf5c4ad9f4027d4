#pragma once

#include <Eigen/Dense>

namespace lien2 {

/// e^M by scaling and squaring with the degree-13 Pade approximant.
/// Scaling brings ||M||_1 / 2^s <= 0.5; relative error well below 1e-11
/// for ||M|| <= 20. Serves as the series oracle for the closed forms.
Eigen::MatrixXd exp_matrix_numeric(const Eigen::MatrixXd& m);

}  // namespace lien2
