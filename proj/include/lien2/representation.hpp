#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "lien2/algebra.hpp"

namespace lien2 {

/// Finite-dimensional representation given by the images of the basis vectors.
struct Representation {
  LieAlgebra algebra;
  int degree = 0;
  std::vector<Eigen::MatrixXd> images;  // one d x d matrix per basis vector
  std::string label;
  std::optional<bool> faithful;  // certificate slot, filled by verify_faithful

  Eigen::MatrixXd image_of(const Eigen::VectorXd& x) const;
};

/// Linear map between algebras as a coordinate matrix (codomain x domain).
struct LinearMap {
  LieAlgebra domain;
  LieAlgebra codomain;
  Eigen::MatrixXd matrix;

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const { return matrix * x; }
};

enum class MuRule {
  TrivialCenterAdjoint,  // adjoint faithful, degree n
  Nilpotent3Step,        // degree n+1 bound, no construction exposed
  CenterHeisenberg,      // (pi.phi)(+)ad route, degree 3n/2+1
  DirectSumAdditivity,   // mu(A(+)B) <= mu(A)+mu(B)
};

/// Bounds on the minimal faithful degree, with exact values where known.
struct MuReport {
  int upper_bound = 0;
  std::optional<int> exact_known;
  MuRule rule_applied = MuRule::TrivialCenterAdjoint;
  std::optional<int> mu_z;  // minimal degree faithful on the center
  bool construction_available = false;
  std::string note;
};

std::string mu_rule_name(MuRule rule);

/// Degree m+2 faithful representation of h_{2m+1}; first row carries the
/// x-coefficients and the corner z, last column the y-coefficients.
Representation heisenberg_rep(int m);

/// The homomorphism onto h_{n-1} for g4_1 / g6_2k_1: X1 -> 0, X2 -> z,
/// X_{3+2i} -> x_{i+1}, X_{4+2i} -> y_{i+1}.
LinearMap build_phi(const LieAlgebra& alg);

/// Images X_i -> pi(phi(X_i)); degree n/2+1, injective on span{X2}.
Representation compose_rep(const Representation& pi, const LinearMap& phi);

Representation direct_sum_rep(const Representation& r1, const Representation& r2);

Representation adjoint_rep(const LieAlgebra& alg);

/// Adjoint for trivial-center algebras, (pi.phi)(+)ad for g4_1/g6_2k_1;
/// throws UnsupportedFamily where no construction is exposed (3-step
/// nilpotent families report a bound only, via mu_report).
Representation faithful_rep(const LieAlgebra& alg);

/// max over basis pairs of ||r([Xi,Xj]) - [r(Xi), r(Xj)]||_F.
double verify_homomorphism(const LieAlgebra& alg, const Representation& r);

/// Defect of the defining property for a linear map between algebras.
double homomorphism_defect(const LinearMap& map);

/// Rank test: the n vectorized images must be linearly independent
/// (SVD threshold 1e-9 * sigma_max).
bool verify_faithful(const LieAlgebra& alg, const Representation& r);

MuReport mu_report(const LieAlgebra& alg);

/// Tr(exp(sum x_i images_i)) via the numeric exponential.
double character(const Representation& r, const Eigen::VectorXd& x);

}  // namespace lien2
