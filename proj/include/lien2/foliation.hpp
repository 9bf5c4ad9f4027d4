#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lien2/algebra.hpp"
#include "lien2/coadjoint.hpp"

namespace lien2 {

/// Leaf label: the fibration value. One component (x*_2) for g5_2k, two for
/// the 6+2k types; the second component of g6_2k_1 is exponential, so its
/// log form and sign are kept for stable comparison.
struct LeafId {
  FamilySpec family;
  std::vector<double> value;
  double log_second = 0.0;  // g6_2k_1 only: log|x1| - x4/x2
  int sign_second = 0;      // g6_2k_1 only: sign of x1 (0 when x1 = 0)
};

/// One vector field of a tangent differential system.
struct VectorField {
  enum class Kind {
    Coordinate,     // d/dx_coord
    ExpFlow,        // x*_1 d/dx*_1 + x*_2 d/dx*_4   (type 6+2k,1)
    ParabolicFlow,  // x*_2 d/dx*_1 + x*_1 d/dx*_4   (type 6+2k,2)
  };
  Kind kind = Kind::Coordinate;
  int coord = 0;  // Coordinate only, 0-based

  Eigen::VectorXd eval(const Eigen::VectorXd& p) const;
  std::string label() const;
};

struct TangentSystem {
  FamilySpec family;
  std::vector<VectorField> fields;

  /// n x (4+2k) matrix of field values at p.
  Eigen::MatrixXd frame_at(const Eigen::VectorXd& p) const;
};

/// True iff F lies in V_G = {x*_2 != 0} (threshold zero_tol). Defined for
/// g5_2k, g6_2k_1, g6_2k_2 only.
bool in_foliated_manifold(const LieAlgebra& alg, const Functional& F,
                          double zero_tol = 1e-12);

LeafId leaf_of(const LieAlgebra& alg, const Functional& F,
               double zero_tol = 1e-12);

/// Max relative component distance; the exponential component of g6_2k_1
/// is compared in log domain.
double leaf_distance(const LeafId& a, const LeafId& b);

bool leaf_equal(const LeafId& a, const LeafId& b, double tol = 1e-8);

TangentSystem tangent_system(const LieAlgebra& alg);

/// Max |grad g . v| over the system's fields v and the leaf invariants g
/// (gradients evaluated in scaled form, so no overflow on V_G).
double verify_tangency(const LieAlgebra& alg, const Functional& F,
                       double zero_tol = 1e-12);

/// The homeomorphism between the two 6+2k foliation types:
/// y1 = x1+x4, y4 = [(x1+x4)^2 - x1 e^{-x4/x2}]/(2 x2), other coords fixed.
/// Maps each type-1 leaf onto the type-2 leaf with the same invariant value.
Functional equivalence_h(const Functional& F, double zero_tol = 1e-12);

/// |J(F1) - J(F2)| for the move x, where J is the determinant of the move's
/// differential restricted to the leaf, expressed in the tangent-system
/// frames (QR is used internally and normalized by both R factors, i.e. the
/// volume factor of the generating polyvector field).
double jacobian_constancy(const LieAlgebra& alg, const Eigen::VectorXd& x,
                          const Functional& F1, const Functional& F2);

/// Isomorphism class label of the foliation C*-algebra.
std::string connes_label(const LieAlgebra& alg);

/// 1 for g5_2k, 2 for the 6+2k types.
int foliation_codim(const LieAlgebra& alg);

}  // namespace lien2
