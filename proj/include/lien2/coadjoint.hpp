#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lien2/algebra.hpp"

namespace lien2 {

/// Point of the dual space in the dual basis X*_1..X*_n.
struct Functional {
  Eigen::VectorXd f;

  int n() const { return static_cast<int>(f.size()); }
};

enum class OrbitKind {
  Trivial,
  HalfPlane,
  Plane,
  Cylinder,
  ParabolicCylinder,
  HalfSpace,
  Hyperplane,
  OpenDense,
};

std::string orbit_kind_name(OrbitKind kind);

/// Which case of the orbit classification applies (split on f1, f2).
enum class OrbitStratum {
  Trivial,        // f1 = f2 = 0
  F1Only,         // f1 != 0 = f2
  F2Only,         // f2 != 0 = f1
  Generic,        // f1 != 0 != f2 (families that distinguish it)
};

struct SignConstraint {
  int coord = 0;  // 0-based dual coordinate
  int sign = 0;   // required sign of x*_coord (+1 / -1)
};

/// Orbit kind, dimension and defining data of the classified orbit.
/// fixed_coords and invariant_values are the orbit's defining closed forms
/// evaluated at the base point; sign constraints are preserved exactly by
/// the coadjoint action.
struct OrbitDescriptor {
  FamilySpec family;
  OrbitKind kind = OrbitKind::Trivial;
  OrbitStratum stratum = OrbitStratum::Trivial;
  int dim = 0;
  std::map<std::string, double> invariant_values;
  std::map<int, double> fixed_coords;  // 0-based coordinate -> value
  std::vector<SignConstraint> sign_constraints;
  Functional base;

  std::vector<std::string> constraint_strings() const;
};

/// F -> F.exp(ad_X) (row-vector action); composites go through the generic
/// exponential dispatcher.
Functional coadjoint_move(const LieAlgebra& alg, const Functional& F,
                          const Eigen::VectorXd& x);

/// B_ij = <F, [X_i, X_j]> = sum_k C[i][j][k] f_k; exactly skew-symmetric.
Eigen::MatrixXd kirillov_form(const LieAlgebra& alg, const Functional& F);

/// rank of the Kirillov form (singular values below rank_tol * sigma_max
/// count as zero); rounded down to even with a warning on odd raw rank.
int orbit_dimension(const LieAlgebra& alg, const Functional& F,
                    double rank_tol = 1e-9);

/// Classification per the case split on (f1, f2); zero_tol is the threshold
/// under which a coordinate is treated as exactly zero.
OrbitDescriptor orbit_classify(const LieAlgebra& alg, const Functional& F,
                               double zero_tol = 1e-12);

/// The defining closed forms of the classified orbit evaluated at F.
/// Throws BranchUndefined when an invariant's branch condition fails.
std::map<std::string, double> orbit_invariants(const LieAlgebra& alg,
                                               const Functional& F,
                                               double zero_tol = 1e-12);

/// Max relative drift of the descriptor's defining forms evaluated at p.
/// Exponential invariants are compared in log-domain, the spiral invariant
/// modulo its period.
double invariant_drift(const OrbitDescriptor& desc, const Functional& p);

/// True iff every sign constraint of the descriptor holds strictly at p.
bool signs_preserved(const OrbitDescriptor& desc, const Functional& p);

/// count points F.exp(ad_{x_i}) for seeded x_i with coordinates uniform in
/// [-3,3]; per-sample derived seeds make the result order-independent.
std::vector<Functional> sample_orbit(const LieAlgebra& alg, const Functional& F,
                                     int count, std::uint64_t seed);

}  // namespace lien2
