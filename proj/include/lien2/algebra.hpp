#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "lien2/family.hpp"

namespace lien2 {

/// Subspace of R^n in row-reduced (RREF) form. dim 0 keeps an empty basis
/// with the ambient dimension retained.
struct Subspace {
  int ambient_dim = 0;
  std::vector<Eigen::VectorXd> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Eigen::VectorXd& v, double tol = 1e-9) const;
};

/// Row-reduces a list of ambient vectors into a canonical Subspace.
/// Pivot threshold 1e-10; constants here are O(1) so no scaling is needed.
Subspace span_of(int ambient_dim, const std::vector<Eigen::VectorXd>& vectors,
                 double pivot_tol = 1e-10);

/// An algebra given by its structure-constant tensor:
/// [X_i, X_j] = sum_k C[i][j][k] X_k (indices 0-based in code, the catalog's
/// X_1..X_n map to indices 0..n-1).
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Builds a catalog algebra (or composite) with its exact brackets.
  static LieAlgebra build(const FamilySpec& spec);

  /// Wraps a raw tensor (row format c[(i*n+j)*n+k]); no symmetry is enforced.
  static LieAlgebra from_structure_constants(const FamilySpec& spec, int n,
                                             std::vector<double> c);

  static LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

  int n() const { return n_; }
  const FamilySpec& spec() const { return spec_; }
  double c(int i, int j, int k) const { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<double>& tensor() const { return c_; }

  /// Bilinear extension of the tensor: [u, v].
  Eigen::VectorXd bracket(const Eigen::VectorXd& u,
                          const Eigen::VectorXd& v) const;
  /// [X_i, X_j] as a coordinate vector (0-based indices).
  Eigen::VectorXd bracket_basis(int i, int j) const;

  /// max |C[i][j][k] + C[j][i][k]|; 0 for every built tensor.
  double antisymmetry_defect() const;

  /// max over (i,j,l,k) of the Jacobi sum; exactly 0 for catalog algebras.
  double jacobi_defect() const;

  /// Row-reduced span of all [X_i, X_j].
  Subspace derived_ideal() const;

  /// {v : [v, X_j] = 0 for all j}, canonical row-reduced basis.
  Subspace center() const;

  /// Smallest c with the lower central series vanishing at step c+1
  /// (abelian = 1); nullopt when the series stabilizes non-zero.
  std::optional<int> nilpotency_class() const;

 private:
  FamilySpec spec_;
  int n_ = 0;
  std::vector<double> c_;

  // [X_i, X_j] = v X_k with the antisymmetric image, 1-based catalog indices.
  void add_bracket(int i, int j, int k, double v);
  void build_catalog(const FamilySpec& spec);
};

}  // namespace lien2
