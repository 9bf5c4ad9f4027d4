#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "lien2/algebra.hpp"

namespace lien2 {

/// ad_X in the catalog basis: column j holds the coordinates of [X, X_j].
struct AdMatrix {
  Eigen::MatrixXd mat;
  Eigen::VectorXd source;  // the coordinates x_1..x_n of X
};

struct EigenReport {
  std::vector<std::pair<std::complex<double>, int>> eigenvalues;  // (value, multiplicity)
  bool closed_form_available = false;

  int total_multiplicity() const;
};

/// exp(ad_X); `branch` records which removable-singularity limit was taken
/// ("generic", "x3=0", "x4=0", "x3=x4=0", or "blockwise"/"numeric").
struct ExpAdMatrix {
  Eigen::MatrixXd mat;
  std::string branch;
};

AdMatrix ad_matrix(const LieAlgebra& alg, const Eigen::VectorXd& x);

/// Closed-form spectrum for the non-composite families, numeric eigensolver
/// (closed_form_available = false) for composites.
EigenReport ad_eigenvalues(const LieAlgebra& alg, const Eigen::VectorXd& x);

EigenReport numeric_eigen_report(const Eigen::MatrixXd& m);

/// Greedy nearest matching between two spectra seen as multisets; returns the
/// largest pair distance (eigensolver ordering is unspecified, so both lists
/// are sorted by (re, im) first).
double eigen_multiset_distance(const EigenReport& a, const EigenReport& b);

/// False exactly for g3_3 with lambda = 0 and g4_4 / aff(C); throws
/// UnsupportedFamily for composites.
bool is_exponential(const LieAlgebra& alg);

/// Entry-for-entry closed form of exp(ad_X) for the ten classified families
/// (aff(C) uses the g4_4 entry). Throws UnsupportedFamily otherwise.
ExpAdMatrix exp_ad_closed(const LieAlgebra& alg, const Eigen::VectorXd& x);

/// exp(ad_X) for any algebra: closed form when available, blockwise over
/// direct summands, numeric oracle as the fallback.
Eigen::MatrixXd exp_ad(const LieAlgebra& alg, const Eigen::VectorXd& x);

/// Closed-form adjoint character Tr(exp(ad_X)); throws UnsupportedFamily
/// outside the classified families.
double character_ad(const LieAlgebra& alg, const Eigen::VectorXd& x);

}  // namespace lien2
