#include "lien2/algebra.hpp"

#include <cmath>

#include "lien2/errors.hpp"

namespace lien2 {

namespace {

// In-place reduced row echelon form; returns pivot columns. Rows with no
// entry above tol are dropped.
std::vector<int> rref(Eigen::MatrixXd& a, double tol) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    double best_abs = tol;
    for (int i = r; i < rows; ++i) {
      if (std::abs(a(i, c)) > best_abs) {
        best_abs = std::abs(a(i, c));
        best = i;
      }
    }
    if (best < 0) continue;
    a.row(r).swap(a.row(best));
    a.row(r) /= a(r, c);
    for (int i = 0; i < rows; ++i) {
      if (i != r && a(i, c) != 0.0) a.row(i) -= a(i, c) * a.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  a.conservativeResize(r, cols);
  return pivots;
}

}  // namespace

bool Subspace::contains(const Eigen::VectorXd& v, double tol) const {
  Eigen::VectorXd rem = v;
  for (const auto& b : basis) {
    rem -= (b.dot(rem) / b.squaredNorm()) * b;
  }
  return rem.norm() <= tol * (1.0 + v.norm());
}

Subspace span_of(int ambient_dim, const std::vector<Eigen::VectorXd>& vectors,
                 double pivot_tol) {
  Subspace s;
  s.ambient_dim = ambient_dim;
  if (vectors.empty()) return s;
  Eigen::MatrixXd a(static_cast<int>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) a.row(static_cast<int>(i)) = vectors[i];
  rref(a, pivot_tol);
  for (int i = 0; i < a.rows(); ++i) s.basis.push_back(a.row(i).transpose());
  return s;
}

void LieAlgebra::add_bracket(int i, int j, int k, double v) {
  c_[((i - 1) * n_ + (j - 1)) * n_ + (k - 1)] = v;
  c_[((j - 1) * n_ + (i - 1)) * n_ + (k - 1)] = -v;
}

void LieAlgebra::build_catalog(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::G3_1:
      add_bracket(3, 1, 1, 1.0);
      add_bracket(3, 2, 2, spec.lambda);
      break;
    case Family::G3_2:
      add_bracket(3, 1, 1, 1.0);
      add_bracket(3, 2, 1, 1.0);
      add_bracket(3, 2, 2, 1.0);
      break;
    case Family::G3_3:
      add_bracket(3, 1, 1, spec.lambda);
      add_bracket(3, 1, 2, -1.0);
      add_bracket(3, 2, 1, 1.0);
      add_bracket(3, 2, 2, spec.lambda);
      break;
    case Family::G4_1:
      add_bracket(3, 1, 1, 1.0);
      add_bracket(3, 4, 2, 1.0);
      break;
    case Family::G4_2:
      add_bracket(3, 2, 1, 1.0);
      add_bracket(3, 4, 2, 1.0);
      break;
    case Family::G4_3:
      add_bracket(3, 2, 1, 1.0);
      add_bracket(4, 1, 1, 1.0);
      add_bracket(4, 2, 2, 1.0);
      break;
    case Family::G4_4:
    case Family::AffC:
      add_bracket(3, 1, 2, -1.0);
      add_bracket(3, 2, 1, 1.0);
      add_bracket(4, 1, 1, 1.0);
      add_bracket(4, 2, 2, 1.0);
      break;
    case Family::G5_2k:
      add_bracket(3, 4, 1, 1.0);
      add_bracket(3, 1, 2, 1.0);
      add_bracket(4, 5, 2, 1.0);
      for (int i = 1; i <= spec.k; ++i) add_bracket(4 + 2 * i, 5 + 2 * i, 2, 1.0);
      break;
    case Family::G6_2k_1:
      add_bracket(3, 1, 1, 1.0);
      add_bracket(3, 4, 2, 1.0);
      for (int i = 0; i < spec.k; ++i) add_bracket(5 + 2 * i, 6 + 2 * i, 2, 1.0);
      // the chain ends at [X_{5+2k}, X_{6+2k}]
      add_bracket(5 + 2 * spec.k, 6 + 2 * spec.k, 2, 1.0);
      break;
    case Family::G6_2k_2:
      add_bracket(3, 4, 1, 1.0);
      add_bracket(3, 1, 2, 1.0);
      for (int i = 0; i < spec.k; ++i) add_bracket(5 + 2 * i, 6 + 2 * i, 2, 1.0);
      add_bracket(5 + 2 * spec.k, 6 + 2 * spec.k, 2, 1.0);
      break;
    case Family::AffR:
      add_bracket(1, 2, 2, 1.0);
      break;
    case Family::Heisenberg:
      for (int i = 1; i <= spec.m; ++i)
        add_bracket(i, spec.m + i, 2 * spec.m + 1, 1.0);
      break;
    case Family::Abelian:
      break;
    default:
      break;
  }
}

LieAlgebra LieAlgebra::build(const FamilySpec& spec) {
  spec.validate();
  if (spec.composite()) {
    LieAlgebra acc = build(spec.parts.front());
    for (std::size_t i = 1; i < spec.parts.size(); ++i)
      acc = direct_sum(acc, build(spec.parts[i]));
    acc.spec_ = spec;
    return acc;
  }
  LieAlgebra alg;
  alg.spec_ = spec;
  alg.n_ = spec.dimension();
  alg.c_.assign(static_cast<std::size_t>(alg.n_) * alg.n_ * alg.n_, 0.0);
  alg.build_catalog(spec);
  return alg;
}

LieAlgebra LieAlgebra::from_structure_constants(const FamilySpec& spec, int n,
                                                std::vector<double> c) {
  if (static_cast<int>(c.size()) != n * n * n)
    throw DimensionMismatch("tensor size must be n^3");
  LieAlgebra alg;
  alg.spec_ = spec;
  alg.n_ = n;
  alg.c_ = std::move(c);
  return alg;
}

LieAlgebra LieAlgebra::direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  LieAlgebra out;
  out.n_ = a.n_ + b.n_;
  out.spec_.family = Family::DirectSum;
  out.spec_.parts = {a.spec_, b.spec_};
  out.c_.assign(static_cast<std::size_t>(out.n_) * out.n_ * out.n_, 0.0);
  const int n = out.n_;
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j)
      for (int k = 0; k < a.n_; ++k)
        out.c_[(i * n + j) * n + k] = a.c(i, j, k);
  for (int i = 0; i < b.n_; ++i)
    for (int j = 0; j < b.n_; ++j)
      for (int k = 0; k < b.n_; ++k)
        out.c_[((a.n_ + i) * n + (a.n_ + j)) * n + (a.n_ + k)] = b.c(i, j, k);
  return out;
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& u,
                                    const Eigen::VectorXd& v) const {
  if (u.size() != n_ || v.size() != n_)
    throw DimensionMismatch("bracket arguments must have length n");
  // Reduce over i<j pairs so [u, u] = 0 holds exactly in floating point.
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double w = u[i] * v[j] - u[j] * v[i];
      if (w == 0.0) continue;
      for (int k = 0; k < n_; ++k) out[k] += w * c(i, j, k);
    }
  return out;
}

Eigen::VectorXd LieAlgebra::bracket_basis(int i, int j) const {
  Eigen::VectorXd out(n_);
  for (int k = 0; k < n_; ++k) out[k] = c(i, j, k);
  return out;
}

double LieAlgebra::antisymmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        worst = std::max(worst, std::abs(c(i, j, k) + c(j, i, k)));
  return worst;
}

double LieAlgebra::jacobi_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int l = 0; l < n_; ++l)
        for (int k = 0; k < n_; ++k) {
          double sum = 0.0;
          for (int m = 0; m < n_; ++m) {
            sum += c(i, j, m) * c(m, l, k) + c(j, l, m) * c(m, i, k) +
                   c(l, i, m) * c(m, j, k);
          }
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

Subspace LieAlgebra::derived_ideal() const {
  std::vector<Eigen::VectorXd> images;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Eigen::VectorXd v = bracket_basis(i, j);
      if (v.cwiseAbs().maxCoeff() > 0.0) images.push_back(v);
    }
  return span_of(n_, images);
}

Subspace LieAlgebra::center() const {
  // v is central iff sum_i C[i][j][k] v_i = 0 for all (j,k).
  Eigen::MatrixXd sys(n_ * n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i) sys(j * n_ + k, i) = c(i, j, k);
  Eigen::MatrixXd r = sys;
  std::vector<int> pivots = rref(r, 1e-10);
  std::vector<bool> is_pivot(n_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Eigen::VectorXd> kernel;
  for (int free = 0; free < n_; ++free) {
    if (is_pivot[free]) continue;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n_);
    v[free] = 1.0;
    for (int row = 0; row < r.rows(); ++row)
      v[pivots[row]] = -r(row, free);
    kernel.push_back(v);
  }
  return span_of(n_, kernel);
}

std::optional<int> LieAlgebra::nilpotency_class() const {
  // g^1 = g, g^{c+1} = [g, g^c]; class c when g^{c+1} = 0.
  std::vector<Eigen::VectorXd> current;
  for (int i = 0; i < n_; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n_);
    e[i] = 1.0;
    current.push_back(e);
  }
  int prev_dim = n_;
  for (int step = 1; step <= n_ + 1; ++step) {
    std::vector<Eigen::VectorXd> images;
    for (int i = 0; i < n_; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n_);
      e[i] = 1.0;
      for (const auto& w : current) {
        Eigen::VectorXd v = bracket(e, w);
        if (v.cwiseAbs().maxCoeff() > 1e-12) images.push_back(v);
      }
    }
    Subspace next = span_of(n_, images);
    if (next.dim() == 0) return step;
    if (next.dim() == prev_dim) return std::nullopt;
    prev_dim = next.dim();
    current = next.basis;
  }
  return std::nullopt;
}

}  // namespace lien2
