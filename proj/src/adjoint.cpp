#include "lien2/adjoint.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "lien2/errors.hpp"
#include "lien2/expm.hpp"

namespace lien2 {

namespace {

// Exact-zero test for the removable-singularity branches.
constexpr double kBranchZero = 1e-13;

// (e^t - 1)/t, stable through t = 0.
double phi1(double t) { return t == 0.0 ? 1.0 : std::expm1(t) / t; }

// sin(t)/t.
double sinc(double t) {
  if (std::abs(t) < 1e-4) return 1.0 - t * t / 6.0;
  return std::sin(t) / t;
}

// (cos(t) - 1)/t = -2 sin^2(t/2)/t.
double cosm1_over(double t) {
  if (t == 0.0) return 0.0;
  const double s = std::sin(0.5 * t);
  return -2.0 * s * s / t;
}

// (t e^t - e^t + 1)/t^2 with limit 1/2; series below 1e-2 to dodge the
// cancellation in the direct form.
double q_g43(double t) {
  if (std::abs(t) < 1e-2)
    return 0.5 + t * (1.0 / 3.0 + t * (1.0 / 8.0 + t * (1.0 / 30.0 + t / 144.0)));
  const double e = std::exp(t);
  return (t * e - e + 1.0) / (t * t);
}

int expected_k(const FamilySpec& spec) { return spec.k; }

}  // namespace

int EigenReport::total_multiplicity() const {
  int total = 0;
  for (const auto& [value, mult] : eigenvalues) total += mult;
  return total;
}

AdMatrix ad_matrix(const LieAlgebra& alg, const Eigen::VectorXd& x) {
  if (x.size() != alg.n()) throw DimensionMismatch("ad_matrix: |x| != n");
  const int n = alg.n();
  AdMatrix ad;
  ad.source = x;
  ad.mat = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    // column j = coordinates of [X, X_j]
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0.0) continue;
      for (int k = 0; k < n; ++k) ad.mat(k, j) += x[i] * alg.c(i, j, k);
    }
  }
  return ad;
}

EigenReport numeric_eigen_report(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  EigenReport report;
  report.closed_form_available = false;
  for (int i = 0; i < solver.eigenvalues().size(); ++i)
    report.eigenvalues.emplace_back(solver.eigenvalues()[i], 1);
  return report;
}

EigenReport ad_eigenvalues(const LieAlgebra& alg, const Eigen::VectorXd& x) {
  if (x.size() != alg.n()) throw DimensionMismatch("ad_eigenvalues: |x| != n");
  const FamilySpec& spec = alg.spec();
  if (spec.composite()) return numeric_eigen_report(ad_matrix(alg, x).mat);

  const int n = alg.n();
  const double lam = spec.lambda;
  EigenReport report;
  report.closed_form_available = true;
  using C = std::complex<double>;
  switch (spec.table_family()) {
    case Family::G3_1:
      report.eigenvalues = {{C(0.0), 1}, {C(x[2]), 1}, {C(lam * x[2]), 1}};
      break;
    case Family::G3_2:
      report.eigenvalues = {{C(0.0), 1}, {C(x[2]), 2}};
      break;
    case Family::G3_3:
      report.eigenvalues = {{C(0.0), 1},
                            {C(lam * x[2], x[2]), 1},
                            {C(lam * x[2], -x[2]), 1}};
      break;
    case Family::G4_1:
      report.eigenvalues = {{C(0.0), 3}, {C(x[2]), 1}};
      break;
    case Family::G4_2:
      report.eigenvalues = {{C(0.0), 4}};
      break;
    case Family::G4_3:
      report.eigenvalues = {{C(0.0), 2}, {C(x[3]), 2}};
      break;
    case Family::G4_4:
      report.eigenvalues = {{C(0.0), 2}, {C(x[3], x[2]), 1}, {C(x[3], -x[2]), 1}};
      break;
    case Family::G5_2k:
      report.eigenvalues = {{C(0.0), n}};
      break;
    case Family::G6_2k_1:
      report.eigenvalues = {{C(0.0), n - 1}, {C(x[2]), 1}};
      break;
    case Family::G6_2k_2:
      report.eigenvalues = {{C(0.0), n}};
      break;
    case Family::AffR:
      report.eigenvalues = {{C(0.0), 1}, {C(x[0]), 1}};
      break;
    case Family::Heisenberg:
    case Family::Abelian:
      report.eigenvalues = {{C(0.0), n}};
      break;
    default:
      return numeric_eigen_report(ad_matrix(alg, x).mat);
  }
  return report;
}

double eigen_multiset_distance(const EigenReport& a, const EigenReport& b) {
  std::vector<std::complex<double>> xs, ys;
  for (const auto& [v, mult] : a.eigenvalues)
    for (int i = 0; i < mult; ++i) xs.push_back(v);
  for (const auto& [v, mult] : b.eigenvalues)
    for (int i = 0; i < mult; ++i) ys.push_back(v);
  if (xs.size() != ys.size()) return std::numeric_limits<double>::infinity();
  auto by_re_im = [](const std::complex<double>& p, const std::complex<double>& q) {
    if (p.real() != q.real()) return p.real() < q.real();
    return p.imag() < q.imag();
  };
  std::sort(xs.begin(), xs.end(), by_re_im);
  std::sort(ys.begin(), ys.end(), by_re_im);
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    worst = std::max(worst, std::abs(xs[i] - ys[i]));
  return worst;
}

bool is_exponential(const LieAlgebra& alg) {
  const FamilySpec& spec = alg.spec();
  if (spec.composite())
    throw UnsupportedFamily("is_exponential: composite algebras not covered");
  switch (spec.table_family()) {
    case Family::G3_3:
      return spec.lambda != 0.0;
    case Family::G4_4:
      return false;
    default:
      return true;
  }
}

ExpAdMatrix exp_ad_closed(const LieAlgebra& alg, const Eigen::VectorXd& x) {
  if (x.size() != alg.n()) throw DimensionMismatch("exp_ad_closed: |x| != n");
  const FamilySpec& spec = alg.spec();
  if (!spec.classified())
    throw UnsupportedFamily("exp_ad_closed: no closed form for " + spec.tag());

  const int n = alg.n();
  ExpAdMatrix out;
  out.branch = "generic";
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  const double lam = spec.lambda;

  switch (spec.table_family()) {
    case Family::G3_1: {
      double p, q, e1, e2;
      if (std::abs(x[2]) < kBranchZero) {
        out.branch = "x3=0";
        p = 1.0;
        q = lam;
        e1 = e2 = 1.0;
      } else {
        p = phi1(x[2]);
        q = lam * phi1(lam * x[2]);  // = (e^{lam x3} - 1)/x3
        e1 = std::exp(x[2]);
        e2 = std::exp(lam * x[2]);
      }
      m(0, 0) = e1;
      m(1, 1) = e2;
      m(0, 2) = -x[0] * p;
      m(1, 2) = -x[1] * q;
      break;
    }
    case Family::G3_2: {
      double p, e;
      if (std::abs(x[2]) < kBranchZero) {
        out.branch = "x3=0";
        p = 1.0;
        e = 1.0;
      } else {
        p = phi1(x[2]);
        e = std::exp(x[2]);
      }
      m(0, 0) = e;
      m(0, 1) = x[2] * e;
      m(0, 2) = -x[0] * p - x[1] * e;
      m(1, 1) = e;
      m(1, 2) = -x[1] * p;
      break;
    }
    case Family::G3_3: {
      double p, q, ec, es;
      if (std::abs(x[2]) < kBranchZero) {
        out.branch = "x3=0";
        p = 1.0;
        q = lam;
        ec = 1.0;
        es = 0.0;
      } else {
        const double e = std::exp(lam * x[2]);
        ec = e * std::cos(x[2]);
        es = e * std::sin(x[2]);
        p = e * sinc(x[2]);
        q = e * cosm1_over(x[2]) + lam * phi1(lam * x[2]);
      }
      m(0, 0) = ec;
      m(0, 1) = es;
      m(0, 2) = -x[1] * p - x[0] * q;
      m(1, 0) = -es;
      m(1, 1) = ec;
      m(1, 2) = x[0] * p - x[1] * q;
      break;
    }
    case Family::G4_1: {
      double p, e;
      if (std::abs(x[2]) < kBranchZero) {
        out.branch = "x3=0";
        p = 1.0;
        e = 1.0;
      } else {
        p = phi1(x[2]);
        e = std::exp(x[2]);
      }
      m(0, 0) = e;
      m(0, 2) = -x[0] * p;
      m(1, 2) = -x[3];
      m(1, 3) = x[2];
      break;
    }
    case Family::G4_2: {
      m(0, 1) = x[2];
      m(0, 2) = -0.5 * x[2] * x[3] - x[1];
      m(0, 3) = 0.5 * x[2] * x[2];
      m(1, 2) = -x[3];
      m(1, 3) = x[2];
      break;
    }
    case Family::G4_3: {
      double p, q, e;
      if (std::abs(x[3]) < kBranchZero) {
        out.branch = "x4=0";
        p = 1.0;
        q = 0.5;
        e = 1.0;
      } else {
        p = phi1(x[3]);
        q = q_g43(x[3]);
        e = std::exp(x[3]);
      }
      m(0, 0) = e;
      m(0, 1) = x[2] * e;
      m(0, 2) = -x[1] * p;
      m(0, 3) = -x[0] * p - x[1] * x[2] * q;
      m(1, 1) = e;
      m(1, 3) = -x[1] * p;
      break;
    }
    case Family::G4_4: {
      const double r2 = x[2] * x[2] + x[3] * x[3];
      double p, q, ec, es;
      if (r2 < 1e-26) {
        out.branch = "x3=x4=0";
        p = -x[1];
        q = -x[0];
        ec = 1.0;
        es = 0.0;
      } else {
        const double e = std::exp(x[3]);
        ec = e * std::cos(x[2]);
        es = e * std::sin(x[2]);
        const double u = x[0] * x[2] + x[1] * x[3];
        const double v = x[0] * x[3] - x[1] * x[2];
        p = ((1.0 - ec) * u + es * v) / r2;
        q = ((1.0 - ec) * v - es * u) / r2;
      }
      m(0, 0) = ec;
      m(0, 1) = es;
      m(0, 2) = p;
      m(0, 3) = q;
      m(1, 0) = -es;
      m(1, 1) = ec;
      m(1, 2) = -q;
      m(1, 3) = p;
      break;
    }
    case Family::G5_2k: {
      m(0, 2) = -x[3];
      m(0, 3) = x[2];
      m(1, 0) = x[2];
      m(1, 2) = -0.5 * x[2] * x[3] - x[0];
      m(1, 3) = 0.5 * x[2] * x[2] - x[4];
      m(1, 4) = x[3];
      for (int i = 1; i <= expected_k(spec); ++i) {
        m(1, 3 + 2 * i) = -x[4 + 2 * i];
        m(1, 4 + 2 * i) = x[3 + 2 * i];
      }
      break;
    }
    case Family::G6_2k_1: {
      double p, e;
      if (std::abs(x[2]) < kBranchZero) {
        out.branch = "x3=0";
        p = 1.0;
        e = 1.0;
      } else {
        p = phi1(x[2]);
        e = std::exp(x[2]);
      }
      m(0, 0) = e;
      m(0, 2) = -x[0] * p;
      m(1, 2) = -x[3];
      m(1, 3) = x[2];
      for (int i = 0; i <= expected_k(spec); ++i) {
        m(1, 4 + 2 * i) = -x[5 + 2 * i];
        m(1, 5 + 2 * i) = x[4 + 2 * i];
      }
      break;
    }
    case Family::G6_2k_2: {
      m(0, 2) = -x[3];
      m(0, 3) = x[2];
      m(1, 0) = x[2];
      m(1, 2) = -0.5 * x[2] * x[3] - x[0];
      m(1, 3) = 0.5 * x[2] * x[2];
      for (int i = 0; i <= expected_k(spec); ++i) {
        m(1, 4 + 2 * i) = -x[5 + 2 * i];
        m(1, 5 + 2 * i) = x[4 + 2 * i];
      }
      break;
    }
    default:
      throw UnsupportedFamily("exp_ad_closed: " + spec.tag());
  }
  out.mat = std::move(m);
  return out;
}

Eigen::MatrixXd exp_ad(const LieAlgebra& alg, const Eigen::VectorXd& x) {
  const FamilySpec& spec = alg.spec();
  if (spec.classified()) return exp_ad_closed(alg, x).mat;
  if (spec.composite()) {
    const int n = alg.n();
    Eigen::MatrixXd out = Eigen::MatrixXd::Identity(n, n);
    int offset = 0;
    for (const auto& part_spec : spec.parts) {
      const LieAlgebra part = LieAlgebra::build(part_spec);
      const int d = part.n();
      out.block(offset, offset, d, d) = exp_ad(part, x.segment(offset, d));
      offset += d;
    }
    return out;
  }
  return exp_matrix_numeric(ad_matrix(alg, x).mat);
}

double character_ad(const LieAlgebra& alg, const Eigen::VectorXd& x) {
  if (x.size() != alg.n()) throw DimensionMismatch("character_ad: |x| != n");
  const FamilySpec& spec = alg.spec();
  const double lam = spec.lambda;
  switch (spec.table_family()) {
    case Family::G3_1:
      return std::exp(x[2]) + std::exp(lam * x[2]) + 1.0;
    case Family::G3_2:
      return 2.0 * std::exp(x[2]) + 1.0;
    case Family::G3_3:
      return 2.0 * std::exp(lam * x[2]) * std::cos(x[2]) + 1.0;
    case Family::G4_1:
      return std::exp(x[2]) + 3.0;
    case Family::G4_2:
      return 4.0;
    case Family::G4_3:
      return 2.0 * std::exp(x[3]) + 2.0;
    case Family::G4_4:
      return 2.0 * std::exp(x[3]) * std::cos(x[2]) + 2.0;
    case Family::G5_2k:
      return 5.0 + 2.0 * spec.k;
    case Family::G6_2k_1:
      return std::exp(x[2]) + 5.0 + 2.0 * spec.k;
    case Family::G6_2k_2:
      return 6.0 + 2.0 * spec.k;
    default:
      throw UnsupportedFamily("character_ad: no closed form for " + spec.tag());
  }
}

}  // namespace lien2
