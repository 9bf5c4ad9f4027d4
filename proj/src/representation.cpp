#include "lien2/representation.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "lien2/errors.hpp"
#include "lien2/expm.hpp"
#include "lien2/adjoint.hpp"

namespace lien2 {

std::string mu_rule_name(MuRule rule) {
  switch (rule) {
    case MuRule::TrivialCenterAdjoint: return "trivial_center_adjoint";
    case MuRule::Nilpotent3Step: return "nilpotent_3step";
    case MuRule::CenterHeisenberg: return "center_heisenberg";
    case MuRule::DirectSumAdditivity: return "direct_sum_additivity";
  }
  return "?";
}

Eigen::MatrixXd Representation::image_of(const Eigen::VectorXd& x) const {
  if (x.size() != algebra.n())
    throw DimensionMismatch("image_of: |x| != n");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 0; i < algebra.n(); ++i)
    if (x[i] != 0.0) out += x[i] * images[i];
  return out;
}

Representation heisenberg_rep(int m) {
  if (m < 1) throw InvalidParameter("heisenberg_rep: m >= 1");
  const int d = m + 2;
  Representation rep;
  rep.algebra = LieAlgebra::build(FamilySpec::heisenberg(m));
  rep.degree = d;
  rep.label = "heisenberg";
  rep.images.assign(2 * m + 1, Eigen::MatrixXd::Zero(d, d));
  for (int i = 1; i <= m; ++i) {
    rep.images[i - 1](0, i) = 1.0;          // x_i -> E_{1,1+i}
    rep.images[m + i - 1](i, m + 1) = 1.0;  // y_i -> E_{1+i,m+2}
  }
  rep.images[2 * m](0, m + 1) = 1.0;  // z -> E_{1,m+2}
  return rep;
}

LinearMap build_phi(const LieAlgebra& alg) {
  const Family fam = alg.spec().family;
  if (fam != Family::G4_1 && fam != Family::G6_2k_1)
    throw UnsupportedFamily("build_phi: defined for g4_1 and g6_2k_1 only");
  const int n = alg.n();
  const int mh = (n - 2) / 2;  // h_{n-1} = h_{2*mh+1}
  LinearMap phi;
  phi.domain = alg;
  phi.codomain = LieAlgebra::build(FamilySpec::heisenberg(mh));
  phi.matrix = Eigen::MatrixXd::Zero(n - 1, n);
  phi.matrix(2 * mh, 1) = 1.0;  // X2 -> z
  for (int i = 0; 2 * i <= n - 4; ++i) {
    phi.matrix(i, 2 + 2 * i) = 1.0;       // X_{3+2i} -> x_{i+1}
    phi.matrix(mh + i, 3 + 2 * i) = 1.0;  // X_{4+2i} -> y_{i+1}
  }
  return phi;
}

Representation compose_rep(const Representation& pi, const LinearMap& phi) {
  if (pi.algebra.n() != phi.codomain.n())
    throw DimensionMismatch("compose_rep: codomain of phi != algebra of pi");
  Representation rep;
  rep.algebra = phi.domain;
  rep.degree = pi.degree;
  rep.label = "pi.phi";
  rep.images.reserve(phi.domain.n());
  for (int i = 0; i < phi.domain.n(); ++i) {
    Eigen::MatrixXd img = Eigen::MatrixXd::Zero(pi.degree, pi.degree);
    for (int j = 0; j < phi.codomain.n(); ++j)
      if (phi.matrix(j, i) != 0.0) img += phi.matrix(j, i) * pi.images[j];
    rep.images.push_back(std::move(img));
  }
  return rep;
}

Representation direct_sum_rep(const Representation& r1, const Representation& r2) {
  if (!(r1.algebra.spec() == r2.algebra.spec()) || r1.algebra.n() != r2.algebra.n())
    throw AlgebraMismatch("direct_sum_rep: same underlying algebra required");
  Representation rep;
  rep.algebra = r1.algebra;
  rep.degree = r1.degree + r2.degree;
  rep.label = r1.label + "+" + r2.label;
  for (int i = 0; i < r1.algebra.n(); ++i) {
    Eigen::MatrixXd img = Eigen::MatrixXd::Zero(rep.degree, rep.degree);
    img.topLeftCorner(r1.degree, r1.degree) = r1.images[i];
    img.bottomRightCorner(r2.degree, r2.degree) = r2.images[i];
    rep.images.push_back(std::move(img));
  }
  return rep;
}

Representation adjoint_rep(const LieAlgebra& alg) {
  Representation rep;
  rep.algebra = alg;
  rep.degree = alg.n();
  rep.label = "adjoint";
  for (int i = 0; i < alg.n(); ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(alg.n());
    e[i] = 1.0;
    rep.images.push_back(ad_matrix(alg, e).mat);
  }
  return rep;
}

Representation faithful_rep(const LieAlgebra& alg) {
  const Family fam = alg.spec().family;
  if (fam == Family::G4_1 || fam == Family::G6_2k_1) {
    const int mh = (alg.n() - 2) / 2;
    Representation rep = direct_sum_rep(
        compose_rep(heisenberg_rep(mh), build_phi(alg)), adjoint_rep(alg));
    rep.faithful = verify_faithful(alg, rep);
    return rep;
  }
  if (fam == Family::Heisenberg) {
    Representation rep = heisenberg_rep(alg.spec().m);
    rep.faithful = verify_faithful(alg, rep);
    return rep;
  }
  if (fam == Family::Abelian) {
    // diagonal embedding: X_i -> E_{ii}
    Representation rep;
    rep.algebra = alg;
    rep.degree = alg.n();
    rep.label = "diagonal";
    for (int i = 0; i < alg.n(); ++i) {
      Eigen::MatrixXd img = Eigen::MatrixXd::Zero(alg.n(), alg.n());
      img(i, i) = 1.0;
      rep.images.push_back(std::move(img));
    }
    rep.faithful = verify_faithful(alg, rep);
    return rep;
  }
  if (alg.center().dim() == 0) {
    Representation rep = adjoint_rep(alg);
    rep.faithful = verify_faithful(alg, rep);
    return rep;
  }
  throw UnsupportedFamily(
      "faithful_rep: no construction exposed for " + alg.spec().tag() +
      "; mu_report gives the degree bound");
}

double verify_homomorphism(const LieAlgebra& alg, const Representation& r) {
  double worst = 0.0;
  for (int i = 0; i < alg.n(); ++i)
    for (int j = i + 1; j < alg.n(); ++j) {
      Eigen::MatrixXd lhs = Eigen::MatrixXd::Zero(r.degree, r.degree);
      const Eigen::VectorXd bij = alg.bracket_basis(i, j);
      for (int k = 0; k < alg.n(); ++k)
        if (bij[k] != 0.0) lhs += bij[k] * r.images[k];
      const Eigen::MatrixXd rhs =
          r.images[i] * r.images[j] - r.images[j] * r.images[i];
      worst = std::max(worst, (lhs - rhs).norm());
    }
  return worst;
}

double homomorphism_defect(const LinearMap& map) {
  double worst = 0.0;
  const int n = map.domain.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd ei = Eigen::VectorXd::Zero(n);
      Eigen::VectorXd ej = Eigen::VectorXd::Zero(n);
      ei[i] = 1.0;
      ej[j] = 1.0;
      const Eigen::VectorXd lhs = map.apply(map.domain.bracket(ei, ej));
      const Eigen::VectorXd rhs =
          map.codomain.bracket(map.apply(ei), map.apply(ej));
      worst = std::max(worst, (lhs - rhs).norm());
    }
  return worst;
}

bool verify_faithful(const LieAlgebra& alg, const Representation& r) {
  // Kernel test on the basis: stack the vectorized images.
  Eigen::MatrixXd stacked(alg.n(), r.degree * r.degree);
  for (int i = 0; i < alg.n(); ++i)
    stacked.row(i) = Eigen::Map<const Eigen::RowVectorXd>(
        r.images[i].data(), r.degree * r.degree);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return alg.n() == 0;
  const double cutoff = 1e-9 * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank == alg.n();
}

namespace {

int best_known_degree(const MuReport& rep) {
  return rep.exact_known ? *rep.exact_known : rep.upper_bound;
}

}  // namespace

MuReport mu_report(const LieAlgebra& alg) {
  const FamilySpec& spec = alg.spec();
  const int n = alg.n();
  MuReport rep;
  switch (spec.family) {
    case Family::G3_1:
    case Family::G3_2:
    case Family::G3_3:  // equality holds in dimension 3
    case Family::G4_3:
    case Family::G4_4:
    case Family::AffC:
      rep.rule_applied = MuRule::TrivialCenterAdjoint;
      rep.upper_bound = n;
      rep.exact_known = 3;
      rep.construction_available = true;
      break;
    case Family::G4_1:
      rep.rule_applied = MuRule::CenterHeisenberg;
      rep.upper_bound = 3 * n / 2 + 1;
      rep.exact_known = 4;
      rep.mu_z = n / 2 + 1;
      rep.construction_available = true;
      break;
    case Family::G6_2k_1:
      rep.rule_applied = MuRule::CenterHeisenberg;
      rep.upper_bound = 3 * n / 2 + 1;
      rep.mu_z = n / 2 + 1;
      rep.construction_available = true;
      break;
    case Family::G4_2:
      rep.rule_applied = MuRule::Nilpotent3Step;
      rep.upper_bound = n + 1;
      rep.exact_known = 4;
      rep.note = "3-step nilpotent: degree bound only, no construction exposed";
      break;
    case Family::G5_2k:
      rep.rule_applied = MuRule::Nilpotent3Step;
      rep.upper_bound = n + 1;
      if (spec.k == 0) rep.exact_known = 4;
      rep.note = "3-step nilpotent: degree bound only, no construction exposed";
      break;
    case Family::G6_2k_2:
      rep.rule_applied = MuRule::Nilpotent3Step;
      rep.upper_bound = n + 1;
      if (spec.k == 0) rep.exact_known = 5;
      rep.note = "3-step nilpotent: degree bound only, no construction exposed";
      break;
    case Family::AffR:
      rep.rule_applied = MuRule::TrivialCenterAdjoint;
      rep.upper_bound = 2;
      rep.exact_known = 2;  // degree-1 reps are abelian, aff(R) is not
      rep.construction_available = true;
      break;
    case Family::Heisenberg:
      rep.rule_applied = MuRule::CenterHeisenberg;
      rep.upper_bound = spec.m + 2;
      rep.exact_known = spec.m + 2;
      rep.construction_available = true;
      break;
    case Family::Abelian:
      // R^m = m copies of R, each with the degree-1 faithful representation.
      rep.rule_applied = MuRule::DirectSumAdditivity;
      rep.upper_bound = spec.m;
      if (spec.m == 1) rep.exact_known = 1;
      rep.construction_available = true;
      break;
    case Family::DirectSum:
    case Family::TrivialExtension: {
      rep.rule_applied = MuRule::DirectSumAdditivity;
      int total = 0;
      for (const auto& p : spec.parts)
        total += best_known_degree(mu_report(LieAlgebra::build(p)));
      rep.upper_bound = total;
      // the adjoint route still applies when the summands leave no center
      rep.construction_available = alg.center().dim() == 0;
      break;
    }
  }
  return rep;
}

double character(const Representation& r, const Eigen::VectorXd& x) {
  return exp_matrix_numeric(r.image_of(x)).trace();
}

}  // namespace lien2
