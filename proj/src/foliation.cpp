#include "lien2/foliation.hpp"

#include <Eigen/QR>
#include <cmath>

#include "lien2/adjoint.hpp"
#include "lien2/errors.hpp"

namespace lien2 {

namespace {

bool foliated_family(const FamilySpec& spec) {
  return spec.family == Family::G5_2k || spec.family == Family::G6_2k_1 ||
         spec.family == Family::G6_2k_2;
}

void require_foliated(const LieAlgebra& alg, const char* who) {
  if (!foliated_family(alg.spec()))
    throw UnsupportedFamily(std::string(who) +
                            ": defined for g5_2k, g6_2k_1, g6_2k_2");
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

Eigen::VectorXd VectorField::eval(const Eigen::VectorXd& p) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(p.size());
  switch (kind) {
    case Kind::Coordinate:
      v[coord] = 1.0;
      break;
    case Kind::ExpFlow:
      v[0] = p[0];
      v[3] = p[1];
      break;
    case Kind::ParabolicFlow:
      v[0] = p[1];
      v[3] = p[0];
      break;
  }
  return v;
}

std::string VectorField::label() const {
  switch (kind) {
    case Kind::Coordinate:
      return "d" + std::to_string(coord + 1);
    case Kind::ExpFlow:
      return "x1*d1 + x2*d4";
    case Kind::ParabolicFlow:
      return "x2*d1 + x1*d4";
  }
  return "?";
}

Eigen::MatrixXd TangentSystem::frame_at(const Eigen::VectorXd& p) const {
  Eigen::MatrixXd frame(p.size(), static_cast<int>(fields.size()));
  for (std::size_t i = 0; i < fields.size(); ++i)
    frame.col(static_cast<int>(i)) = fields[i].eval(p);
  return frame;
}

bool in_foliated_manifold(const LieAlgebra& alg, const Functional& F,
                          double zero_tol) {
  require_foliated(alg, "in_foliated_manifold");
  if (F.n() != alg.n())
    throw DimensionMismatch("in_foliated_manifold: |F| != n");
  return std::abs(F.f[1]) > zero_tol;
}

LeafId leaf_of(const LieAlgebra& alg, const Functional& F, double zero_tol) {
  if (!in_foliated_manifold(alg, F, zero_tol))
    throw NotInFoliatedManifold("leaf_of: x*_2 = 0");
  LeafId leaf;
  leaf.family = alg.spec();
  const double f2 = F.f[1];
  switch (alg.spec().family) {
    case Family::G5_2k:
      leaf.value = {f2};
      break;
    case Family::G6_2k_2:
      leaf.value = {f2, F.f[0] * F.f[0] - 2.0 * f2 * F.f[3]};
      break;
    case Family::G6_2k_1: {
      leaf.sign_second = sign_of(F.f[0]);
      if (leaf.sign_second == 0) {
        leaf.value = {f2, 0.0};
      } else {
        leaf.log_second = std::log(std::abs(F.f[0])) - F.f[3] / f2;
        leaf.value = {f2, leaf.sign_second * std::exp(leaf.log_second)};
      }
      break;
    }
    default:
      break;
  }
  return leaf;
}

double leaf_distance(const LeafId& a, const LeafId& b) {
  if (!(a.family == b.family) || a.value.size() != b.value.size())
    return std::numeric_limits<double>::infinity();
  double worst = std::abs(a.value[0] - b.value[0]) / (1.0 + std::abs(a.value[0]));
  if (a.value.size() < 2) return worst;
  if (a.family.family == Family::G6_2k_1) {
    if (a.sign_second != b.sign_second)
      return std::numeric_limits<double>::infinity();
    if (a.sign_second != 0)
      worst = std::max(worst, std::abs(a.log_second - b.log_second) /
                                  (1.0 + std::abs(a.log_second)));
    return worst;
  }
  worst = std::max(worst,
                   std::abs(a.value[1] - b.value[1]) / (1.0 + std::abs(a.value[1])));
  return worst;
}

bool leaf_equal(const LeafId& a, const LeafId& b, double tol) {
  return leaf_distance(a, b) <= tol;
}

TangentSystem tangent_system(const LieAlgebra& alg) {
  require_foliated(alg, "tangent_system");
  TangentSystem sys;
  sys.family = alg.spec();
  const int n = alg.n();
  switch (alg.spec().family) {
    case Family::G5_2k:
      sys.fields.push_back({VectorField::Kind::Coordinate, 0});
      for (int j = 2; j < n; ++j)
        sys.fields.push_back({VectorField::Kind::Coordinate, j});
      break;
    case Family::G6_2k_1:
      sys.fields.push_back({VectorField::Kind::ExpFlow, 0});
      sys.fields.push_back({VectorField::Kind::Coordinate, 2});
      for (int j = 4; j < n; ++j)
        sys.fields.push_back({VectorField::Kind::Coordinate, j});
      break;
    case Family::G6_2k_2:
      sys.fields.push_back({VectorField::Kind::ParabolicFlow, 0});
      sys.fields.push_back({VectorField::Kind::Coordinate, 2});
      for (int j = 4; j < n; ++j)
        sys.fields.push_back({VectorField::Kind::Coordinate, j});
      break;
    default:
      break;
  }
  return sys;
}

double verify_tangency(const LieAlgebra& alg, const Functional& F,
                       double zero_tol) {
  if (!in_foliated_manifold(alg, F, zero_tol))
    throw NotInFoliatedManifold("verify_tangency: x*_2 = 0");
  const int n = alg.n();
  const Eigen::VectorXd& p = F.f;

  // Gradients of the leaf-defining invariants, in scaled form where the raw
  // invariant is exponential (any per-point rescaling is still a defining
  // function of the same level set).
  std::vector<Eigen::VectorXd> gradients;
  Eigen::VectorXd g2 = Eigen::VectorXd::Zero(n);
  g2[1] = 1.0;  // x*_2
  gradients.push_back(g2);
  switch (alg.spec().family) {
    case Family::G6_2k_1: {
      // x1*exp(-x4/x2): gradient scaled by exp(+x4/x2)
      Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
      g[0] = 1.0;
      g[1] = p[0] * p[3] / (p[1] * p[1]);
      g[3] = -p[0] / p[1];
      gradients.push_back(g);
      break;
    }
    case Family::G6_2k_2: {
      // x1^2 - 2 x2 x4
      Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
      g[0] = 2.0 * p[0];
      g[1] = -2.0 * p[3];
      g[3] = -2.0 * p[1];
      gradients.push_back(g);
      break;
    }
    default:
      break;
  }

  const TangentSystem sys = tangent_system(alg);
  double worst = 0.0;
  for (const auto& field : sys.fields) {
    const Eigen::VectorXd v = field.eval(p);
    for (const auto& g : gradients)
      worst = std::max(worst, std::abs(g.dot(v)));
  }
  return worst;
}

Functional equivalence_h(const Functional& F, double zero_tol) {
  const int n = F.n();
  if (n < 6 || n % 2 != 0)
    throw DimensionMismatch("equivalence_h: needs a 6+2k dimensional point");
  if (std::abs(F.f[1]) <= zero_tol)
    throw NotInFoliatedManifold("equivalence_h: x*_2 = 0");
  Functional out;
  out.f = F.f;
  const double s = F.f[0] + F.f[3];
  out.f[0] = s;
  out.f[3] =
      (s * s - F.f[0] * std::exp(-F.f[3] / F.f[1])) / (2.0 * F.f[1]);
  return out;
}

double jacobian_constancy(const LieAlgebra& alg, const Eigen::VectorXd& x,
                          const Functional& F1, const Functional& F2) {
  require_foliated(alg, "jacobian_constancy");
  if (!leaf_equal(leaf_of(alg, F1), leaf_of(alg, F2)))
    throw LeafMismatch("jacobian_constancy: F1, F2 on different leaves");

  const TangentSystem sys = tangent_system(alg);
  const Eigen::MatrixXd a_t = exp_ad(alg, x).transpose();

  auto leafwise_det = [&](const Functional& F) {
    const Functional image{a_t * F.f};
    const Eigen::MatrixXd frame_in = sys.frame_at(F.f);
    const Eigen::MatrixXd frame_out = sys.frame_at(image.f);
    // Transfer matrix T with A^T * frame_in = frame_out * T; its determinant
    // is the leafwise volume factor in the system's own frames.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(frame_out);
    const Eigen::MatrixXd t = qr.solve(a_t * frame_in);
    return std::abs(t.determinant());
  };

  return std::abs(leafwise_det(F1) - leafwise_det(F2));
}

std::string connes_label(const LieAlgebra& alg) {
  require_foliated(alg, "connes_label");
  return alg.spec().family == Family::G5_2k ? "C0(R*) \xE2\x8A\x97 K"
                                            : "C0(R* x R) \xE2\x8A\x97 K";
}

int foliation_codim(const LieAlgebra& alg) {
  require_foliated(alg, "foliation_codim");
  return alg.spec().family == Family::G5_2k ? 1 : 2;
}

}  // namespace lien2
