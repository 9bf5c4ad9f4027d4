#include "lien2/coadjoint.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <iostream>
#include <limits>

#include "lien2/adjoint.hpp"
#include "lien2/errors.hpp"
#include "lien2/rng.hpp"

namespace lien2 {

namespace {

double relative_diff(double a, double b) {
  return std::abs(a - b) / (1.0 + std::abs(a));
}

// Signed distance modulo a period (period 0 = plain difference).
double wrapped_diff(double a, double b, double period) {
  double d = b - a;
  if (period > 0.0) {
    d = std::fmod(d, period);
    if (d > 0.5 * period) d -= period;
    if (d < -0.5 * period) d += period;
  }
  return d;
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

std::string coord_name(int idx0) { return "x" + std::to_string(idx0 + 1); }

}  // namespace

std::string orbit_kind_name(OrbitKind kind) {
  switch (kind) {
    case OrbitKind::Trivial: return "trivial";
    case OrbitKind::HalfPlane: return "half_plane";
    case OrbitKind::Plane: return "plane";
    case OrbitKind::Cylinder: return "cylinder";
    case OrbitKind::ParabolicCylinder: return "parabolic_cylinder";
    case OrbitKind::HalfSpace: return "half_space";
    case OrbitKind::Hyperplane: return "hyperplane";
    case OrbitKind::OpenDense: return "open_dense";
  }
  return "?";
}

std::vector<std::string> OrbitDescriptor::constraint_strings() const {
  std::vector<std::string> out;
  for (const auto& sc : sign_constraints)
    out.push_back(coord_name(sc.coord) + (sc.sign > 0 ? " > 0" : " < 0"));
  if (kind == OrbitKind::OpenDense) out.push_back("x1^2 + x2^2 != 0");
  return out;
}

Functional coadjoint_move(const LieAlgebra& alg, const Functional& F,
                          const Eigen::VectorXd& x) {
  if (F.n() != alg.n() || x.size() != alg.n())
    throw DimensionMismatch("coadjoint_move: sizes must equal n");
  return Functional{exp_ad(alg, x).transpose() * F.f};
}

Eigen::MatrixXd kirillov_form(const LieAlgebra& alg, const Functional& F) {
  if (F.n() != alg.n()) throw DimensionMismatch("kirillov_form: |F| != n");
  const int n = alg.n();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += alg.c(i, j, k) * F.f[k];
      b(i, j) = v;
      b(j, i) = -v;
    }
  return b;
}

int orbit_dimension(const LieAlgebra& alg, const Functional& F, double rank_tol) {
  const Eigen::MatrixXd b = kirillov_form(alg, F);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  const double cutoff = rank_tol * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  if (rank % 2 != 0) {
    std::cerr << "warning: odd numeric rank " << rank
              << " for a skew form; rounding down\n";
    --rank;
  }
  return rank;
}

OrbitDescriptor orbit_classify(const LieAlgebra& alg, const Functional& F,
                               double zero_tol) {
  if (F.n() != alg.n()) throw DimensionMismatch("orbit_classify: |F| != n");
  const FamilySpec& spec = alg.spec();
  if (!spec.classified())
    throw UnsupportedFamily("orbit_classify: " + spec.tag() +
                            " is outside the classified families");

  const int n = alg.n();
  const double f1 = F.f[0];
  const double f2 = F.f[1];
  const bool z1 = std::abs(f1) < zero_tol;
  const bool z2 = std::abs(f2) < zero_tol;
  const double lam = spec.lambda;

  OrbitDescriptor d;
  d.family = spec;
  d.base = F;

  if (z1 && z2) {
    d.kind = OrbitKind::Trivial;
    d.stratum = OrbitStratum::Trivial;
    d.dim = 0;
    for (int i = 0; i < n; ++i) d.fixed_coords[i] = F.f[i];
    return d;
  }

  switch (spec.table_family()) {
    case Family::G3_1: {
      d.dim = 2;
      if (!z1 && z2) {
        d.kind = OrbitKind::HalfPlane;
        d.stratum = OrbitStratum::F1Only;
        d.fixed_coords[1] = 0.0;
        d.sign_constraints.push_back({0, sign_of(f1)});
      } else if (z1 && !z2) {
        d.kind = OrbitKind::HalfPlane;
        d.stratum = OrbitStratum::F2Only;
        d.fixed_coords[0] = 0.0;
        d.sign_constraints.push_back({1, sign_of(f2)});
      } else {
        d.kind = OrbitKind::Cylinder;
        d.stratum = OrbitStratum::Generic;
        d.invariant_values["log_ratio"] =
            lam * std::log(std::abs(f1)) - std::log(std::abs(f2));
        d.sign_constraints.push_back({0, sign_of(f1)});
        d.sign_constraints.push_back({1, sign_of(f2)});
      }
      break;
    }
    case Family::G3_2: {
      d.dim = 2;
      if (z1) {
        d.kind = OrbitKind::HalfPlane;
        d.stratum = OrbitStratum::F2Only;
        d.fixed_coords[0] = 0.0;
        d.sign_constraints.push_back({1, sign_of(f2)});
      } else {
        d.kind = OrbitKind::Cylinder;
        d.stratum = z2 ? OrbitStratum::F1Only : OrbitStratum::Generic;
        d.invariant_values["log_slope"] = f2 / f1 - std::log(std::abs(f1));
        d.sign_constraints.push_back({0, sign_of(f1)});
      }
      break;
    }
    case Family::G3_3: {
      d.dim = 2;
      d.kind = OrbitKind::Cylinder;
      d.stratum = OrbitStratum::Generic;
      if (lam == 0.0) {
        d.invariant_values["radius"] = std::hypot(f1, f2);
      } else {
        // log r - lambda*theta, defined modulo 2*pi*lambda
        const double period = 2.0 * M_PI * lam;
        double v = 0.5 * std::log(f1 * f1 + f2 * f2) - lam * std::atan2(f2, f1);
        v = std::fmod(v, period);
        if (v < 0.0) v += period;
        d.invariant_values["spiral"] = v;
      }
      break;
    }
    case Family::G4_1: {
      d.dim = 2;
      if (!z1 && z2) {
        d.kind = OrbitKind::HalfPlane;
        d.stratum = OrbitStratum::F1Only;
        d.fixed_coords[1] = 0.0;
        d.fixed_coords[3] = F.f[3];
        d.sign_constraints.push_back({0, sign_of(f1)});
      } else {
        // f2 != 0: level set of x1*exp(-x4/x2); plane when f1 = 0
        d.kind = z1 ? OrbitKind::Plane : OrbitKind::Cylinder;
        d.stratum = z1 ? OrbitStratum::F2Only : OrbitStratum::Generic;
        d.fixed_coords[1] = f2;
        d.invariant_values["x2"] = f2;
        if (z1) {
          d.invariant_values["c"] = 0.0;
          d.fixed_coords[0] = 0.0;
        } else {
          const double log_c = std::log(std::abs(f1)) - F.f[3] / f2;
          d.invariant_values["log_c"] = log_c;
          const double c = sign_of(f1) * std::exp(log_c);
          if (std::isfinite(c)) d.invariant_values["c"] = c;
          d.sign_constraints.push_back({0, sign_of(f1)});
        }
      }
      break;
    }
    case Family::G4_2: {
      d.dim = 2;
      if (z1) {
        d.kind = OrbitKind::Plane;
        d.stratum = OrbitStratum::F2Only;
        d.fixed_coords[0] = 0.0;
        d.fixed_coords[1] = f2;
        d.invariant_values["x2"] = f2;
      } else {
        d.kind = OrbitKind::ParabolicCylinder;
        d.stratum = z2 ? OrbitStratum::F1Only : OrbitStratum::Generic;
        d.fixed_coords[0] = f1;
        d.invariant_values["x1"] = f1;
        d.invariant_values["q"] = f2 * f2 - 2.0 * f1 * F.f[3];
      }
      break;
    }
    case Family::G4_3: {
      if (z1) {
        d.dim = 2;
        d.kind = OrbitKind::HalfPlane;
        d.stratum = OrbitStratum::F2Only;
        d.fixed_coords[0] = 0.0;
        d.fixed_coords[2] = F.f[2];
        d.sign_constraints.push_back({1, sign_of(f2)});
      } else {
        d.dim = 4;
        d.kind = OrbitKind::HalfSpace;
        d.stratum = z2 ? OrbitStratum::F1Only : OrbitStratum::Generic;
        d.sign_constraints.push_back({0, sign_of(f1)});
      }
      break;
    }
    case Family::G4_4: {
      d.dim = 4;
      d.kind = OrbitKind::OpenDense;
      d.stratum = OrbitStratum::Generic;
      break;
    }
    case Family::G5_2k: {
      if (z2) {
        d.dim = 2;
        d.kind = OrbitKind::Plane;
        d.stratum = OrbitStratum::F1Only;
        d.fixed_coords[0] = f1;
        d.fixed_coords[1] = 0.0;
        for (int j = 4; j < n; ++j) d.fixed_coords[j] = F.f[j];
      } else {
        d.dim = n - 1;  // 4 + 2k
        d.kind = OrbitKind::Hyperplane;
        d.stratum = z1 ? OrbitStratum::F2Only : OrbitStratum::Generic;
        d.fixed_coords[1] = f2;
        d.invariant_values["x2"] = f2;
      }
      break;
    }
    case Family::G6_2k_1: {
      if (z2) {
        d.dim = 2;
        d.kind = OrbitKind::HalfPlane;
        d.stratum = OrbitStratum::F1Only;
        d.fixed_coords[1] = 0.0;
        for (int j = 3; j < n; ++j) d.fixed_coords[j] = F.f[j];
        d.sign_constraints.push_back({0, sign_of(f1)});
      } else {
        d.dim = n - 2;  // 4 + 2k
        d.kind = z1 ? OrbitKind::Plane : OrbitKind::Cylinder;
        d.stratum = z1 ? OrbitStratum::F2Only : OrbitStratum::Generic;
        d.fixed_coords[1] = f2;
        d.invariant_values["x2"] = f2;
        if (z1) {
          d.invariant_values["c"] = 0.0;
          d.fixed_coords[0] = 0.0;
        } else {
          const double log_c = std::log(std::abs(f1)) - F.f[3] / f2;
          d.invariant_values["log_c"] = log_c;
          const double c = sign_of(f1) * std::exp(log_c);
          if (std::isfinite(c)) d.invariant_values["c"] = c;
          d.sign_constraints.push_back({0, sign_of(f1)});
        }
      }
      break;
    }
    case Family::G6_2k_2: {
      if (z2) {
        d.dim = 2;
        d.kind = OrbitKind::Plane;
        d.stratum = OrbitStratum::F1Only;
        d.fixed_coords[0] = f1;
        d.fixed_coords[1] = 0.0;
        for (int j = 4; j < n; ++j) d.fixed_coords[j] = F.f[j];
      } else {
        d.dim = n - 2;  // 4 + 2k
        d.kind = OrbitKind::ParabolicCylinder;
        d.stratum = z1 ? OrbitStratum::F2Only : OrbitStratum::Generic;
        d.fixed_coords[1] = f2;
        d.invariant_values["x2"] = f2;
        d.invariant_values["q"] = f1 * f1 - 2.0 * f2 * F.f[3];
      }
      break;
    }
    default:
      throw UnsupportedFamily("orbit_classify: " + spec.tag());
  }
  return d;
}

std::map<std::string, double> orbit_invariants(const LieAlgebra& alg,
                                               const Functional& F,
                                               double zero_tol) {
  const OrbitDescriptor d = orbit_classify(alg, F, zero_tol);
  if (d.kind == OrbitKind::Trivial)
    throw BranchUndefined("orbit_invariants: trivial orbit has no invariants");
  return d.invariant_values;
}

double invariant_drift(const OrbitDescriptor& desc, const Functional& p) {
  const Eigen::VectorXd& F = desc.base.f;
  const Eigen::VectorXd& P = p.f;
  if (P.size() != F.size())
    throw DimensionMismatch("invariant_drift: point size mismatch");

  double worst = 0.0;
  for (const auto& [idx, value] : desc.fixed_coords)
    worst = std::max(worst, relative_diff(value, P[idx]));

  const double lam = desc.family.lambda;
  switch (desc.family.table_family()) {
    case Family::G3_1:
      if (desc.stratum == OrbitStratum::Generic) {
        const double a = lam * std::log(std::abs(F[0])) - std::log(std::abs(F[1]));
        const double b = lam * std::log(std::abs(P[0])) - std::log(std::abs(P[1]));
        worst = std::max(worst, relative_diff(a, b));
      }
      break;
    case Family::G3_2:
      if (desc.stratum != OrbitStratum::F2Only &&
          desc.stratum != OrbitStratum::Trivial) {
        if (P[0] == 0.0 || sign_of(P[0]) != sign_of(F[0]))
          return std::numeric_limits<double>::infinity();
        const double a = F[1] / F[0] - std::log(std::abs(F[0]));
        const double b = P[1] / P[0] - std::log(std::abs(P[0]));
        worst = std::max(worst, relative_diff(a, b));
      }
      break;
    case Family::G3_3:
      if (desc.stratum != OrbitStratum::Trivial) {
        const double a = 0.5 * std::log(F[0] * F[0] + F[1] * F[1]) -
                         lam * std::atan2(F[1], F[0]);
        const double b = 0.5 * std::log(P[0] * P[0] + P[1] * P[1]) -
                         lam * std::atan2(P[1], P[0]);
        const double period = 2.0 * M_PI * lam;
        worst = std::max(worst, std::abs(wrapped_diff(a, b, period)) /
                                    (1.0 + std::abs(a)));
      }
      break;
    case Family::G4_1:
    case Family::G6_2k_1:
      if (desc.stratum == OrbitStratum::Generic) {
        if (P[0] == 0.0 || sign_of(P[0]) != sign_of(F[0]))
          return std::numeric_limits<double>::infinity();
        const double a = std::log(std::abs(F[0])) - F[3] / F[1];
        const double b = std::log(std::abs(P[0])) - P[3] / P[1];
        worst = std::max(worst, relative_diff(a, b));
      }
      break;
    case Family::G4_2:
      if (desc.stratum != OrbitStratum::F2Only &&
          desc.stratum != OrbitStratum::Trivial) {
        const double a = F[1] * F[1] - 2.0 * F[0] * F[3];
        const double b = P[1] * P[1] - 2.0 * P[0] * P[3];
        worst = std::max(worst, relative_diff(a, b));
      }
      break;
    case Family::G6_2k_2:
      if (desc.stratum == OrbitStratum::F2Only ||
          desc.stratum == OrbitStratum::Generic) {
        const double a = F[0] * F[0] - 2.0 * F[1] * F[3];
        const double b = P[0] * P[0] - 2.0 * P[1] * P[3];
        worst = std::max(worst, relative_diff(a, b));
      }
      break;
    default:
      break;  // fixed coords and signs carry the remaining families
  }
  return worst;
}

bool signs_preserved(const OrbitDescriptor& desc, const Functional& p) {
  for (const auto& sc : desc.sign_constraints)
    if (sign_of(p.f[sc.coord]) != sc.sign) return false;
  if (desc.family.table_family() == Family::G4_4 &&
      desc.kind == OrbitKind::OpenDense) {
    if (p.f[0] == 0.0 && p.f[1] == 0.0) return false;
  }
  return true;
}

std::vector<Functional> sample_orbit(const LieAlgebra& alg, const Functional& F,
                                     int count, std::uint64_t seed) {
  if (count < 1) throw InvalidParameter("sample_orbit: count >= 1");
  std::vector<Functional> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng = Rng::derived(seed, static_cast<std::uint64_t>(i));
    Eigen::VectorXd x(alg.n());
    for (int j = 0; j < alg.n(); ++j) x[j] = rng.uniform(-3.0, 3.0);
    out.push_back(coadjoint_move(alg, F, x));
  }
  return out;
}

}  // namespace lien2
