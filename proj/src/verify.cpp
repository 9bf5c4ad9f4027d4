#include "lien2/verify.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <cstdio>
#include <map>

#include "lien2/adjoint.hpp"
#include "lien2/algebra.hpp"
#include "lien2/coadjoint.hpp"
#include "lien2/errors.hpp"
#include "lien2/expm.hpp"
#include "lien2/foliation.hpp"
#include "lien2/representation.hpp"
#include "lien2/rng.hpp"

namespace lien2 {

namespace {

Eigen::VectorXd random_x(Rng& rng, int n, double lo = -3.0, double hi = 3.0) {
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform(lo, hi);
  return x;
}

// Cycles through the strata of the (f1, f2) case split so every branch of
// the classification gets exercised.
Functional stratified_functional(Rng& rng, int n, int idx) {
  Functional F{random_x(rng, n)};
  switch (idx % 5) {
    case 0:
      F.f[0] = 0.0;
      F.f[1] = 0.0;
      break;
    case 1:
      F.f[1] = 0.0;
      break;
    case 2:
      F.f[0] = 0.0;
      break;
    default:
      break;
  }
  return F;
}

// Point of V_G with x*_2 bounded away from 0 (|x4/x2| stays moderate).
Functional foliated_point(Rng& rng, int n) {
  Functional F{random_x(rng, n)};
  const double mag = rng.uniform(0.3, 3.0);
  F.f[1] = rng.uniform01() < 0.5 ? mag : -mag;
  return F;
}

struct Runner {
  const VerifyOptions& opt;
  std::vector<CheckResult>& out;
  std::uint64_t salt = 0;

  Rng rng(std::uint64_t i) { return Rng::derived(opt.seed, (salt << 32) ^ i); }

  void emit(const std::string& id, const std::string& family, long samples,
            double max_defect, double tolerance, bool exact,
            const std::string& detail = "") {
    CheckResult r;
    r.id = id;
    r.family = family;
    r.samples = samples;
    r.max_defect = max_defect;
    r.tolerance = tolerance;
    r.exact = exact;
    r.pass = exact ? (max_defect == 0.0) : (max_defect <= tolerance);
    r.detail = detail;
    out.push_back(std::move(r));
  }

  void emit_flag(const std::string& id, const std::string& family, bool ok,
                 const std::string& detail = "") {
    CheckResult r;
    r.id = id;
    r.family = family;
    r.samples = 1;
    r.max_defect = ok ? 0.0 : 1.0;
    r.tolerance = 0.0;
    r.exact = true;
    r.pass = ok;
    r.detail = detail;
    out.push_back(std::move(r));
  }
};

bool integer_constants(const FamilySpec& spec) {
  if (spec.family == Family::G3_1 || spec.family == Family::G3_3)
    return spec.lambda == std::floor(spec.lambda);
  if (spec.composite()) {
    for (const auto& p : spec.parts)
      if (!integer_constants(p)) return false;
  }
  return true;
}

int expected_center_dim(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::G3_1:
    case Family::G3_2:
    case Family::G3_3:
    case Family::G4_3:
    case Family::G4_4:
    case Family::AffC:
    case Family::AffR:
      return 0;
    case Family::G4_1:
    case Family::G4_2:
    case Family::G5_2k:
    case Family::G6_2k_1:
    case Family::G6_2k_2:
    case Family::Heisenberg:
      return 1;
    case Family::Abelian:
      return spec.m;
    default:
      return -1;
  }
}

int expected_derived_dim(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::AffR:
    case Family::Heisenberg:
      return 1;
    case Family::Abelian:
      return 0;
    default:
      return spec.classified() ? 2 : -1;
  }
}

void check_structure(Runner& run) {
  run.salt = 1;
  for (const auto& spec : extended_sweep(run.opt.k_max)) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    const std::string name = spec.display_name();
    run.emit("antisymmetry_exact", name, 1, alg.antisymmetry_defect(), 0.0, true);
    if (integer_constants(spec)) {
      run.emit("jacobi_exact", name, 1, alg.jacobi_defect(), 0.0, true);
    } else {
      run.emit("jacobi_exact", name, 1, alg.jacobi_defect(), 0.0, true,
               "lambda family; exactness holds structurally");
    }
    const int derived = expected_derived_dim(spec);
    if (derived >= 0)
      run.emit_flag("derived_dim", name, alg.derived_ideal().dim() == derived);
    const int center = expected_center_dim(spec);
    if (center >= 0)
      run.emit_flag("center_dim", name, alg.center().dim() == center);

    const auto nil = alg.nilpotency_class();
    switch (spec.family) {
      case Family::G4_2:
      case Family::G5_2k:
      case Family::G6_2k_2:
        run.emit_flag("nilpotency", name, nil.has_value() && *nil == 3);
        break;
      case Family::G4_1:
      case Family::G6_2k_1:
      case Family::G3_1:
      case Family::G3_2:
      case Family::G3_3:
      case Family::G4_3:
      case Family::G4_4:
      case Family::AffC:
      case Family::AffR:
        run.emit_flag("nilpotency", name, !nil.has_value());
        break;
      case Family::Abelian:
        run.emit_flag("nilpotency", name, nil.has_value() && *nil == 1);
        break;
      case Family::Heisenberg:
        run.emit_flag("nilpotency", name, nil.has_value() && *nil == 2);
        break;
      default:
        break;
    }
  }
}

void check_exp_and_eigen(Runner& run) {
  run.salt = 2;
  const double exp_tol = run.opt.pick(1e-9);
  const double eig_tol = run.opt.pick(1e-8);
  const double law_tol = run.opt.pick(1e-9);
  const double det_tol = run.opt.pick(1e-9);
  std::uint64_t stream = 0;
  for (const auto& spec : catalog_sweep(run.opt.k_max)) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    const int n = alg.n();
    double exp_defect = 0.0, eig_defect = 0.0, law_defect = 0.0,
           det_defect = 0.0;
    for (int s = 0; s < run.opt.exp_samples; ++s) {
      Rng rng = run.rng(stream++);
      const Eigen::VectorXd x = random_x(rng, n);
      const ExpAdMatrix closed = exp_ad_closed(alg, x);
      const AdMatrix ad = ad_matrix(alg, x);
      const Eigen::MatrixXd numeric = exp_matrix_numeric(ad.mat);
      exp_defect =
          std::max(exp_defect, (closed.mat - numeric).norm() / (1.0 + closed.mat.norm()));
      eig_defect = std::max(
          eig_defect, eigen_multiset_distance(ad_eigenvalues(alg, x),
                                              numeric_eigen_report(ad.mat)));
      law_defect = std::max(
          law_defect,
          (closed.mat * exp_ad_closed(alg, Eigen::VectorXd(-x)).mat -
           Eigen::MatrixXd::Identity(n, n))
              .norm());
      const double want_det = std::exp(ad.mat.trace());
      det_defect = std::max(det_defect, std::abs(closed.mat.determinant() - want_det) /
                                            (1.0 + std::abs(want_det)));
    }
    const std::string name = spec.display_name();
    run.emit("exp_oracle", name, run.opt.exp_samples, exp_defect, exp_tol, false);
    run.emit("eigen_closed_numeric", name, run.opt.exp_samples, eig_defect,
             eig_tol, false);
    run.emit("exp_group_law", name, run.opt.exp_samples, law_defect, law_tol, false);
    run.emit("exp_det_trace", name, run.opt.exp_samples, det_defect, det_tol, false);
  }
}

void check_continuity(Runner& run) {
  run.salt = 3;
  const double tol = run.opt.pick(1e-6);
  std::uint64_t stream = 0;
  for (const auto& spec : catalog_sweep(run.opt.k_max)) {
    // Branch coordinates per family: x3, or x4 for g4_3, both for g4_4.
    std::vector<int> branch_coords;
    switch (spec.table_family()) {
      case Family::G3_1:
      case Family::G3_2:
      case Family::G3_3:
      case Family::G4_1:
      case Family::G6_2k_1:
        branch_coords = {2};
        break;
      case Family::G4_3:
        branch_coords = {3};
        break;
      case Family::G4_4:
        branch_coords = {2, 3};
        break;
      default:
        continue;  // nilpotent rows have no singular limit
    }
    const LieAlgebra alg = LieAlgebra::build(spec);
    double defect = 0.0;
    for (int s = 0; s < 50; ++s) {
      Rng rng = run.rng(stream++);
      Eigen::VectorXd near = random_x(rng, alg.n());
      Eigen::VectorXd at = near;
      for (int c : branch_coords) {
        near[c] = 1e-8;
        at[c] = 0.0;
      }
      defect = std::max(defect, (exp_ad_closed(alg, near).mat -
                                 exp_ad_closed(alg, at).mat)
                                    .norm());
    }
    run.emit("exp_continuity", spec.display_name(), 50, defect, tol, false);
  }
}

void check_exponential_flags(Runner& run) {
  run.salt = 4;
  std::uint64_t stream = 0;
  for (const auto& spec : catalog_sweep(run.opt.k_max)) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    const bool expected =
        !(spec.table_family() == Family::G4_4 ||
          (spec.family == Family::G3_3 && spec.lambda == 0.0));
    bool flagged = false;  // some ad_X with a non-zero purely imaginary eigenvalue
    auto scan = [&](const Eigen::VectorXd& x) {
      for (const auto& [value, mult] : ad_eigenvalues(alg, x).eigenvalues)
        if (std::abs(value.real()) < 1e-12 && std::abs(value.imag()) > 1e-12)
          flagged = true;
    };
    for (int i = 0; i < alg.n(); ++i)
      scan(Eigen::VectorXd::Unit(alg.n(), i));
    for (int s = 0; s < run.opt.exp_samples; ++s) {
      Rng rng = run.rng(stream++);
      scan(random_x(rng, alg.n()));
    }
    const bool ok =
        is_exponential(alg) == expected && flagged == !expected;
    run.emit_flag("exponential_flags", spec.display_name(), ok,
                  expected ? "exponential" : "not exponential");
  }
}

void check_characters(Runner& run) {
  run.salt = 5;
  const double tol = run.opt.pick(1e-9);
  std::uint64_t stream = 0;
  for (const auto& spec : catalog_sweep(run.opt.k_max)) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    double defect = 0.0;
    for (int s = 0; s < run.opt.char_samples; ++s) {
      Rng rng = run.rng(stream++);
      const Eigen::VectorXd x = random_x(rng, alg.n());
      const double closed = character_ad(alg, x);
      const double traced = exp_ad_closed(alg, x).mat.trace();
      defect = std::max(defect, std::abs(closed - traced) / (1.0 + std::abs(closed)));
    }
    run.emit("character_table", spec.display_name(), run.opt.char_samples,
             defect, tol, false);
    const double at_zero = character_ad(alg, Eigen::VectorXd::Zero(alg.n()));
    run.emit_flag("character_at_zero", spec.display_name(),
                  at_zero == static_cast<double>(alg.n()));
  }
}

void check_orbits(Runner& run) {
  run.salt = 6;
  const double drift_tol = run.opt.pick(1e-8);
  std::uint64_t stream = 0;
  for (const auto& spec : catalog_sweep(run.opt.k_max)) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    const int n = alg.n();

    long mismatches = 0;
    bool strat_ok = true;
    for (int s = 0; s < run.opt.orbit_f_samples; ++s) {
      Rng rng = run.rng(stream++);
      const Functional F = stratified_functional(rng, n, s);
      const OrbitDescriptor d = orbit_classify(alg, F);
      if (orbit_dimension(alg, F) != d.dim) ++mismatches;
      const bool trivial = std::abs(F.f[0]) < 1e-12 && std::abs(F.f[1]) < 1e-12;
      if ((d.kind == OrbitKind::Trivial) != trivial) strat_ok = false;
    }
    run.emit("orbit_dim_concordance", spec.display_name(),
             run.opt.orbit_f_samples, static_cast<double>(mismatches), 0.0, true);
    run.emit_flag("orbit_stratification", spec.display_name(), strat_ok);

    double drift = 0.0;
    bool signs_ok = true;
    for (int fi = 0; fi < run.opt.conservation_f; ++fi) {
      Rng frng = run.rng(stream++);
      const Functional F = stratified_functional(frng, n, fi);
      const OrbitDescriptor d = orbit_classify(alg, F);
      for (int mv = 0; mv < run.opt.conservation_moves; ++mv) {
        Rng xrng = run.rng(stream++);
        const Functional p = coadjoint_move(alg, F, random_x(xrng, n));
        drift = std::max(drift, invariant_drift(d, p));
        if (!signs_preserved(d, p)) signs_ok = false;
      }
      // two successive moves stay on the stratum
      Rng xrng = run.rng(stream++);
      const Functional p1 = coadjoint_move(alg, F, random_x(xrng, n));
      const Functional p2 = coadjoint_move(alg, p1, random_x(xrng, n));
      drift = std::max(drift, invariant_drift(d, p2));
      if (!signs_preserved(d, p2)) signs_ok = false;
    }
    run.emit("orbit_invariant_conservation", spec.display_name(),
             static_cast<long>(run.opt.conservation_f) * run.opt.conservation_moves,
             drift, drift_tol, false);
    run.emit_flag("orbit_sign_constraints", spec.display_name(), signs_ok);
  }
}

void check_representations(Runner& run) {
  run.salt = 7;
  const double hom_tol = run.opt.pick(1e-12);
  const double shift_tol = run.opt.pick(1e-9);
  std::uint64_t stream = 0;

  for (const auto& spec : catalog_sweep(run.opt.k_max)) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    const int n = alg.n();
    const std::string name = spec.display_name();
    const MuReport mu = mu_report(alg);
    run.emit_flag("mu_lower_bound", name,
                  mu.upper_bound >=
                      static_cast<int>(std::ceil(std::sqrt(double(n)))));

    const Family fam = spec.family;
    const bool has_center_route = fam == Family::G4_1 || fam == Family::G6_2k_1;
    const bool trivial_center = alg.center().dim() == 0;
    if (!has_center_route && !trivial_center) continue;  // bound-only families

    const Representation rep = faithful_rep(alg);
    const int want_degree = trivial_center ? n : 3 * n / 2 + 1;
    run.emit_flag("faithful_degree", name, rep.degree == want_degree,
                  "degree " + std::to_string(rep.degree));
    run.emit("homomorphism_defect", name, 1, verify_homomorphism(alg, rep),
             hom_tol, false);
    run.emit_flag("faithful_rank", name, verify_faithful(alg, rep));

    if (has_center_route) {
      const LinearMap phi = build_phi(alg);
      run.emit("phi_homomorphism", name, 1, homomorphism_defect(phi), hom_tol,
               false);
      const Representation pi_phi =
          compose_rep(heisenberg_rep((n - 2) / 2), build_phi(alg));
      run.emit_flag("pi_phi_degree", name, pi_phi.degree == n / 2 + 1);
      run.emit_flag("pi_phi_center_injective", name,
                    pi_phi.images[1].norm() > 0.0 &&
                        pi_phi.images[0].norm() == 0.0);
      // kernel of pi.phi never meets span{X2}
      Eigen::MatrixXd stacked(n, pi_phi.degree * pi_phi.degree);
      for (int i = 0; i < n; ++i)
        stacked.row(i) = Eigen::Map<const Eigen::RowVectorXd>(
            pi_phi.images[i].data(), pi_phi.degree * pi_phi.degree);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullU);
      bool center_clean = true;
      for (int c = 0; c < svd.singularValues().size(); ++c)
        if (svd.singularValues()[c] <= 1e-9 * svd.singularValues()[0] &&
            std::abs(svd.matrixU()(1, c)) > 1e-9)
          center_clean = false;
      for (int c = svd.singularValues().size(); c < n; ++c)
        if (std::abs(svd.matrixU()(1, c)) > 1e-9) center_clean = false;
      run.emit_flag("pi_phi_kernel_misses_center", name, center_clean);

      const double shift = n / 2 + 1;  // n is even here
      double shift_defect = 0.0;
      for (int s = 0; s < run.opt.rep_char_samples; ++s) {
        Rng rng = run.rng(stream++);
        const Eigen::VectorXd x = random_x(rng, n);
        const double got = character(rep, x) - character_ad(alg, x);
        shift_defect = std::max(shift_defect, std::abs(got - shift));
      }
      run.emit("character_shift", name, run.opt.rep_char_samples, shift_defect,
               shift_tol, false);
    }
  }

  // exact minimal degrees known in low dimension
  const std::vector<std::pair<FamilySpec, int>> exact = {
      {FamilySpec::g4_1(), 4}, {FamilySpec::g4_2(), 4},
      {FamilySpec::g4_3(), 3}, {FamilySpec::g4_4(), 3},
      {FamilySpec::g5_2k(0), 4}, {FamilySpec::g6_2k_2(0), 5},
  };
  for (const auto& [spec, want] : exact) {
    const MuReport mu = mu_report(LieAlgebra::build(spec));
    run.emit_flag("mu_exact_table", spec.display_name(),
                  mu.exact_known && *mu.exact_known == want,
                  "mu = " + std::to_string(want));
  }
  for (int k = 0; k <= run.opt.k_max; ++k) {
    const MuReport mu = mu_report(LieAlgebra::build(FamilySpec::g6_2k_1(k)));
    run.emit_flag("mu_z_table", FamilySpec::g6_2k_1(k).display_name(),
                  mu.mu_z && *mu.mu_z == 4 + k);
  }
  {
    const MuReport mu = mu_report(LieAlgebra::build(FamilySpec::g4_1()));
    run.emit_flag("mu_z_table", "g4_1", mu.mu_z && *mu.mu_z == 3);
  }
}

void check_foliations(Runner& run) {
  run.salt = 8;
  const double tangency_tol = run.opt.pick(1e-10);
  const double h_tol = run.opt.pick(1e-10);
  const double jac_tol = run.opt.pick(1e-8);
  const double leaf_tol = run.opt.pick(1e-8);
  std::uint64_t stream = 0;

  std::vector<FamilySpec> specs;
  for (int k = 0; k <= run.opt.k_max; ++k) {
    specs.push_back(FamilySpec::g5_2k(k));
    specs.push_back(FamilySpec::g6_2k_1(k));
    specs.push_back(FamilySpec::g6_2k_2(k));
  }

  for (const auto& spec : specs) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    const int n = alg.n();
    const std::string name = spec.display_name();

    const TangentSystem sys = tangent_system(alg);
    run.emit_flag("tangent_field_count", name,
                  static_cast<int>(sys.fields.size()) == n - foliation_codim(alg));

    double tangency = 0.0;
    bool independent = true;
    for (int s = 0; s < run.opt.tangency_points; ++s) {
      Rng rng = run.rng(stream++);
      const Functional F = foliated_point(rng, n);
      tangency = std::max(tangency, verify_tangency(alg, F));
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.frame_at(F.f));
      if (svd.singularValues().minCoeff() <= 0.0) independent = false;
    }
    run.emit("foliation_tangency", name, run.opt.tangency_points, tangency,
             tangency_tol, false);
    run.emit_flag("tangent_fields_independent", name, independent);

    double leaf_drift = 0.0;
    bool separation_ok = true;
    for (int s = 0; s < run.opt.leaf_f_samples; ++s) {
      Rng rng = run.rng(stream++);
      const Functional F = foliated_point(rng, n);
      const LeafId leaf = leaf_of(alg, F);
      for (int mv = 0; mv < run.opt.leaf_moves; ++mv) {
        const Functional p = coadjoint_move(alg, F, random_x(rng, n));
        leaf_drift = std::max(leaf_drift, leaf_distance(leaf, leaf_of(alg, p)));
      }
      const Functional G = foliated_point(rng, n);
      const LeafId other = leaf_of(alg, G);
      if (leaf_distance(leaf, other) > 1e-6) {
        for (int mv = 0; mv < 50; ++mv) {
          const Functional p = coadjoint_move(alg, F, random_x(rng, n));
          if (leaf_distance(other, leaf_of(alg, p)) <= 1e-8) separation_ok = false;
        }
      }
    }
    run.emit("leaf_concordance", name,
             static_cast<long>(run.opt.leaf_f_samples) * run.opt.leaf_moves,
             leaf_drift, leaf_tol, false);
    run.emit_flag("leaf_separation", name, separation_ok);

    double jac = 0.0;
    for (int s = 0; s < run.opt.jacobian_triples; ++s) {
      Rng rng = run.rng(stream++);
      const Functional F1 = foliated_point(rng, n);
      const Functional F2 = coadjoint_move(alg, F1, random_x(rng, n));
      jac = std::max(jac, jacobian_constancy(alg, random_x(rng, n), F1, F2));
    }
    run.emit("foliation_jacobian", name, run.opt.jacobian_triples, jac, jac_tol,
             false);

    const std::string want_label = spec.family == Family::G5_2k
                                       ? "C0(R*) \xE2\x8A\x97 K"
                                       : "C0(R* x R) \xE2\x8A\x97 K";
    run.emit_flag("connes_label", name, connes_label(alg) == want_label,
                  want_label);
    run.emit_flag("foliation_codim", name,
                  foliation_codim(alg) == (spec.family == Family::G5_2k ? 1 : 2));
  }

  // h-identity per 6+2k dimension (the map itself is type-independent)
  for (int k = 0; k <= run.opt.k_max; ++k) {
    const int n = 6 + 2 * k;
    double residual = 0.0;
    bool fixed_ok = true;
    for (int s = 0; s < run.opt.h_points; ++s) {
      Rng rng = run.rng(stream++);
      Functional F{random_x(rng, n)};
      const double mag = rng.uniform(0.3, 3.0);
      F.f[1] = rng.uniform01() < 0.5 ? mag : -mag;  // |x4/x2| <= 10
      const Functional h = equivalence_h(F);
      const double lhs = h.f[0] * h.f[0] - 2.0 * h.f[1] * h.f[3];
      const double rhs = F.f[0] * std::exp(-F.f[3] / F.f[1]);
      residual = std::max(residual, std::abs(lhs - rhs));
      if (h.f[1] != F.f[1] || h.f[2] != F.f[2]) fixed_ok = false;
      for (int j = 4; j < n; ++j)
        if (h.f[j] != F.f[j]) fixed_ok = false;
    }
    const std::string name = "dim " + std::to_string(n);
    run.emit("h_identity", name, run.opt.h_points, residual, h_tol, false);
    run.emit_flag("h_fixed_components", name, fixed_ok);
  }
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CheckResult VerifyReport::aggregate(const std::string& id) const {
  CheckResult agg;
  agg.id = id;
  agg.pass = true;
  bool found = false;
  for (const auto& c : checks) {
    if (c.id != id) continue;
    found = true;
    agg.samples += c.samples;
    agg.max_defect = std::max(agg.max_defect, c.max_defect);
    agg.tolerance = c.tolerance;
    agg.exact = c.exact;
    agg.pass = agg.pass && c.pass;
  }
  if (!found) {
    agg.pass = false;
    agg.detail = "no such check";
  }
  return agg;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.options = options;
  Runner run{options, report.checks};
  check_structure(run);
  check_exp_and_eigen(run);
  check_continuity(run);
  check_exponential_flags(run);
  check_characters(run);
  check_orbits(run);
  check_representations(run);
  check_foliations(run);
  return report;
}

namespace {

std::string format_defect(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

std::string render_report_text(const VerifyReport& report) {
  std::string out;
  std::map<std::string, int> failures;
  for (const auto& c : report.checks) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.id + " " + c.family;
    out += " defect=" + format_defect(c.max_defect);
    out += c.exact ? " (exact)" : " tol=" + format_defect(c.tolerance);
    out += " samples=" + std::to_string(c.samples);
    if (!c.detail.empty()) out += " [" + c.detail + "]";
    out += "\n";
    if (!c.pass) ++failures[c.id];
  }
  out += report.all_pass() ? "ALL CHECKS PASSED\n" : "FAILURES:";
  if (!report.all_pass()) {
    for (const auto& [id, count] : failures)
      out += " " + id + "(" + std::to_string(count) + ")";
    out += "\n";
  }
  return out;
}

nlohmann::json render_report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["seed"] = report.options.seed;
  j["k_max"] = report.options.k_max;
  if (report.options.tolerance_override)
    j["tolerance"] = *report.options.tolerance_override;
  j["all_pass"] = report.all_pass();
  nlohmann::json checks = nlohmann::json::array();
  std::map<std::string, std::pair<int, int>> per_family;  // family -> (pass, total)
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id},
                      {"family", c.family},
                      {"samples", c.samples},
                      {"max_defect", c.max_defect},
                      {"tolerance", c.tolerance},
                      {"exact", c.exact},
                      {"pass", c.pass},
                      {"detail", c.detail}});
    auto& [pass, total] = per_family[c.family];
    if (c.pass) ++pass;
    ++total;
  }
  j["checks"] = checks;
  nlohmann::json fams = nlohmann::json::object();
  for (const auto& [family, counts] : per_family)
    fams[family] = {{"pass", counts.first}, {"total", counts.second}};
  j["per_family"] = fams;
  return j;
}

std::string render_report_csv(const VerifyReport& report) {
  std::string out = "id,family,samples,max_defect,tolerance,exact,pass\n";
  for (const auto& c : report.checks) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g", c.max_defect, c.tolerance);
    out += c.id + "," + c.family + "," + std::to_string(c.samples) + "," + buf +
           "," + (c.exact ? "1" : "0") + "," + (c.pass ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace lien2
