#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lien2/adjoint.hpp"
#include "lien2/algebra.hpp"
#include "lien2/coadjoint.hpp"
#include "lien2/errors.hpp"
#include "lien2/foliation.hpp"
#include "lien2/json_io.hpp"
#include "lien2/representation.hpp"
#include "lien2/rng.hpp"
#include "lien2/verify.hpp"

namespace {

using lien2::json;

struct GlobalOpts {
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  double zero_threshold = 1e-12;
  bool quiet = false;
};

struct FamilyOpts {
  std::string family;
  std::optional<double> lambda;
  std::optional<int> k;
  std::optional<int> m;

  lien2::FamilySpec parse() const {
    return lien2::parse_family(family, lambda, k, m);
  }
};

void add_family_options(CLI::App* cmd, FamilyOpts& fam) {
  cmd->add_option("--family", fam.family, "family tag (g3_1 ... g6_2k_2, aff_r, aff_c, heisenberg, abelian)")
      ->required();
  cmd->add_option("--lambda", fam.lambda, "parameter for g3_1 / g3_3");
  cmd->add_option("--k", fam.k, "parameter for g5_2k / g6_2k_*");
  cmd->add_option("--m", fam.m, "parameter for heisenberg / abelian");
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string token = text.substr(pos, next - pos);
    if (token.empty()) throw lien2::InvalidParameter("empty coordinate in --point");
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size())
      throw lien2::InvalidParameter("bad coordinate: " + token);
    out.push_back(v);
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

void write_payload(const GlobalOpts& g, const std::string& payload) {
  if (g.output.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(g.output, std::ios::binary);
    f << payload;
  }
}

int cmd_algebra(const GlobalOpts& g, const FamilyOpts& fam, int characters,
                const std::string& ad_at, const std::string& exp_at) {
  const lien2::LieAlgebra alg = lien2::LieAlgebra::build(fam.parse());
  json j;
  j["command"] = "algebra";
  j["algebra"] = lien2::algebra_to_json(alg);
  const double jacobi = alg.jacobi_defect();
  const double antisym = alg.antisymmetry_defect();
  j["checks"] = {{"jacobi_defect", jacobi},
                 {"antisymmetry_defect", antisym},
                 {"derived_dim", alg.derived_ideal().dim()},
                 {"center_dim", alg.center().dim()}};
  const auto nil = alg.nilpotency_class();
  j["checks"]["nilpotency_class"] = nil ? json(*nil) : json("not_nilpotent");

  if (!ad_at.empty()) {
    const auto pt = parse_point(ad_at);
    if (static_cast<int>(pt.size()) != alg.n())
      throw lien2::InvalidParameter("--ad-at needs n coordinates");
    j["ad"] = lien2::matrix_to_json(
        lien2::ad_matrix(alg, Eigen::Map<const Eigen::VectorXd>(pt.data(), pt.size())).mat);
  }
  if (!exp_at.empty()) {
    const auto pt = parse_point(exp_at);
    if (static_cast<int>(pt.size()) != alg.n())
      throw lien2::InvalidParameter("--exp-at needs n coordinates");
    j["exp_ad"] = lien2::exp_ad_to_json(lien2::exp_ad_closed(
        alg, Eigen::Map<const Eigen::VectorXd>(pt.data(), pt.size())));
  }

  if (characters > 0) {
    std::string csv = lien2::character_csv_header(alg.n()) + "\n";
    for (int s = 0; s < characters; ++s) {
      lien2::Rng rng = lien2::Rng::derived(g.seed, s);
      Eigen::VectorXd x(alg.n());
      for (int i = 0; i < alg.n(); ++i) x[i] = rng.uniform(-3.0, 3.0);
      csv += lien2::character_csv_row(alg.spec(), x, lien2::character_ad(alg, x)) + "\n";
    }
    write_payload(g, csv);
  } else {
    write_payload(g, j.dump(2));
  }
  return (jacobi <= g.tolerance && antisym <= g.tolerance) ? 0 : 1;
}

int cmd_rep(const GlobalOpts& g, const FamilyOpts& fam) {
  const lien2::LieAlgebra alg = lien2::LieAlgebra::build(fam.parse());
  json j;
  j["command"] = "rep";
  j["family"] = alg.spec().tag();
  j["params"] = lien2::family_params_json(alg.spec());
  j["mu"] = lien2::mu_report_to_json(lien2::mu_report(alg));
  int rc = 0;
  try {
    const lien2::Representation rep = lien2::faithful_rep(alg);
    const double defect = lien2::verify_homomorphism(alg, rep);
    const bool faithful = lien2::verify_faithful(alg, rep);
    j["representation"] = lien2::representation_to_json(alg, rep);
    if (!faithful || defect > g.tolerance) rc = 1;
  } catch (const lien2::UnsupportedFamily&) {
    j["representation"] = nullptr;
    j["note"] = "degree bound only; no construction exposed for this family";
  }
  write_payload(g, j.dump(2));
  return rc;
}

int cmd_orbit(const GlobalOpts& g, const FamilyOpts& fam,
              const std::string& point, int samples) {
  const lien2::LieAlgebra alg = lien2::LieAlgebra::build(fam.parse());
  const auto pt = parse_point(point);
  if (static_cast<int>(pt.size()) != alg.n())
    throw lien2::InvalidParameter("--point needs n coordinates");
  lien2::Functional F{Eigen::Map<const Eigen::VectorXd>(pt.data(), pt.size())};

  const lien2::OrbitDescriptor desc = lien2::orbit_classify(alg, F, g.zero_threshold);
  const int rank = lien2::orbit_dimension(alg, F);
  json j;
  j["command"] = "orbit";
  j["family"] = alg.spec().tag();
  j["params"] = lien2::family_params_json(alg.spec());
  j["descriptor"] = lien2::orbit_descriptor_to_json(desc);
  j["kirillov_rank"] = rank;
  j["dim_match"] = rank == desc.dim;

  if (samples > 0) {
    // descriptor to stdout, sample CSV to --output (or appended to stdout)
    std::cout << j.dump(2) << "\n";
    std::string csv = lien2::orbit_csv_header(alg.n()) + "\n";
    for (const auto& p : lien2::sample_orbit(alg, F, samples, g.seed))
      csv += lien2::orbit_csv_row(alg.spec(), g.seed, p,
                                  lien2::invariant_drift(desc, p)) + "\n";
    write_payload(g, csv);
  } else {
    write_payload(g, j.dump(2));
  }
  return rank == desc.dim ? 0 : 1;
}

int cmd_foliation_info(const GlobalOpts& g, const FamilyOpts& fam) {
  const lien2::LieAlgebra alg = lien2::LieAlgebra::build(fam.parse());
  const lien2::TangentSystem sys = lien2::tangent_system(alg);
  json fields = json::array();
  for (const auto& f : sys.fields) fields.push_back(f.label());
  json j;
  j["command"] = "foliation info";
  j["family"] = alg.spec().tag();
  j["params"] = lien2::family_params_json(alg.spec());
  j["codim"] = lien2::foliation_codim(alg);
  j["leaf_dim"] = alg.n() - lien2::foliation_codim(alg);
  j["connes_label"] = lien2::connes_label(alg);
  j["tangent_system"] = fields;
  write_payload(g, j.dump(2));
  return 0;
}

int cmd_foliation_verify(const GlobalOpts& g, const FamilyOpts& fam, int samples) {
  const lien2::LieAlgebra alg = lien2::LieAlgebra::build(fam.parse());
  const int n = alg.n();
  double tangency = 0.0, jac = 0.0, h_resid = 0.0;
  for (int s = 0; s < samples; ++s) {
    lien2::Rng rng = lien2::Rng::derived(g.seed, s);
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) f[i] = rng.uniform(-3.0, 3.0);
    const double mag = rng.uniform(0.3, 3.0);
    f[1] = rng.uniform01() < 0.5 ? mag : -mag;
    lien2::Functional F{f};
    tangency = std::max(tangency, lien2::verify_tangency(alg, F));

    Eigen::VectorXd y(n), x(n);
    for (int i = 0; i < n; ++i) y[i] = rng.uniform(-3.0, 3.0);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(-3.0, 3.0);
    const lien2::Functional F2 = lien2::coadjoint_move(alg, F, y);
    jac = std::max(jac, lien2::jacobian_constancy(alg, x, F, F2));

    if (n % 2 == 0) {
      const lien2::Functional h = lien2::equivalence_h(F);
      const double lhs = h.f[0] * h.f[0] - 2.0 * h.f[1] * h.f[3];
      const double rhs = F.f[0] * std::exp(-F.f[3] / F.f[1]);
      h_resid = std::max(h_resid, std::abs(lhs - rhs));
    }
  }
  json j;
  j["command"] = "foliation verify";
  j["family"] = alg.spec().tag();
  j["params"] = lien2::family_params_json(alg.spec());
  j["samples"] = samples;
  j["seed"] = g.seed;
  j["tangency_max_defect"] = tangency;
  j["jacobian_max_defect"] = jac;
  if (n % 2 == 0) j["h_identity_max_residual"] = h_resid;
  const bool pass = tangency <= 1e-10 && jac <= 1e-8 && h_resid <= 1e-10;
  j["pass"] = pass;
  write_payload(g, j.dump(2));
  return pass ? 0 : 1;
}

int cmd_foliation_hmap(const GlobalOpts& g, const FamilyOpts& fam,
                       const std::string& point) {
  const lien2::LieAlgebra alg = lien2::LieAlgebra::build(fam.parse());
  const auto pt = parse_point(point);
  if (static_cast<int>(pt.size()) != alg.n())
    throw lien2::InvalidParameter("--point needs n coordinates");
  lien2::Functional F{Eigen::Map<const Eigen::VectorXd>(pt.data(), pt.size())};
  const lien2::Functional h = lien2::equivalence_h(F, g.zero_threshold);
  const double lhs = h.f[0] * h.f[0] - 2.0 * h.f[1] * h.f[3];
  const double rhs = F.f[0] * std::exp(-F.f[3] / F.f[1]);
  json j;
  j["command"] = "foliation hmap";
  json img = json::array();
  for (int i = 0; i < h.n(); ++i) img.push_back(h.f[i]);
  j["image"] = img;
  j["invariant_residual"] = std::abs(lhs - rhs);
  write_payload(g, j.dump(2));
  return std::abs(lhs - rhs) <= 1e-10 ? 0 : 1;
}

int cmd_foliation_leaf(const GlobalOpts& g, const FamilyOpts& fam,
                       const std::string& point) {
  const lien2::LieAlgebra alg = lien2::LieAlgebra::build(fam.parse());
  const auto pt = parse_point(point);
  if (static_cast<int>(pt.size()) != alg.n())
    throw lien2::InvalidParameter("--point needs n coordinates");
  lien2::Functional F{Eigen::Map<const Eigen::VectorXd>(pt.data(), pt.size())};
  const lien2::LeafId leaf = lien2::leaf_of(alg, F, g.zero_threshold);
  std::string csv = lien2::leaf_csv_header(alg.n()) + "\n" +
                    lien2::leaf_csv_row(alg.spec(), F, leaf) + "\n";
  write_payload(g, csv);
  return 0;
}

int cmd_verify_all(const GlobalOpts& g, int k_max, bool tol_given) {
  lien2::VerifyOptions opt;
  opt.seed = g.seed;
  opt.k_max = k_max;
  if (tol_given) opt.tolerance_override = g.tolerance;
  const lien2::VerifyReport report = lien2::run_verification(opt);
  std::string payload;
  if (g.format == "json") {
    nlohmann::json j = lien2::render_report_json(report);
    j["command"] = "verify-all";
    payload = j.dump(2) + "\n";
  }
  else if (g.format == "csv")
    payload = lien2::render_report_csv(report);
  else
    payload = lien2::render_report_text(report);
  write_payload(g, payload);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  if (const char* env_seed = std::getenv("LIEN2_SEED"))
    g.seed = std::strtoull(env_seed, nullptr, 10);

  CLI::App app{"Solvable Lie algebras with 2-dimensional derived ideal: "
               "construction, adjoint exponentials, representations, "
               "coadjoint orbits and their foliations"};
  app.require_subcommand(1);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output", g.output, "write the payload to a file");
  app.add_option("--seed", g.seed, "RNG seed (env LIEN2_SEED overrides the default)");
  auto* tol_opt = app.add_option("--tolerance", g.tolerance, "check tolerance")
                      ->check(CLI::PositiveNumber);
  app.add_option("--zero-threshold", g.zero_threshold,
                 "coordinate magnitude treated as exactly zero in the orbit case split")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", g.quiet, "suppress timing output on stderr");

  FamilyOpts fam;
  int characters = 0, samples = 0, fol_samples = 500, k_max = 3;
  std::string point, ad_at, exp_at;

  CLI::App* algebra = app.add_subcommand("algebra", "build an algebra and report its invariants");
  algebra->fallthrough();
  add_family_options(algebra, fam);
  algebra->add_option("--characters", characters, "emit a CSV of N sampled adjoint characters")
      ->check(CLI::NonNegativeNumber);
  algebra->add_option("--ad-at", ad_at, "comma-separated point: include ad_X in the report");
  algebra->add_option("--exp-at", exp_at, "comma-separated point: include exp(ad_X) in the report");

  CLI::App* rep = app.add_subcommand("rep", "faithful representation and minimal-degree report");
  rep->fallthrough();
  add_family_options(rep, fam);

  CLI::App* orbit = app.add_subcommand("orbit", "classify the coadjoint orbit through a point");
  orbit->fallthrough();
  add_family_options(orbit, fam);
  orbit->add_option("--point", point, "comma-separated dual coordinates f1,...,fn")->required();
  orbit->add_option("--samples", samples, "also emit a CSV of sampled orbit points")
      ->check(CLI::NonNegativeNumber);

  CLI::App* foliation = app.add_subcommand("foliation", "leaf structure of the maximal orbits");
  foliation->fallthrough();
  add_family_options(foliation, fam);
  foliation->require_subcommand(1);
  CLI::App* fol_info = foliation->add_subcommand("info", "codimension, tangent system, C*-label");
  fol_info->fallthrough();
  CLI::App* fol_verify = foliation->add_subcommand("verify", "tangency / h-identity / Jacobian sweeps");
  fol_verify->fallthrough();
  fol_verify->add_option("--samples", fol_samples, "sweep size")->check(CLI::PositiveNumber);
  CLI::App* fol_hmap = foliation->add_subcommand("hmap", "apply the type-1 -> type-2 equivalence map");
  fol_hmap->fallthrough();
  fol_hmap->add_option("--point", point, "comma-separated dual coordinates")->required();
  CLI::App* fol_leaf = foliation->add_subcommand("leaf", "leaf assignment CSV for a point");
  fol_leaf->fallthrough();
  fol_leaf->add_option("--point", point, "comma-separated dual coordinates")->required();

  CLI::App* verify_all = app.add_subcommand("verify-all", "run every invariant suite across the sweep");
  verify_all->fallthrough();
  verify_all->add_option("--k-max", k_max, "k sweep upper bound")->default_val(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (app.got_subcommand(algebra))
      rc = cmd_algebra(g, fam, characters, ad_at, exp_at);
    else if (app.got_subcommand(rep))
      rc = cmd_rep(g, fam);
    else if (app.got_subcommand(orbit))
      rc = cmd_orbit(g, fam, point, samples);
    else if (app.got_subcommand(foliation)) {
      if (foliation->got_subcommand(fol_info)) rc = cmd_foliation_info(g, fam);
      else if (foliation->got_subcommand(fol_verify)) rc = cmd_foliation_verify(g, fam, fol_samples);
      else if (foliation->got_subcommand(fol_hmap)) rc = cmd_foliation_hmap(g, fam, point);
      else rc = cmd_foliation_leaf(g, fam, point);
    } else if (app.got_subcommand(verify_all)) {
      rc = cmd_verify_all(g, k_max, tol_opt->count() > 0);
    }
  } catch (const lien2::UnsupportedFamily& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (!g.quiet) {
    const auto elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::fprintf(stderr, "wall time: %.3f s\n", elapsed);
  }
  return rc;
}
