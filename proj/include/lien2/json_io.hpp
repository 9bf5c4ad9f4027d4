#pragma once

#include <string>

#include <json.hpp>

#include "lien2/adjoint.hpp"
#include "lien2/algebra.hpp"
#include "lien2/coadjoint.hpp"
#include "lien2/foliation.hpp"
#include "lien2/representation.hpp"

namespace lien2 {

using json = nlohmann::json;

/// {"n", "family", "params", "brackets": [{"i","j","coeffs":{"k": v}}]},
/// 1-based indices, only i<j non-zero brackets listed.
json algebra_to_json(const LieAlgebra& alg);
LieAlgebra algebra_from_json(const json& j);

json family_params_json(const FamilySpec& spec);
FamilySpec family_from_json(const std::string& tag, const json& params);

json representation_to_json(const LieAlgebra& alg, const Representation& r);

json matrix_to_json(const Eigen::MatrixXd& m);  // row-major nested arrays
Eigen::MatrixXd matrix_from_json(const json& j);

/// Row-major matrix plus the "branch" naming the singular limit taken.
json exp_ad_to_json(const ExpAdMatrix& e);

json orbit_descriptor_to_json(const OrbitDescriptor& d);

json mu_report_to_json(const MuReport& r);

/// CSV row helpers (deterministic %.17g formatting).
std::string csv_number(double v);
std::string character_csv_header(int n);
std::string character_csv_row(const FamilySpec& spec, const Eigen::VectorXd& x,
                              double chi);
std::string orbit_csv_header(int n);
std::string orbit_csv_row(const FamilySpec& spec, std::uint64_t seed,
                          const Functional& p, double drift);
std::string leaf_csv_header(int n);
std::string leaf_csv_row(const FamilySpec& spec, const Functional& F,
                         const LeafId& leaf);

}  // namespace lien2
