#include "lien2/json_io.hpp"

#include <cstdio>

#include "lien2/errors.hpp"

namespace lien2 {

json family_params_json(const FamilySpec& spec) {
  json params = json::object();
  if (spec.uses_lambda()) params["lambda"] = spec.lambda;
  if (spec.uses_k()) params["k"] = spec.k;
  if (spec.uses_m()) params["m"] = spec.m;
  if (spec.composite()) {
    json parts = json::array();
    for (const auto& p : spec.parts)
      parts.push_back({{"family", p.tag()}, {"params", family_params_json(p)}});
    params["parts"] = parts;
  }
  return params;
}

FamilySpec family_from_json(const std::string& tag, const json& params) {
  if (tag == "direct_sum" || tag == "trivial_extension") {
    std::vector<FamilySpec> parts;
    for (const auto& p : params.at("parts"))
      parts.push_back(family_from_json(p.at("family").get<std::string>(),
                                       p.at("params")));
    FamilySpec s;
    s.family = tag == "direct_sum" ? Family::DirectSum : Family::TrivialExtension;
    s.parts = std::move(parts);
    s.validate();
    return s;
  }
  std::optional<double> lambda;
  std::optional<int> k, m;
  if (params.contains("lambda")) lambda = params["lambda"].get<double>();
  if (params.contains("k")) k = params["k"].get<int>();
  if (params.contains("m")) m = params["m"].get<int>();
  return parse_family(tag, lambda, k, m);
}

json algebra_to_json(const LieAlgebra& alg) {
  json j;
  j["n"] = alg.n();
  j["family"] = alg.spec().tag();
  j["params"] = family_params_json(alg.spec());
  json brackets = json::array();
  for (int i = 0; i < alg.n(); ++i)
    for (int jj = i + 1; jj < alg.n(); ++jj) {
      json coeffs = json::object();
      for (int k = 0; k < alg.n(); ++k)
        if (alg.c(i, jj, k) != 0.0)
          coeffs[std::to_string(k + 1)] = alg.c(i, jj, k);
      if (!coeffs.empty())
        brackets.push_back({{"i", i + 1}, {"j", jj + 1}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  FamilySpec spec =
      family_from_json(j.at("family").get<std::string>(), j.at("params"));
  if (spec.dimension() != n)
    throw InvalidParameter("algebra_from_json: n does not match the family");
  std::vector<double> c(static_cast<std::size_t>(n) * n * n, 0.0);
  for (const auto& b : j.at("brackets")) {
    const int i = b.at("i").get<int>() - 1;
    const int jj = b.at("j").get<int>() - 1;
    for (const auto& [key, value] : b.at("coeffs").items()) {
      const int k = std::stoi(key) - 1;
      if (i < 0 || jj < 0 || k < 0 || i >= n || jj >= n || k >= n)
        throw InvalidParameter("algebra_from_json: index out of range");
      c[(static_cast<std::size_t>(i) * n + jj) * n + k] = value.get<double>();
      c[(static_cast<std::size_t>(jj) * n + i) * n + k] = -value.get<double>();
    }
  }
  return LieAlgebra::from_structure_constants(spec, n, std::move(c));
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j[0].size()) : 0;
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
  return m;
}

json representation_to_json(const LieAlgebra& alg, const Representation& r) {
  json j;
  j["degree"] = r.degree;
  j["label"] = r.label;
  json images = json::array();
  for (const auto& img : r.images) images.push_back(matrix_to_json(img));
  j["images"] = images;
  j["homomorphism_defect"] = verify_homomorphism(alg, r);
  j["faithful"] = r.faithful ? *r.faithful : verify_faithful(alg, r);
  return j;
}

json exp_ad_to_json(const ExpAdMatrix& e) {
  return json{{"matrix", matrix_to_json(e.mat)}, {"branch", e.branch}};
}

json orbit_descriptor_to_json(const OrbitDescriptor& d) {
  json j;
  j["kind"] = orbit_kind_name(d.kind);
  j["dim"] = d.dim;
  json invariants = json::object();
  for (const auto& [name, value] : d.invariant_values) invariants[name] = value;
  for (const auto& [idx, value] : d.fixed_coords)
    invariants["x" + std::to_string(idx + 1)] = value;
  j["invariants"] = invariants;
  j["constraints"] = d.constraint_strings();
  return j;
}

json mu_report_to_json(const MuReport& r) {
  json j;
  j["upper_bound"] = r.upper_bound;
  if (r.exact_known) j["exact_known"] = *r.exact_known;
  j["rule_applied"] = mu_rule_name(r.rule_applied);
  if (r.mu_z) j["mu_z"] = *r.mu_z;
  j["construction_available"] = r.construction_available;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string character_csv_header(int n) {
  std::string h = "family,params";
  for (int i = 1; i <= n; ++i) h += ",x" + std::to_string(i);
  h += ",chi_ad";
  return h;
}

std::string character_csv_row(const FamilySpec& spec, const Eigen::VectorXd& x,
                              double chi) {
  std::string row = spec.tag() + "," + spec.param_string();
  for (int i = 0; i < x.size(); ++i) row += "," + csv_number(x[i]);
  row += "," + csv_number(chi);
  return row;
}

std::string orbit_csv_header(int n) {
  std::string h = "family,params,seed";
  for (int i = 1; i <= n; ++i) h += ",x" + std::to_string(i);
  h += ",invariant_drift";
  return h;
}

std::string orbit_csv_row(const FamilySpec& spec, std::uint64_t seed,
                          const Functional& p, double drift) {
  std::string row =
      spec.tag() + "," + spec.param_string() + "," + std::to_string(seed);
  for (int i = 0; i < p.f.size(); ++i) row += "," + csv_number(p.f[i]);
  row += "," + csv_number(drift);
  return row;
}

std::string leaf_csv_header(int n) {
  std::string h = "family,params";
  for (int i = 1; i <= n; ++i) h += ",f" + std::to_string(i);
  h += ",fibration_1,fibration_2";
  return h;
}

std::string leaf_csv_row(const FamilySpec& spec, const Functional& F,
                         const LeafId& leaf) {
  std::string row = spec.tag() + "," + spec.param_string();
  for (int i = 0; i < F.f.size(); ++i) row += "," + csv_number(F.f[i]);
  row += "," + csv_number(leaf.value[0]);
  row += ",";
  if (leaf.value.size() > 1) row += csv_number(leaf.value[1]);
  return row;
}

}  // namespace lien2
