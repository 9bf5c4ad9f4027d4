#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lien2/json_io.hpp"

using namespace lien2;

namespace {

Functional func(std::initializer_list<double> v) {
  Eigen::VectorXd f(static_cast<int>(v.size()));
  int i = 0;
  for (double c : v) f[i++] = c;
  return Functional{f};
}

}  // namespace

TEST_CASE("algebra JSON round trip") {
  SUBCASE("catalog families keep the tensor bit-exact") {
    for (const auto& spec : extended_sweep(2)) {
      CAPTURE(spec.display_name());
      const LieAlgebra alg = LieAlgebra::build(spec);
      const json j = algebra_to_json(alg);
      const LieAlgebra back = algebra_from_json(j);
      CHECK(back.n() == alg.n());
      CHECK(back.tensor() == alg.tensor());
      CHECK(back.spec() == alg.spec());
    }
  }
  SUBCASE("composites") {
    const LieAlgebra sum = LieAlgebra::build(FamilySpec::direct_sum(
        {FamilySpec::g3_1(0.5), FamilySpec::heisenberg(1)}));
    const LieAlgebra back = algebra_from_json(algebra_to_json(sum));
    CHECK(back.tensor() == sum.tensor());
  }
  SUBCASE("schema shape: only i<j brackets, non-zero coefficients") {
    const json j = algebra_to_json(LieAlgebra::build(FamilySpec::g6_2k_2(1)));
    CHECK(j.contains("n"));
    CHECK(j.contains("family"));
    CHECK(j.contains("params"));
    for (const auto& b : j.at("brackets")) {
      CHECK(b.at("i").get<int>() < b.at("j").get<int>());
      for (const auto& [k, v] : b.at("coeffs").items()) {
        CHECK(v.get<double>() != 0.0);
        CHECK(std::stoi(k) >= 1);
      }
    }
  }
  SUBCASE("g3_2 lists its two brackets") {
    const json j = algebra_to_json(LieAlgebra::build(FamilySpec::g3_2()));
    REQUIRE(j.at("brackets").size() == 2);
    // [X1,X3] = -X1 stored from the i<j side
    bool found = false;
    for (const auto& b : j.at("brackets"))
      if (b.at("i") == 1 && b.at("j") == 3 && b.at("coeffs").at("1") == -1.0)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("representation JSON carries the declared fields") {
  const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_1());
  const Representation rep = faithful_rep(alg);
  const json j = representation_to_json(alg, rep);
  CHECK(j.at("degree") == 7);
  CHECK(j.at("faithful") == true);
  CHECK(j.at("homomorphism_defect").get<double>() <= 1e-12);
  REQUIRE(j.at("images").size() == 4);
  CHECK(j.at("images")[0].size() == 7);
  const Eigen::MatrixXd img0 = matrix_from_json(j.at("images")[0]);
  CHECK((img0 - rep.images[0]).norm() == 0.0);
}

TEST_CASE("exp matrix JSON has the branch flag") {
  const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_3());
  Eigen::VectorXd x(4);
  x << 1, 2, 3, 0;
  const json j = exp_ad_to_json(exp_ad_closed(alg, x));
  CHECK(j.at("branch") == "x4=0");
  CHECK(j.at("matrix").size() == 4);
  x << 1, 2, 3, 0.5;
  CHECK(exp_ad_to_json(exp_ad_closed(alg, x)).at("branch") == "generic");
}

TEST_CASE("orbit descriptor JSON") {
  const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_2(0));
  const OrbitDescriptor d = orbit_classify(alg, func({1, 2, 0, 0, 0, 0}));
  const json j = orbit_descriptor_to_json(d);
  CHECK(j.at("kind") == "parabolic_cylinder");
  CHECK(j.at("dim") == 4);
  CHECK(j.at("invariants").at("x2") == 2.0);
  CHECK(j.at("invariants").at("q") == 1.0);
  CHECK(j.at("constraints").is_array());

  const OrbitDescriptor half =
      orbit_classify(LieAlgebra::build(FamilySpec::g4_3()), func({2, 0, 0, 0}));
  const json jh = orbit_descriptor_to_json(half);
  REQUIRE(jh.at("constraints").size() == 1);
  CHECK(jh.at("constraints")[0] == "x1 > 0");
}

TEST_CASE("CSV rows") {
  SUBCASE("character table") {
    const FamilySpec spec = FamilySpec::g3_1(0.5);
    CHECK(character_csv_header(3) == "family,params,x1,x2,x3,chi_ad");
    Eigen::VectorXd x(3);
    x << 1, 2, 3;
    const std::string row = character_csv_row(spec, x, 4.5);
    CHECK(row == "g3_1,lambda=0.5,1,2,3,4.5");
  }
  SUBCASE("orbit samples") {
    CHECK(orbit_csv_header(4) ==
          "family,params,seed,x1,x2,x3,x4,invariant_drift");
    const std::string row =
        orbit_csv_row(FamilySpec::g4_2(), 7, func({1, 0, 0, 0}), 0.0);
    CHECK(row == "g4_2,,7,1,0,0,0,0");
  }
  SUBCASE("leaf rows") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(0));
    const Functional F = func({7, 2, 0, 0, 0});
    const LeafId leaf = leaf_of(alg, F);
    CHECK(leaf_csv_header(5) ==
          "family,params,f1,f2,f3,f4,f5,fibration_1,fibration_2");
    CHECK(leaf_csv_row(FamilySpec::g5_2k(0), F, leaf) ==
          "g5_2k,k=0,7,2,0,0,0,2,");
  }
  SUBCASE("number formatting round-trips") {
    CHECK(csv_number(0.1) == "0.10000000000000001");
    CHECK(std::stod(csv_number(1.0 / 3.0)) == 1.0 / 3.0);
  }
}
