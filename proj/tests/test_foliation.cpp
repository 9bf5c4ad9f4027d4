#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "lien2/algebra.hpp"
#include "lien2/coadjoint.hpp"
#include "lien2/errors.hpp"
#include "lien2/foliation.hpp"
#include "lien2/rng.hpp"

using namespace lien2;

namespace {

Functional func(std::initializer_list<double> v) {
  Eigen::VectorXd f(static_cast<int>(v.size()));
  int i = 0;
  for (double c : v) f[i++] = c;
  return Functional{f};
}

Eigen::VectorXd random_x(Rng& rng, int n) {
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform(-3.0, 3.0);
  return x;
}

Functional foliated_point(Rng& rng, int n) {
  Functional F{random_x(rng, n)};
  const double mag = rng.uniform(0.3, 3.0);
  F.f[1] = rng.uniform01() < 0.5 ? mag : -mag;
  return F;
}

std::vector<FamilySpec> foliated_specs(int k_max) {
  std::vector<FamilySpec> out;
  for (int k = 0; k <= k_max; ++k) {
    out.push_back(FamilySpec::g5_2k(k));
    out.push_back(FamilySpec::g6_2k_1(k));
    out.push_back(FamilySpec::g6_2k_2(k));
  }
  return out;
}

}  // namespace

TEST_CASE("foliated manifold membership") {
  const LieAlgebra g5 = LieAlgebra::build(FamilySpec::g5_2k(0));
  CHECK(in_foliated_manifold(g5, func({0, 1, 0, 0, 0})));
  CHECK_FALSE(in_foliated_manifold(g5, func({5, 0, 1, 1, 1})));
  const LieAlgebra g62 = LieAlgebra::build(FamilySpec::g6_2k_2(1));
  CHECK(in_foliated_manifold(g62, func({1, -2, 0, 0, 0, 0, 0, 0})));
  CHECK_THROWS_AS(
      in_foliated_manifold(LieAlgebra::build(FamilySpec::g4_1()), func({1, 1, 0, 0})),
      UnsupportedFamily);
}

TEST_CASE("leaf assignment") {
  SUBCASE("g5_2k: the x2 fibration") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(0));
    const LeafId leaf = leaf_of(alg, func({7, 2, 0, 0, 0}));
    REQUIRE(leaf.value.size() == 1);
    CHECK(leaf.value[0] == 2.0);
  }
  SUBCASE("g6_2k_2: (x2, x1^2 - 2 x2 x4)") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_2(0));
    const LeafId leaf = leaf_of(alg, func({1, 2, 0, 0, 0, 0}));
    REQUIRE(leaf.value.size() == 2);
    CHECK(leaf.value[0] == 2.0);
    CHECK(leaf.value[1] == 1.0);
  }
  SUBCASE("g6_2k_1: exponential invariant as the second component") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_1(0));
    const LeafId leaf = leaf_of(alg, func({1, 1, 0, 0, 0, 0}));
    REQUIRE(leaf.value.size() == 2);
    CHECK(leaf.value[0] == 1.0);
    CHECK(leaf.value[1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(leaf.sign_second == 1);
  }
  SUBCASE("outside V_G") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(0));
    CHECK_THROWS_AS(leaf_of(alg, func({1, 0, 0, 0, 0})), NotInFoliatedManifold);
  }
  SUBCASE("leaf constant along orbits, distinct leaves separated") {
    Rng rng(7);
    for (const auto& spec : foliated_specs(2)) {
      CAPTURE(spec.display_name());
      const LieAlgebra alg = LieAlgebra::build(spec);
      double drift = 0.0;
      for (int s = 0; s < 30; ++s) {
        const Functional F = foliated_point(rng, alg.n());
        const LeafId leaf = leaf_of(alg, F);
        for (int mv = 0; mv < 10; ++mv) {
          const Functional p = coadjoint_move(alg, F, random_x(rng, alg.n()));
          drift = std::max(drift, leaf_distance(leaf, leaf_of(alg, p)));
        }
        const Functional G = foliated_point(rng, alg.n());
        if (leaf_distance(leaf, leaf_of(alg, G)) > 1e-6) {
          for (int mv = 0; mv < 10; ++mv) {
            const Functional p = coadjoint_move(alg, F, random_x(rng, alg.n()));
            CHECK(leaf_distance(leaf_of(alg, G), leaf_of(alg, p)) > 1e-8);
          }
        }
      }
      CHECK(drift <= 1e-8);
    }
  }
}

TEST_CASE("tangent systems") {
  SUBCASE("g5_2k k=0: four coordinate fields") {
    const TangentSystem sys =
        tangent_system(LieAlgebra::build(FamilySpec::g5_2k(0)));
    REQUIRE(sys.fields.size() == 4);
    CHECK(sys.fields[0].label() == "d1");
    CHECK(sys.fields[1].label() == "d3");
    CHECK(sys.fields[2].label() == "d4");
    CHECK(sys.fields[3].label() == "d5");
  }
  SUBCASE("g6_2k_1 k=0 leading field") {
    const TangentSystem sys =
        tangent_system(LieAlgebra::build(FamilySpec::g6_2k_1(0)));
    REQUIRE(sys.fields.size() == 4);
    CHECK(sys.fields[0].label() == "x1*d1 + x2*d4");
    const Eigen::VectorXd v = sys.fields[0].eval(func({2, 5, 0, 0, 0, 0}).f);
    CHECK(v[0] == 2.0);
    CHECK(v[3] == 5.0);
    CHECK(v.norm() == std::hypot(2.0, 5.0));
  }
  SUBCASE("g6_2k_2 k=0 leading field swaps the weights") {
    const TangentSystem sys =
        tangent_system(LieAlgebra::build(FamilySpec::g6_2k_2(0)));
    CHECK(sys.fields[0].label() == "x2*d1 + x1*d4");
    const Eigen::VectorXd v = sys.fields[0].eval(func({2, 5, 0, 0, 0, 0}).f);
    CHECK(v[0] == 5.0);
    CHECK(v[3] == 2.0);
  }
  SUBCASE("field count is 4+2k") {
    for (const auto& spec : foliated_specs(3)) {
      const TangentSystem sys = tangent_system(LieAlgebra::build(spec));
      CHECK(static_cast<int>(sys.fields.size()) == 4 + 2 * spec.k);
    }
  }
}

TEST_CASE("tangency") {
  SUBCASE("g5_2k is exactly tangent") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(1));
    CHECK(verify_tangency(alg, func({1, 2, 3, 4, 5, 6, 7})) == 0.0);
  }
  SUBCASE("g6_2k_2 symbolic cancellation") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_2(0));
    CHECK(verify_tangency(alg, func({1, 2, 0, 0, 0, 0})) == 0.0);
  }
  SUBCASE("g6_2k_1 symbolic cancellation") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_1(0));
    CHECK(verify_tangency(alg, func({1, 1, 0, 0, 0, 0})) <= 1e-15);
  }
  SUBCASE("sweep stays under 1e-10") {
    Rng rng(11);
    for (const auto& spec : foliated_specs(3)) {
      CAPTURE(spec.display_name());
      const LieAlgebra alg = LieAlgebra::build(spec);
      double worst = 0.0;
      for (int s = 0; s < 100; ++s)
        worst = std::max(worst,
                         verify_tangency(alg, foliated_point(rng, alg.n())));
      CHECK(worst <= 1e-10);
    }
  }
}

TEST_CASE("the equivalence map h") {
  SUBCASE("fixed point of the worked example") {
    const Functional h = equivalence_h(func({1, 1, 0, 0, 0, 0}));
    CHECK(h.f[0] == 1.0);
    CHECK(h.f[1] == 1.0);
    CHECK(h.f[3] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(h.f[0] * h.f[0] - 2.0 * h.f[1] * h.f[3] ==
          doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("x1 = x4 = 0 maps to zero invariant") {
    const Functional h = equivalence_h(func({0, 1, 0.7, 0, 0, 0}));
    CHECK(h.f[0] == 0.0);
    CHECK(h.f[3] == 0.0);
    CHECK(h.f[2] == 0.7);
  }
  SUBCASE("worked arithmetic identity at (2,1,0,1,...)") {
    const Functional F = func({2, 1, 0, 1, 0, 0});
    const double before = F.f[0] * std::exp(-F.f[3] / F.f[1]);  // 2/e
    const Functional h = equivalence_h(F);
    CHECK(h.f[0] == 3.0);
    CHECK(h.f[3] == doctest::Approx((9.0 - 2.0 * std::exp(-1.0)) / 2.0)
                        .epsilon(1e-14));
    CHECK(h.f[0] * h.f[0] - 2.0 * h.f[1] * h.f[3] ==
          doctest::Approx(before).epsilon(1e-12));
  }
  SUBCASE("identity and fixed components over a sweep") {
    Rng rng(13);
    for (int k = 0; k <= 3; ++k) {
      const int n = 6 + 2 * k;
      double worst = 0.0;
      for (int s = 0; s < 200; ++s) {
        const Functional F = foliated_point(rng, n);
        const Functional h = equivalence_h(F);
        const double lhs = h.f[0] * h.f[0] - 2.0 * h.f[1] * h.f[3];
        const double rhs = F.f[0] * std::exp(-F.f[3] / F.f[1]);
        worst = std::max(worst, std::abs(lhs - rhs));
        CHECK(h.f[1] == F.f[1]);
        CHECK(h.f[2] == F.f[2]);
        for (int j = 4; j < n; ++j) CHECK(h.f[j] == F.f[j]);
      }
      CHECK(worst <= 1e-10);
    }
  }
  SUBCASE("h maps type-1 leaves onto type-2 leaves") {
    const LieAlgebra t1 = LieAlgebra::build(FamilySpec::g6_2k_1(0));
    const LieAlgebra t2 = LieAlgebra::build(FamilySpec::g6_2k_2(0));
    Rng rng(17);
    const Functional F = foliated_point(rng, 6);
    const LeafId leaf1 = leaf_of(t1, F);
    // image leaf in the type-2 fibration has the same invariant pair
    for (int mv = 0; mv < 20; ++mv) {
      const Functional p = coadjoint_move(t1, F, random_x(rng, 6));
      const LeafId image_leaf = leaf_of(t2, equivalence_h(p));
      CHECK(image_leaf.value[0] == doctest::Approx(leaf1.value[0]));
      CHECK(image_leaf.value[1] ==
            doctest::Approx(leaf1.value[1]).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(equivalence_h(func({1, 0, 0, 0, 0, 0})),
                  NotInFoliatedManifold);
  CHECK_THROWS_AS(equivalence_h(func({1, 1, 0})), DimensionMismatch);
}

TEST_CASE("leafwise jacobian constancy") {
  SUBCASE("identity move") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(0));
    Rng rng(23);
    const Functional F1 = foliated_point(rng, 5);
    const Functional F2 = coadjoint_move(alg, F1, random_x(rng, 5));
    CHECK(jacobian_constancy(alg, Eigen::VectorXd::Zero(5), F1, F2) == 0.0);
  }
  SUBCASE("random triples per family") {
    Rng rng(29);
    for (const auto& spec : foliated_specs(3)) {
      CAPTURE(spec.display_name());
      const LieAlgebra alg = LieAlgebra::build(spec);
      double worst = 0.0;
      for (int s = 0; s < 25; ++s) {
        const Functional F1 = foliated_point(rng, alg.n());
        const Functional F2 = coadjoint_move(alg, F1, random_x(rng, alg.n()));
        worst = std::max(
            worst, jacobian_constancy(alg, random_x(rng, alg.n()), F1, F2));
      }
      CHECK(worst <= 1e-8);
    }
  }
  SUBCASE("leaf mismatch is rejected") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(0));
    CHECK_THROWS_AS(jacobian_constancy(alg, Eigen::VectorXd::Zero(5),
                                       func({0, 1, 0, 0, 0}),
                                       func({0, 2, 0, 0, 0})),
                    LeafMismatch);
  }
}

TEST_CASE("labels and codimension") {
  CHECK(connes_label(LieAlgebra::build(FamilySpec::g5_2k(0))) ==
        "C0(R*) \xE2\x8A\x97 K");
  CHECK(connes_label(LieAlgebra::build(FamilySpec::g6_2k_1(1))) ==
        "C0(R* x R) \xE2\x8A\x97 K");
  CHECK(connes_label(LieAlgebra::build(FamilySpec::g6_2k_2(2))) ==
        "C0(R* x R) \xE2\x8A\x97 K");
  CHECK(foliation_codim(LieAlgebra::build(FamilySpec::g5_2k(2))) == 1);
  CHECK(foliation_codim(LieAlgebra::build(FamilySpec::g6_2k_1(0))) == 2);
  CHECK_THROWS_AS(connes_label(LieAlgebra::build(FamilySpec::g3_2())),
                  UnsupportedFamily);
}
