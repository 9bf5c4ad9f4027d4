#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "lien2/adjoint.hpp"
#include "lien2/algebra.hpp"
#include "lien2/coadjoint.hpp"
#include "lien2/errors.hpp"
#include "lien2/rng.hpp"

using namespace lien2;

namespace {

Functional func(std::initializer_list<double> v) {
  Eigen::VectorXd f(static_cast<int>(v.size()));
  int i = 0;
  for (double c : v) f[i++] = c;
  return Functional{f};
}

Eigen::VectorXd vec(std::initializer_list<double> v) { return func(v).f; }

Eigen::VectorXd random_x(Rng& rng, int n) {
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x[i] = rng.uniform(-3.0, 3.0);
  return x;
}

Functional stratified(Rng& rng, int n, int idx) {
  Functional F{random_x(rng, n)};
  if (idx % 5 == 0) F.f[0] = F.f[1] = 0.0;
  if (idx % 5 == 1) F.f[1] = 0.0;
  if (idx % 5 == 2) F.f[0] = 0.0;
  return F;
}

// rank oracle independent of the SVD route
int lu_rank(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

}  // namespace

TEST_CASE("coadjoint moves") {
  SUBCASE("g3_1 lambda=1: scaling flow") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g3_1(1.0));
    const double t = 0.7;
    const Functional p = coadjoint_move(alg, func({1, 1, 0}), vec({0, 0, t}));
    CHECK(p.f[0] == doctest::Approx(std::exp(t)).epsilon(1e-14));
    CHECK(p.f[1] == doctest::Approx(std::exp(t)).epsilon(1e-14));
    CHECK(p.f[2] == 0.0);
  }
  SUBCASE("x = 0 is the identity") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_2(1));
    Rng rng(3);
    const Functional F{random_x(rng, 8)};
    CHECK(coadjoint_move(alg, F, Eigen::VectorXd::Zero(8)).f == F.f);
  }
  SUBCASE("g4_2 parabolic flow") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_2());
    const double s = 1.25;
    const Functional p =
        coadjoint_move(alg, func({1, 0, 0, 0}), vec({0, 0, s, 0}));
    CHECK(p.f[0] == 1.0);
    CHECK(p.f[1] == s);
    CHECK(p.f[2] == 0.0);
    CHECK(p.f[3] == 0.5 * s * s);
  }
}

TEST_CASE("kirillov form") {
  SUBCASE("g4_4 at X1*") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_4());
    const Eigen::MatrixXd b = kirillov_form(alg, func({1, 0, 0, 0}));
    CHECK(b(3, 0) == 1.0);  // <F,[X4,X1]> = 1
    CHECK(b(2, 1) == 1.0);  // <F,[X3,X2]> = 1
    CHECK(b(0, 3) == -1.0);
    CHECK((b + b.transpose()).norm() == 0.0);
    CHECK(orbit_dimension(alg, func({1, 0, 0, 0})) == 4);
  }
  SUBCASE("zero functional gives the zero form") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(1));
    CHECK(kirillov_form(alg, Functional{Eigen::VectorXd::Zero(7)}).norm() == 0.0);
  }
  SUBCASE("g5_2k k=0 at X2*: rank 4 via the LU oracle") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(0));
    const Functional F = func({0, 1, 0, 0, 0});
    const Eigen::MatrixXd b = kirillov_form(alg, F);
    CHECK(lu_rank(b) == 4);
    CHECK(orbit_dimension(alg, F) == 4);
  }
  SUBCASE("skewness and even rank over random functionals") {
    Rng rng(13);
    for (const auto& spec : catalog_sweep(2)) {
      const LieAlgebra alg = LieAlgebra::build(spec);
      for (int s = 0; s < 20; ++s) {
        const Functional F = stratified(rng, alg.n(), s);
        const Eigen::MatrixXd b = kirillov_form(alg, F);
        CHECK((b + b.transpose()).norm() == 0.0);
        CHECK(orbit_dimension(alg, F) % 2 == 0);
      }
    }
  }
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dimension(LieAlgebra::build(FamilySpec::g4_3()),
                        func({1, 0, 0, 0})) == 4);
  CHECK(orbit_dimension(LieAlgebra::build(FamilySpec::g4_3()),
                        Functional{Eigen::VectorXd::Zero(4)}) == 0);
  CHECK(orbit_dimension(LieAlgebra::build(FamilySpec::g6_2k_1(1)),
                        func({0, 1, 0, 0, 0, 0, 0, 0})) == 6);
}

TEST_CASE("orbit classification") {
  SUBCASE("g5_2k k=0 hyperplane") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(0));
    const OrbitDescriptor d = orbit_classify(alg, func({0, 1, 0, 0, 0}));
    CHECK(d.kind == OrbitKind::Hyperplane);
    CHECK(d.dim == 4);
    CHECK(d.fixed_coords.at(1) == 1.0);
  }
  SUBCASE("f1 = f2 = 0 is trivial for every family") {
    for (const auto& spec : catalog_sweep(2)) {
      const LieAlgebra alg = LieAlgebra::build(spec);
      Eigen::VectorXd f = Eigen::VectorXd::Zero(alg.n());
      for (int i = 2; i < alg.n(); ++i) f[i] = 0.5 * i;
      const OrbitDescriptor d = orbit_classify(alg, Functional{f});
      CHECK(d.kind == OrbitKind::Trivial);
      CHECK(d.dim == 0);
    }
  }
  SUBCASE("g6_2k_2 k=0 parabolic cylinder with worked invariants") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_2(0));
    const OrbitDescriptor d = orbit_classify(alg, func({1, 2, 0, 0, 0, 0}));
    CHECK(d.kind == OrbitKind::ParabolicCylinder);
    CHECK(d.dim == 4);
    CHECK(d.invariant_values.at("x2") == 2.0);
    CHECK(d.invariant_values.at("q") == 1.0);  // 1 - 2*2*0
  }
  SUBCASE("g4_1 strata") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_1());
    const OrbitDescriptor half = orbit_classify(alg, func({1, 0, 0, 5}));
    CHECK(half.kind == OrbitKind::HalfPlane);
    CHECK(half.dim == 2);
    CHECK(half.fixed_coords.at(3) == 5.0);
    const OrbitDescriptor cyl = orbit_classify(alg, func({1, 1, 5, 0}));
    CHECK(cyl.kind == OrbitKind::Cylinder);
    const OrbitDescriptor plane = orbit_classify(alg, func({0, 1, 5, 0}));
    CHECK(plane.kind == OrbitKind::Plane);
  }
  SUBCASE("g4_3 half-space") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_3());
    const OrbitDescriptor d = orbit_classify(alg, func({-2, 1, 0, 0}));
    CHECK(d.kind == OrbitKind::HalfSpace);
    CHECK(d.dim == 4);
    REQUIRE(d.sign_constraints.size() == 1);
    CHECK(d.sign_constraints[0].coord == 0);
    CHECK(d.sign_constraints[0].sign == -1);
  }
  SUBCASE("g4_4 open dense orbit") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_4());
    const OrbitDescriptor d = orbit_classify(alg, func({1, 2, 3, 4}));
    CHECK(d.kind == OrbitKind::OpenDense);
    CHECK(d.dim == 4);
    CHECK(orbit_dimension(alg, func({1, 2, 3, 4})) == 4);
  }
  SUBCASE("composites are rejected") {
    CHECK_THROWS_AS(orbit_classify(LieAlgebra::build(FamilySpec::aff_r()),
                                   func({1, 0})),
                    UnsupportedFamily);
  }
}

TEST_CASE("orbit invariants at worked points") {
  SUBCASE("g4_1") {
    const auto inv = orbit_invariants(LieAlgebra::build(FamilySpec::g4_1()),
                                      func({1, 1, 5, 0}));
    CHECK(inv.at("x2") == 1.0);
    CHECK(inv.at("c") == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("g4_2") {
    const auto inv = orbit_invariants(LieAlgebra::build(FamilySpec::g4_2()),
                                      func({1, 3, 0, 4}));
    CHECK(inv.at("x1") == 1.0);
    CHECK(inv.at("q") == 1.0);  // 9 - 8
  }
  SUBCASE("g3_1 lambda=1 ratio invariant") {
    const auto inv = orbit_invariants(LieAlgebra::build(FamilySpec::g3_1(1.0)),
                                      func({2, 3, 0}));
    CHECK(inv.at("log_ratio") ==
          doctest::Approx(std::log(2.0) - std::log(3.0)).epsilon(1e-14));
  }
  SUBCASE("trivial orbits have no invariants") {
    CHECK_THROWS_AS(orbit_invariants(LieAlgebra::build(FamilySpec::g4_2()),
                                     func({0, 0, 1, 1})),
                    BranchUndefined);
  }
}

TEST_CASE("orbit sampling") {
  SUBCASE("zero functional stays zero") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_2());
    for (const auto& p :
         sample_orbit(alg, Functional{Eigen::VectorXd::Zero(4)}, 10, 5))
      CHECK(p.f.norm() == 0.0);
  }
  SUBCASE("count must be positive") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g3_2());
    CHECK_THROWS_AS(sample_orbit(alg, func({1, 2, 3}), 0, 1), InvalidParameter);
  }
  SUBCASE("deterministic for a fixed seed") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g3_2());
    const auto a = sample_orbit(alg, func({1, 2, 3}), 20, 42);
    const auto b = sample_orbit(alg, func({1, 2, 3}), 20, 42);
    for (int i = 0; i < 20; ++i) CHECK(a[i].f == b[i].f);
    const auto c = sample_orbit(alg, func({1, 2, 3}), 20, 43);
    CHECK(a[0].f != c[0].f);
  }
  SUBCASE("g4_3 samples keep the half-space and rank") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_3());
    const Functional F = func({1, 0, 0, 0});
    const OrbitDescriptor d = orbit_classify(alg, F);
    for (const auto& p : sample_orbit(alg, F, 500, 7)) {
      CHECK(p.f[0] > 0.0);
      CHECK(orbit_dimension(alg, p) == 4);
    }
    CHECK(d.dim == 4);
  }
  SUBCASE("sampled points conserve the invariants") {
    Rng rng(19);
    for (const auto& spec : catalog_sweep(2)) {
      CAPTURE(spec.display_name());
      const LieAlgebra alg = LieAlgebra::build(spec);
      double worst = 0.0;
      for (int fi = 0; fi < 10; ++fi) {
        const Functional F = stratified(rng, alg.n(), fi);
        const OrbitDescriptor d = orbit_classify(alg, F);
        for (const auto& p : sample_orbit(alg, F, 25, 1000 + fi)) {
          worst = std::max(worst, invariant_drift(d, p));
          CHECK(signs_preserved(d, p));
        }
      }
      CHECK(worst <= 1e-8);
    }
  }
}

TEST_CASE("invariant maps agree key-by-key at sampled points") {
  Rng rng(61);
  for (const auto& spec :
       {FamilySpec::g4_2(), FamilySpec::g5_2k(1), FamilySpec::g6_2k_2(0),
        FamilySpec::g3_1(0.5)}) {
    CAPTURE(spec.display_name());
    const LieAlgebra alg = LieAlgebra::build(spec);
    Functional F{random_x(rng, alg.n())};
    const auto base = orbit_invariants(alg, F);
    for (const auto& p : sample_orbit(alg, F, 50, 97)) {
      const auto moved = orbit_invariants(alg, p);
      REQUIRE(moved.size() == base.size());
      for (const auto& [name, value] : base) {
        REQUIRE(moved.count(name) == 1);
        CHECK(std::abs(moved.at(name) - value) <=
              1e-8 * (1.0 + std::abs(value)));
      }
    }
  }
}

TEST_CASE("dimension concordance and stratification") {
  Rng rng(29);
  for (const auto& spec : catalog_sweep(3)) {
    CAPTURE(spec.display_name());
    const LieAlgebra alg = LieAlgebra::build(spec);
    for (int s = 0; s < 100; ++s) {
      const Functional F = stratified(rng, alg.n(), s);
      const OrbitDescriptor d = orbit_classify(alg, F);
      CHECK(orbit_dimension(alg, F) == d.dim);
      CHECK(d.dim % 2 == 0);
      const bool trivial =
          std::abs(F.f[0]) < 1e-12 && std::abs(F.f[1]) < 1e-12;
      CHECK((d.kind == OrbitKind::Trivial) == trivial);
      for (const auto& [name, value] : d.invariant_values)
        CHECK(std::isfinite(value));
      for (const auto& [idx, value] : d.fixed_coords)
        CHECK(std::isfinite(value));
    }
  }
}

TEST_CASE("successive moves stay on the stratum") {
  Rng rng(37);
  for (const auto& spec : catalog_sweep(1)) {
    const LieAlgebra alg = LieAlgebra::build(spec);
    for (int s = 0; s < 10; ++s) {
      const Functional F = stratified(rng, alg.n(), s + 1);  // skip trivial
      const OrbitDescriptor d = orbit_classify(alg, F);
      const Functional p1 = coadjoint_move(alg, F, random_x(rng, alg.n()));
      const Functional p2 = coadjoint_move(alg, p1, random_x(rng, alg.n()));
      CHECK(invariant_drift(d, p2) <= 1e-8);
      CHECK(signs_preserved(d, p2));
      const OrbitDescriptor d2 = orbit_classify(alg, p2);
      CHECK(d2.kind == d.kind);
      CHECK(d2.dim == d.dim);
    }
  }
}

TEST_CASE("the parametric orbit forms satisfy the classified equations") {
  Rng rng(43);
  const double tol = 1e-9;

  SUBCASE("g3_1: (f1 s, f2 s^lambda, t), s > 0") {
    for (double lam : {-1.0, -0.5, 0.5, 1.0}) {
      const LieAlgebra alg = LieAlgebra::build(FamilySpec::g3_1(lam));
      const Functional F = func({1.5, -2.0, 0.3});
      const OrbitDescriptor d = orbit_classify(alg, F);
      for (int i = 0; i < 50; ++i) {
        const double s = std::exp(rng.uniform(-2.0, 2.0));
        const Functional p = func({1.5 * s, -2.0 * std::pow(s, lam),
                                   rng.uniform(-3.0, 3.0)});
        CHECK(invariant_drift(d, p) <= tol);
        CHECK(signs_preserved(d, p));
      }
    }
  }
  SUBCASE("g3_2: (f1 e^s, (f1 s + f2) e^s, t)") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g3_2());
    const Functional F = func({-0.8, 1.1, 0.0});
    const OrbitDescriptor d = orbit_classify(alg, F);
    for (int i = 0; i < 50; ++i) {
      const double s = rng.uniform(-2.0, 2.0);
      const Functional p =
          func({-0.8 * std::exp(s), (-0.8 * s + 1.1) * std::exp(s),
                rng.uniform(-3.0, 3.0)});
      CHECK(invariant_drift(d, p) <= tol);
    }
  }
  SUBCASE("g4_1: (f1 e^s, f2, t, f2 s + f4)") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_1());
    const Functional F = func({2.0, -1.5, 0.0, 0.25});
    const OrbitDescriptor d = orbit_classify(alg, F);
    for (int i = 0; i < 50; ++i) {
      const double s = rng.uniform(-2.0, 2.0);
      const Functional p = func({2.0 * std::exp(s), -1.5,
                                 rng.uniform(-3.0, 3.0), -1.5 * s + 0.25});
      CHECK(invariant_drift(d, p) <= tol);
    }
  }
  SUBCASE("g4_2: (f1, f1 s + f2, t, f1 s^2/2 + f2 s + f4)") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g4_2());
    const Functional F = func({1.25, 0.5, 0.0, -2.0});
    const OrbitDescriptor d = orbit_classify(alg, F);
    for (int i = 0; i < 50; ++i) {
      const double s = rng.uniform(-2.0, 2.0);
      const Functional p =
          func({1.25, 1.25 * s + 0.5, rng.uniform(-3.0, 3.0),
                0.5 * 1.25 * s * s + 0.5 * s - 2.0});
      CHECK(invariant_drift(d, p) <= tol);
    }
  }
  SUBCASE("g6_2k_1 k=0: (f1 e^s, f2, t, f2 s + f4, u, v)") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_1(0));
    const Functional F = func({-1.5, 0.75, 0.0, 0.5, 1.0, -1.0});
    const OrbitDescriptor d = orbit_classify(alg, F);
    for (int i = 0; i < 50; ++i) {
      const double s = rng.uniform(-2.0, 2.0);
      const Functional p =
          func({-1.5 * std::exp(s), 0.75, rng.uniform(-3.0, 3.0),
                0.75 * s + 0.5, rng.uniform(-3.0, 3.0),
                rng.uniform(-3.0, 3.0)});
      CHECK(invariant_drift(d, p) <= tol);
      CHECK(signs_preserved(d, p));
    }
  }
  SUBCASE("g5_2k k=1: any point of the hyperplane x2 = f2") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g5_2k(1));
    const Functional F = func({1.0, -2.0, 0.0, 0.0, 3.0, 0.0, 0.0});
    const OrbitDescriptor d = orbit_classify(alg, F);
    for (int i = 0; i < 50; ++i) {
      Functional p{random_x(rng, 7)};
      p.f[1] = -2.0;
      CHECK(invariant_drift(d, p) <= tol);
    }
  }
  SUBCASE("g6_2k_2 k=0: (f1 + f2 s, f2, t, f1 s + f2 s^2/2 + f4, u, v)") {
    const LieAlgebra alg = LieAlgebra::build(FamilySpec::g6_2k_2(0));
    const Functional F = func({0.5, 2.0, 0.0, 1.0, 0.0, 0.0});
    const OrbitDescriptor d = orbit_classify(alg, F);
    for (int i = 0; i < 50; ++i) {
      const double s = rng.uniform(-2.0, 2.0);
      const Functional p =
          func({0.5 + 2.0 * s, 2.0, rng.uniform(-3.0, 3.0),
                0.5 * s + 1.0 * s * s + 1.0, rng.uniform(-3.0, 3.0),
                rng.uniform(-3.0, 3.0)});
      CHECK(invariant_drift(d, p) <= tol);
    }
  }
}
