#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lien2 {

/// The solvable Lie algebras with 2-dimensional derived ideal (non 2-step
/// nilpotent), plus the standard building blocks for decomposable ones.
enum class Family {
  G3_1,      // [X3,X1]=X1, [X3,X2]=lambda X2          (0 < |lambda| <= 1)
  G3_2,      // [X3,X1]=X1, [X3,X2]=X1+X2
  G3_3,      // [X3,X1]=lambda X1 - X2, [X3,X2]=X1+lambda X2   (lambda >= 0)
  G4_1,      // [X3,X1]=X1, [X3,X4]=X2
  G4_2,      // [X3,X2]=X1, [X3,X4]=X2
  G4_3,      // [X3,X2]=X1, [X4,X1]=X1, [X4,X2]=X2
  G4_4,      // aff(C) in the classification basis
  G5_2k,     // n=5+2k: [X3,X4]=X1, [X3,X1]=[X4,X5]=...=[X_{4+2k},X_{5+2k}]=X2
  G6_2k_1,   // n=6+2k: [X3,X1]=X1, [X3,X4]=[X5,X6]=...=[X_{5+2k},X_{6+2k}]=X2
  G6_2k_2,   // n=6+2k: [X3,X4]=X1, [X3,X1]=[X5,X6]=...=[X_{5+2k},X_{6+2k}]=X2
  AffR,      // [X1,X2]=X2
  AffC,      // same structure constants as G4_4
  Heisenberg,  // h_{2m+1}: [X_i, X_{m+i}] = X_{2m+1}
  Abelian,     // R^m
  DirectSum,
  TrivialExtension,  // base (+) R^m
};

/// Identifies one algebra of the catalog, or a composite built from parts.
struct FamilySpec {
  Family family = Family::Abelian;
  double lambda = 0.0;  // G3_1: 0 < |lambda| <= 1; G3_3: lambda >= 0
  int k = 0;            // G5_2k, G6_2k_1, G6_2k_2
  int m = 1;            // Heisenberg h_{2m+1}, Abelian R^m
  std::vector<FamilySpec> parts;  // DirectSum / TrivialExtension

  static FamilySpec g3_1(double lambda);
  static FamilySpec g3_2();
  static FamilySpec g3_3(double lambda);
  static FamilySpec g4_1();
  static FamilySpec g4_2();
  static FamilySpec g4_3();
  static FamilySpec g4_4();
  static FamilySpec g5_2k(int k);
  static FamilySpec g6_2k_1(int k);
  static FamilySpec g6_2k_2(int k);
  static FamilySpec aff_r();
  static FamilySpec aff_c();
  static FamilySpec heisenberg(int m);
  static FamilySpec abelian(int m);
  static FamilySpec direct_sum(std::vector<FamilySpec> parts);
  static FamilySpec trivial_extension(FamilySpec base, int abelian_dim);

  int dimension() const;
  bool composite() const;
  /// One of the ten families of the classification (aff(C) counts as G4_4).
  bool classified() const;
  /// Family used for closed-form tables (folds AffC onto G4_4).
  Family table_family() const;
  bool uses_lambda() const;
  bool uses_k() const;
  bool uses_m() const;

  std::string tag() const;           // CLI tag, e.g. "g6_2k_1"
  std::string param_string() const;  // "lambda=0.5", "k=2", "m=3" or ""
  std::string display_name() const;  // tag plus params

  /// Throws InvalidParameter if the parameters are out of range.
  void validate() const;

  bool operator==(const FamilySpec& other) const;
};

/// Parses a CLI family tag; params are taken from the optional flags.
FamilySpec parse_family(const std::string& tag, std::optional<double> lambda,
                        std::optional<int> k, std::optional<int> m);

/// All ten classified families over the default parameter sweep:
/// lambda in {-1,-0.5,0.5,1} for G3_1, {0,0.5,1} for G3_3, k in 0..k_max.
std::vector<FamilySpec> catalog_sweep(int k_max = 3);

/// catalog_sweep plus the decomposable building blocks (aff(R), aff(C),
/// Heisenberg, abelian), for algebra-level exactness checks.
std::vector<FamilySpec> extended_sweep(int k_max = 3);

}  // namespace lien2
