#pragma once

#include <stdexcept>
#include <string>

namespace lien2 {

/// Parameter outside its documented range (lambda, k, m, point length, ...).
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Vector/matrix sizes do not match the algebra dimension.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation only defined for (a subset of) the classified indecomposable families.
struct UnsupportedFamily : std::domain_error {
  using std::domain_error::domain_error;
};

/// Two representations of different algebras were combined.
struct AlgebraMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Orbit invariant requested on a stratum where its defining branch is void.
struct BranchUndefined : std::domain_error {
  using std::domain_error::domain_error;
};

/// Functional lies outside V_G = {x*_2 != 0}.
struct NotInFoliatedManifold : std::domain_error {
  using std::domain_error::domain_error;
};

/// Two functionals expected on the same leaf are not.
struct LeafMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace lien2
