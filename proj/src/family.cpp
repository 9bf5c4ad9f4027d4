#include "lien2/family.hpp"

#include <cmath>
#include <sstream>

#include "lien2/errors.hpp"

namespace lien2 {

FamilySpec FamilySpec::g3_1(double lambda) {
  FamilySpec s;
  s.family = Family::G3_1;
  s.lambda = lambda;
  s.validate();
  return s;
}

FamilySpec FamilySpec::g3_2() {
  FamilySpec s;
  s.family = Family::G3_2;
  return s;
}

FamilySpec FamilySpec::g3_3(double lambda) {
  FamilySpec s;
  s.family = Family::G3_3;
  s.lambda = lambda;
  s.validate();
  return s;
}

FamilySpec FamilySpec::g4_1() {
  FamilySpec s;
  s.family = Family::G4_1;
  return s;
}
FamilySpec FamilySpec::g4_2() {
  FamilySpec s;
  s.family = Family::G4_2;
  return s;
}
FamilySpec FamilySpec::g4_3() {
  FamilySpec s;
  s.family = Family::G4_3;
  return s;
}
FamilySpec FamilySpec::g4_4() {
  FamilySpec s;
  s.family = Family::G4_4;
  return s;
}

FamilySpec FamilySpec::g5_2k(int k) {
  FamilySpec s;
  s.family = Family::G5_2k;
  s.k = k;
  s.validate();
  return s;
}

FamilySpec FamilySpec::g6_2k_1(int k) {
  FamilySpec s;
  s.family = Family::G6_2k_1;
  s.k = k;
  s.validate();
  return s;
}

FamilySpec FamilySpec::g6_2k_2(int k) {
  FamilySpec s;
  s.family = Family::G6_2k_2;
  s.k = k;
  s.validate();
  return s;
}

FamilySpec FamilySpec::aff_r() {
  FamilySpec s;
  s.family = Family::AffR;
  return s;
}
FamilySpec FamilySpec::aff_c() {
  FamilySpec s;
  s.family = Family::AffC;
  return s;
}

FamilySpec FamilySpec::heisenberg(int m) {
  FamilySpec s;
  s.family = Family::Heisenberg;
  s.m = m;
  s.validate();
  return s;
}

FamilySpec FamilySpec::abelian(int m) {
  FamilySpec s;
  s.family = Family::Abelian;
  s.m = m;
  s.validate();
  return s;
}

FamilySpec FamilySpec::direct_sum(std::vector<FamilySpec> parts) {
  FamilySpec s;
  s.family = Family::DirectSum;
  s.parts = std::move(parts);
  s.validate();
  return s;
}

FamilySpec FamilySpec::trivial_extension(FamilySpec base, int abelian_dim) {
  FamilySpec s;
  s.family = Family::TrivialExtension;
  s.parts.push_back(std::move(base));
  s.parts.push_back(abelian(abelian_dim));
  s.validate();
  return s;
}

int FamilySpec::dimension() const {
  switch (family) {
    case Family::G3_1:
    case Family::G3_2:
    case Family::G3_3:
      return 3;
    case Family::G4_1:
    case Family::G4_2:
    case Family::G4_3:
    case Family::G4_4:
    case Family::AffC:
      return 4;
    case Family::G5_2k:
      return 5 + 2 * k;
    case Family::G6_2k_1:
    case Family::G6_2k_2:
      return 6 + 2 * k;
    case Family::AffR:
      return 2;
    case Family::Heisenberg:
      return 2 * m + 1;
    case Family::Abelian:
      return m;
    case Family::DirectSum:
    case Family::TrivialExtension: {
      int n = 0;
      for (const auto& p : parts) n += p.dimension();
      return n;
    }
  }
  return 0;
}

bool FamilySpec::composite() const {
  return family == Family::DirectSum || family == Family::TrivialExtension;
}

bool FamilySpec::classified() const {
  switch (table_family()) {
    case Family::G3_1:
    case Family::G3_2:
    case Family::G3_3:
    case Family::G4_1:
    case Family::G4_2:
    case Family::G4_3:
    case Family::G4_4:
    case Family::G5_2k:
    case Family::G6_2k_1:
    case Family::G6_2k_2:
      return true;
    default:
      return false;
  }
}

Family FamilySpec::table_family() const {
  return family == Family::AffC ? Family::G4_4 : family;
}

bool FamilySpec::uses_lambda() const {
  return family == Family::G3_1 || family == Family::G3_3;
}

bool FamilySpec::uses_k() const {
  return family == Family::G5_2k || family == Family::G6_2k_1 ||
         family == Family::G6_2k_2;
}

bool FamilySpec::uses_m() const {
  return family == Family::Heisenberg || family == Family::Abelian;
}

std::string FamilySpec::tag() const {
  switch (family) {
    case Family::G3_1: return "g3_1";
    case Family::G3_2: return "g3_2";
    case Family::G3_3: return "g3_3";
    case Family::G4_1: return "g4_1";
    case Family::G4_2: return "g4_2";
    case Family::G4_3: return "g4_3";
    case Family::G4_4: return "g4_4";
    case Family::G5_2k: return "g5_2k";
    case Family::G6_2k_1: return "g6_2k_1";
    case Family::G6_2k_2: return "g6_2k_2";
    case Family::AffR: return "aff_r";
    case Family::AffC: return "aff_c";
    case Family::Heisenberg: return "heisenberg";
    case Family::Abelian: return "abelian";
    case Family::DirectSum: return "direct_sum";
    case Family::TrivialExtension: return "trivial_extension";
  }
  return "?";
}

namespace {
std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}
}  // namespace

std::string FamilySpec::param_string() const {
  if (uses_lambda()) return "lambda=" + format_double(lambda);
  if (uses_k()) return "k=" + std::to_string(k);
  if (uses_m()) return "m=" + std::to_string(m);
  if (composite()) {
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += "+";
      out += p.display_name();
    }
    return "parts=" + out;
  }
  return "";
}

std::string FamilySpec::display_name() const {
  std::string p = param_string();
  return p.empty() ? tag() : tag() + "(" + p + ")";
}

void FamilySpec::validate() const {
  switch (family) {
    case Family::G3_1:
      if (!(std::abs(lambda) > 0.0 && std::abs(lambda) <= 1.0))
        throw InvalidParameter("g3_1 requires 0 < |lambda| <= 1, got " +
                               format_double(lambda));
      break;
    case Family::G3_3:
      if (!(lambda >= 0.0))
        throw InvalidParameter("g3_3 requires lambda >= 0, got " +
                               format_double(lambda));
      break;
    case Family::G5_2k:
    case Family::G6_2k_1:
    case Family::G6_2k_2:
      if (k < 0) throw InvalidParameter("k must be non-negative");
      break;
    case Family::Heisenberg:
    case Family::Abelian:
      if (m < 1) throw InvalidParameter("m must be a positive integer");
      break;
    case Family::DirectSum:
      if (parts.size() < 2)
        throw InvalidParameter("direct sum needs at least two parts");
      for (const auto& p : parts) p.validate();
      break;
    case Family::TrivialExtension:
      if (parts.size() != 2 || parts.back().family != Family::Abelian)
        throw InvalidParameter(
            "trivial extension is [base, abelian(m)]");
      for (const auto& p : parts) p.validate();
      break;
    default:
      break;
  }
}

bool FamilySpec::operator==(const FamilySpec& other) const {
  if (family != other.family) return false;
  if (uses_lambda() && lambda != other.lambda) return false;
  if (uses_k() && k != other.k) return false;
  if (uses_m() && m != other.m) return false;
  if (composite()) {
    if (parts.size() != other.parts.size()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!(parts[i] == other.parts[i])) return false;
  }
  return true;
}

FamilySpec parse_family(const std::string& tag, std::optional<double> lambda,
                        std::optional<int> k, std::optional<int> m) {
  FamilySpec s;
  if (tag == "g3_1") s.family = Family::G3_1;
  else if (tag == "g3_2") s.family = Family::G3_2;
  else if (tag == "g3_3") s.family = Family::G3_3;
  else if (tag == "g4_1") s.family = Family::G4_1;
  else if (tag == "g4_2") s.family = Family::G4_2;
  else if (tag == "g4_3") s.family = Family::G4_3;
  else if (tag == "g4_4") s.family = Family::G4_4;
  else if (tag == "g5_2k") s.family = Family::G5_2k;
  else if (tag == "g6_2k_1") s.family = Family::G6_2k_1;
  else if (tag == "g6_2k_2") s.family = Family::G6_2k_2;
  else if (tag == "aff_r") s.family = Family::AffR;
  else if (tag == "aff_c") s.family = Family::AffC;
  else if (tag == "heisenberg") s.family = Family::Heisenberg;
  else if (tag == "abelian") s.family = Family::Abelian;
  else throw InvalidParameter("unknown family tag: " + tag);

  if (lambda) {
    if (!s.uses_lambda())
      throw InvalidParameter("--lambda not applicable to " + tag);
    s.lambda = *lambda;
  } else if (s.uses_lambda()) {
    throw InvalidParameter(tag + " requires --lambda");
  }
  if (k) {
    if (!s.uses_k()) throw InvalidParameter("--k not applicable to " + tag);
    s.k = *k;
  }
  if (m) {
    if (!s.uses_m()) throw InvalidParameter("--m not applicable to " + tag);
    s.m = *m;
  }
  s.validate();
  return s;
}

std::vector<FamilySpec> catalog_sweep(int k_max) {
  std::vector<FamilySpec> out;
  for (double l : {-1.0, -0.5, 0.5, 1.0}) out.push_back(FamilySpec::g3_1(l));
  out.push_back(FamilySpec::g3_2());
  for (double l : {0.0, 0.5, 1.0}) out.push_back(FamilySpec::g3_3(l));
  out.push_back(FamilySpec::g4_1());
  out.push_back(FamilySpec::g4_2());
  out.push_back(FamilySpec::g4_3());
  out.push_back(FamilySpec::g4_4());
  for (int k = 0; k <= k_max; ++k) out.push_back(FamilySpec::g5_2k(k));
  for (int k = 0; k <= k_max; ++k) out.push_back(FamilySpec::g6_2k_1(k));
  for (int k = 0; k <= k_max; ++k) out.push_back(FamilySpec::g6_2k_2(k));
  return out;
}

std::vector<FamilySpec> extended_sweep(int k_max) {
  std::vector<FamilySpec> out = catalog_sweep(k_max);
  out.push_back(FamilySpec::aff_r());
  out.push_back(FamilySpec::aff_c());
  for (int m : {1, 2, 3}) out.push_back(FamilySpec::heisenberg(m));
  for (int m : {1, 4}) out.push_back(FamilySpec::abelian(m));
  return out;
}

}  // namespace lien2
