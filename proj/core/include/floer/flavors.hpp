#pragma once
// Balanced flavor assembly: Ĉ, C̄, Č from irreducible and reducible
// components, the maps i, j, p with their U-homotopies, the cone Ě, and
// the reducible tower model.
//
// Component names follow ∂^a_b : C^a → C^b. Module degrees of C^o, C^s, C^u
// are the flavor gradings of Ĉ and Č; inside C̄ a C^u generator of degree d
// sits in degree d − 1.

#include <optional>
#include <string>
#include <vector>

#include "floer/circle.hpp"

namespace floer {

struct BalancedComponents {
  GradedModule co, cs, cu;
  Ring ring;
  // irreducible counts, degree −1
  IntMatrix d_oo, d_os, d_uo, d_us;
  // reducible counts, degree −1 in C̄
  IntMatrix db_ss, db_uu, db_su, db_us;
  // U components, degree −2
  IntMatrix u_oo, u_uo, u_os, u_us;
  IntMatrix ub_su, ub_uu, ub_ss, ub_us;

  // All blocks zero, with shapes fixed by the three modules.
  static BalancedComponents zero(GradedModule co, GradedModule cs, GradedModule cu, Ring r = Ring::Z());
  bool operator==(const BalancedComponents&) const = default;
};

struct FlavorBundle {
  BalancedComponents parts;
  ChainComplex hat, bar, check;  // each carries its U
  GradedMap i, j, p;             // C̄ → Č, Č → Ĉ, Ĉ → C̄
  GradedMap k_i, k_j, k_p;
};

struct Check {
  std::string tag;
  bool ok = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool ok() const;
  std::optional<std::string> first_failure() const;
  bool passed(const std::string& tag) const;
};

struct AssemblyOptions {
  // Flip the sign of the composite terms −∂^u_o∂̄^s_u and −∂^u_s∂̄^s_u in ∂̌.
  bool alternate_check_sign = false;
};

// Builds the bundle without verifying anything.
FlavorBundle build_bundle(const BalancedComponents& c, const AssemblyOptions& opt = {});
// d² = 0 for all three, [∂, U] = 0 for all three, chain-map laws, then U-i, U-j, U-p.
CheckReport check_bundle(const FlavorBundle& b);
// build_bundle + check_bundle; throws AssemblyInconsistent naming the first failing check.
FlavorBundle assemble(const BalancedComponents& c, const AssemblyOptions& opt = {});

// Ě = Ĉ ⊕ C̄ with ě = [[∂̂, 0], [p, ∂̄]] and U = [[Û, 0], [K_p, Ū]].
struct ConeData {
  ChainComplex e;
  GradedMap k, l, ibar, jbar, K;  // K = [[0, −Π_u], [0, 0]]
  GradedMap w_k, w_l;             // U-witnesses of k and l
};
ConeData cone_of(const FlavorBundle& b);

// lk = 1, kl = 1 + ěK + Kě, j = j̄k, kī − ī homotopy, their S_U analogues and the
// three block identities they reduce to.
CheckReport cone_identities(const FlavorBundle& b);
// Same checks against supplied cone data, so each identity can be falsified.
CheckReport cone_identities(const FlavorBundle& b, const ConeData& cd);

struct TowerTerm {
  int step = 1;   // raises the x-exponent by this much (≥ 1)
  IntMatrix m;    // base map of degree 2·step − 2, commuting with ∂
};

struct TowerParams {
  ChainComplex base;
  int N = 3;
  std::vector<TowerTerm> higher;
};

// C̄ = base ⊗ K[x, x⁻¹] truncated to exponents [−N, N]; C^u holds x^{≥1}, C^s holds x^{≤0}; Ū = x + higher terms.
BalancedComponents tower_model(const TowerParams& t);
std::string tower_name(const std::string& g, int n);

// Ū_* : H_j(C̄) → H_{j−2}(C̄) at every j with both ends safe.
struct LocalizationReport {
  std::vector<int> degrees;
  bool iso = true;
};
LocalizationReport tower_localization(const FlavorBundle& b);

struct LadderReport {
  LesCertificate cone_les;          // 0 → S_U C̄ → S_U Ě → S_U Ĉ → 0
  bool triangle_exact = true;       // H(S_U C̄) →i H(S_U Č) →j H(S_U Ĉ) →p H(S_U C̄)
  std::vector<int> triangle_degrees;
  bool bar_vanishes = false;        // H(S_U C̄) = 0 at every safe window degree
  bool j_iso = true;
  std::vector<int> iso_degrees;
  LesCertificate rows[4];           // fundamental sequences of E(S_U Č) and E(S_U Ĉ)
  bool squares_commute = true;
  std::size_t delta_squares = 0;
  bool ok() const;
};
LadderReport ladder_check(const FlavorBundle& b, const Window& w);

struct FourFlavors {
  HomologyTable minus, infinity, plus, hat;
  LesCertificate first, second;
  bool ok() const { return first.ok() && second.ok(); }
  const HomologyTable& table(Flavor f) const;
};
FourFlavors four_flavors(const ChainComplex& C, const Window& w);

}  // namespace floer
