#pragma once
// Circle-action functors: S_U (U-modules to Y-modules) and the four E_Y flavors.

#include <optional>
#include <string>
#include <vector>

#include "floer/chain.hpp"

namespace floer {

enum class Flavor { minus, infinity, plus, hat };

std::string flavor_name(Flavor f);
std::optional<Flavor> parse_flavor(const std::string& s);
inline constexpr Flavor kAllFlavors[] = {Flavor::minus, Flavor::infinity, Flavor::plus, Flavor::hat};

struct Window {
  int lo = 0, hi = 0;
  Window() = default;
  Window(int l, int h);
};

// A morphism of U-complexes commuting with U up to the witness k.
struct PMorphism {
  GradedMap phi;
  GradedMap k;  // degree deg(phi) − 1
};

// phi∘U₁ − U₂∘phi + (−1)^{deg phi} k∘∂₁ + ∂₂∘k = 0, plus the chain-map law for phi.
bool is_pmorphism(const PMorphism& P, const ChainComplex& C1, const ChainComplex& C2);
PMorphism compose(const PMorphism& psi, const PMorphism& phi);  // psi∘phi
PMorphism add(const PMorphism& a, const PMorphism& b);

// S_U(C) = C ⊕ C·y with differential [[∂, 0], [U, −∂]]; y acts by g ↦ g·y.
ChainComplex s_u(const ChainComplex& C);
GradedModule s_u_module(const GradedModule& M);
// S_U(Φ) = [[Φ, 0], [K_Φ, (−1)^{deg Φ} Φ]]
GradedMap s_u_map(const PMorphism& P, const ChainComplex& C1, const ChainComplex& C2);

std::string su_name(const std::string& g, bool y);
std::string ey_name(const std::string& g, int n);

// C ⊗ V^∘ with differential ∂⊗1 + Y⊗u, sliced to the window; U is the u-action.
ChainComplex e_y(const ChainComplex& C, Flavor f, const Window& w);
// φ ⊗ 1 between flavor complexes built with the same flavor and window.
GradedMap e_map(const GradedMap& phi, const ChainComplex& E1, const ChainComplex& E2, Flavor f);

struct FundamentalSequences {
  ChainComplex minus, infinity, plus, hat;
  ShortExact first;   // 0 → E⁻ → E^∞ → E⁺ → 0
  ShortExact second;  // 0 → E⁻ →u E⁻ → E^∧ → 0
  LesCertificate first_cert, second_cert;
  bool ok() const { return first_cert.ok() && second_cert.ok(); }
};
FundamentalSequences fundamental_sequences(const ChainComplex& C, const Window& w);

// E1 page of the filtration spectral sequence of E^∘_Y S_U(C): the relation
// map (g⊗u^n ↦ U(g)⊗u^n + g⊗u^{n+1}) presented as a cone, with d₁ = −∂ on
// the quotient part. For minus and infinity the relation map is injective
// and this is quasi-isomorphic to the quotient C ⊗_{K[u]} V^∘; for plus and
// hat it also carries the Tor term the plain quotient misses.
ChainComplex e1_page(const ChainComplex& C, Flavor f, const Window& w);

struct ShiftRow {
  int degree = 0;
  AbelianGroup left, right;
};

struct ShiftReport {
  std::optional<int> shift;
  std::vector<int> admissible;  // shifts that compare some nonzero group and agree; if none do, all agreeing ones
  bool vacuous = false;
  std::vector<ShiftRow> per_degree;  // rows for the reported shift
  bool matched() const { return shift.has_value(); }
};

// left_j ≅ right_{j − shift} at every degree safe on both sides. Ties go to the
// smallest |shift|; vacuous when no agreeing shift compares a nonzero group.
ShiftReport compare_up_to_shift(const HomologyTable& left, const HomologyTable& right, int search = 6);

struct KoszulAReport {
  Flavor flavor = Flavor::minus;
  ShiftReport e1;                       // H(E^∘ S_U C) against H(E1 page)
  std::optional<ShiftReport> hat_su;    // hat only: against H(S_U C)
};
KoszulAReport koszul_a(const ChainComplex& C, Flavor f, const Window& w);

struct KoszulBReport {
  ShiftReport report;     // H(S_U E⁻ C) against H(C)
  bool cycle_map_chain = false;   // g ↦ (Yg)⊗u⊗1 + g⊗u⊗y is an odd chain map
  bool cycle_map_y = false;       // ... intertwining Y on C with y on S_U E⁻ C
  bool cycle_map_iso = false;     // ... inducing isomorphisms at safe degrees
  bool ok() const { return report.matched() && cycle_map_chain && cycle_map_y && cycle_map_iso; }
};
KoszulBReport koszul_b(const ChainComplex& C, const Window& w);

}  // namespace floer
