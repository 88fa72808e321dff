#pragma once
// Filtered complexes with Laurent U-coefficients and their four flavors,
// the connected-sum product complex, and verifiers for the sum maps.

#include <map>
#include <string>
#include <utility>

#include "floer/flavors.hpp"

namespace floer {

// Generators plus differential entries that are finite Laurent polynomials in
// U (deg U = −2). An entry src → dst with exponent e needs
// deg dst = deg src − 1 + 2e.
struct FilteredComplex {
  GradedModule mod;
  std::map<std::pair<std::size_t, std::size_t>, std::map<int, Int>> d;  // (src, dst) → exponent → coeff
  Ring ring;

  FilteredComplex() = default;
  explicit FilteredComplex(GradedModule m, Ring r = Ring::Z()) : mod(std::move(m)), ring(r) {}

  void add(const std::string& src, const std::string& dst, int exponent, const Int& c);
  void normalize();  // reduce into the ring, drop zero terms
  // "degree" and "d2" laws.
  ValidationReport validate() const;
  bool operator==(const FilteredComplex& o) const { return mod == o.mod && d == o.d && ring == o.ring; }
};

// Every differential exponent is ≥ 0, so the K[U]-span is a subcomplex.
bool check_positivity(const FilteredComplex& F);

std::string cm_name(const std::string& c, int m);  // c*U^m, of degree deg c − 2m

struct CMFlavors {
  ChainComplex minus, infinity, plus, hat;  // U-exponents ≥ 0, all, ≤ −1, = 0
  ChainComplex u_minus;                     // U·CM⁻: exponents ≥ 1
  ShortExact first;   // 0 → CM⁻ → CM^∞ → CM⁺ → 0
  ShortExact second;  // 0 → U·CM⁻ → CM⁻ → ĈM → 0
  LesCertificate first_cert, second_cert;
  bool ok() const { return first_cert.ok() && second_cert.ok(); }
};
// Throws PositivityViolated unless check_positivity(F).
CMFlavors cm_flavors(const FilteredComplex& F, const Window& w);

struct SumInput {
  ChainComplex c1;     // the nonbalanced factor
  ChainComplex c2hat;  // the hat-flavor factor
};
// C1 ⊗ C2 with U_⊔ = U₁⊗1 − 1⊗U₂; a missing U counts as zero. Throws ValidationError if the result fails a law.
ChainComplex product_complex(const SumInput& s);
// D_⊔ = [[∂̂_⊔, 0], [Û_⊔, −∂̂_⊔]]
ChainComplex s_u_sum(const ChainComplex& product);

// K[u₂, y₂] with u₂-exponents 0..N, ∂ = 0 and U = u₂-multiplication.
ChainComplex case1_model(int N);
// H(S_{U_⊔}(C1 ⊗ M₂)) against H(C1) ⊗ K[y₂] on the window.
ShiftReport case1_check(const ChainComplex& c1, int N, const Window& w);

// S_{U_⊔}(V^∘(u₁) ⊗ C) restricted to the window, with U_⊔ = u₁⊗1 − 1⊗U.
ChainComplex case2_left(const ChainComplex& c, Flavor f, const Window& w);
// Matches case2_left against E^∘(S_U C) under u₁^n⊗g⊗1 ↦ (−1)^n g⊗1⊗u^n and
// u₁^n⊗g⊗y ↦ (−1)^{n+1} g⊗y⊗u^n. Throws IdentificationFailed at the first
// missing generator or mismatching entry.
bool case2_check(const ChainComplex& c, Flavor f, const Window& w);

// Candidate maps between C_# and Ĉ_⊔. V₀ and V₁† are odd, V₁ and V₀† even.
struct ConnSumMaps {
  ChainComplex sharp;
  GradedMap v0, v1;      // C_# → Ĉ_⊔
  GradedMap v0d, v1d;    // Ĉ_⊔ → C_#
  GradedMap h_sharp;     // C_# → C_#, odd
  GradedMap a, b, c, d;  // blocks of the odd homotopy on S_{U_⊔}, each Ĉ_⊔ → Ĉ_⊔
};
// Tags: "parity", "dV0+V0d=0", "dV1-V1d-UV0=0", "dV0'-V0'd=0",
// "dV1'+V1'd+V0'U=0", "V'V=1+[d,H]", "VV'=1+[D,M]".
CheckReport verify_sum_maps(const ChainComplex& product, const ConnSumMaps& m);

// C_# = S_{U_⊔}(P) with degrees raised by one and differential −D_⊔; V the two
// projections, V† the two inclusions, every homotopy zero.
ConnSumMaps identity_sum_maps(const ChainComplex& product);

}  // namespace floer
