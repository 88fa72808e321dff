#pragma once
// Seeded generators for property tests and the golden corpus. Everything is
// drawn from one std::mt19937_64 through `uniform`, so a seed fixes the output.

#include <cstdint>
#include <random>

#include "floer/connsum.hpp"

namespace floer {

struct RandomParams {
  int max_rank = 8;
  int min_degree = -6, max_degree = 6;
  int max_entry = 3;  // |coefficient| bound after conjugation
  Ring ring = Ring::Z();
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }
  int nonzero(int bound);       // in [−bound, bound] \ {0}

 private:
  std::mt19937_64 g_;
};

// Direct sum of single generators and pairs a → b (coefficient up to
// max_entry), conjugated by a degree-preserving unimodular change of basis.
ChainComplex random_complex(Rng& r, const RandomParams& p);
// Sums of truncated towers A ⊗ K[u]/u^m with U = u, conjugated.
ChainComplex random_u_complex(Rng& r, const RandomParams& p);
// S_U of a U-complex plus a piece with Y = 0, conjugated.
ChainComplex random_y_complex(Rng& r, const RandomParams& p);
// Pairs a → U^e b with e ∈ {0, 1} and singles, conjugated by filtered elementary moves.
FilteredComplex random_filtered(Rng& r, const RandomParams& p);

struct PStep {
  ChainComplex target;
  PMorphism map;
};
// One of: identity, change of basis, inclusion into C ⊕ D, U, ∂, c·1 + ∂h + h∂;
// then possibly a perturbation U₂ ↦ U₂ + ∂H + H∂ of the target.
PStep random_pmorphism(Rng& r, const ChainComplex& c, const RandomParams& p);

struct Composable {
  ChainComplex a, b, c;
  PMorphism f, g;          // a → b → c
  PMorphism f2;            // a second p-morphism a → b of the same degree as f
};
// The source may be a sum projected onto a factor and may carry a
// perturbed U; every map is checked with is_pmorphism before returning.
Composable random_composable(Rng& r, const RandomParams& p);

// C^o and C̄ independent U-complexes with every o/s/u cross block zero; C̄
// splits into C^s (high degrees) and C^u (low degrees) at a random threshold.
BalancedComponents random_decoupled(Rng& r, const RandomParams& p);

}  // namespace floer
